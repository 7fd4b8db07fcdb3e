# -*- coding: utf-8 -*-

import os

SECRET_KEY = os.environ.get('ELLDED_SECRET_KEY', 'ellded-is-not-a-web-service')

DATABASES = {}

INSTALLED_APPS = (
    'ellded',
    )

USE_TZ = True

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s %(message)s',
            },
        },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
            },
        },
    'loggers': {
        'ellded': {
            'handlers': ['console'],
            'level': 'DEBUG' if os.environ.get('ELLDED_DEBUG') else 'INFO',
            'propagate': False,
            },
        },
    }

from ellded.defaults import *

if os.environ.get('ELLDED_TOL'):
    ELLDED_CHECK_TOL = float(os.environ['ELLDED_TOL'])

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

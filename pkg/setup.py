# -*- coding: utf-8 -*-

import os

from setuptools import setup, find_packages

PACKAGE = os.environ.get('PACKAGE', 'django-ellded')
VERSION = os.environ.get('VERSION', '0.1.0')

setup(name=PACKAGE, version=VERSION,
      packages=find_packages('src/python'), package_dir={'': 'src/python'},
      author='Rentalita',
      author_email='hello@rentalita.com',
      description='Django Ellded computes elliptic Apostol-Dedekind sums and verifies their reciprocity laws.',
      url='http://rentalita.github.com/django-ellded',
      install_requires=[
          'Django>=4.2',
          'numpy>=1.24',
          'jsonschema>=4.0',
      ],
      include_package_data=True,
)

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

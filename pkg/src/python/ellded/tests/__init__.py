# -*- coding: utf-8 -*-

from hypothesis import settings

# series evaluations are slow and must not depend on the run
settings.register_profile('ellded', deadline=None, derandomize=True, max_examples=25)
settings.load_profile('ellded')

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

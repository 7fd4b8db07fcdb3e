# -*- coding: utf-8 -*-

from django.dispatch import Signal

# sender: check family name; kwargs: verdict
check_complete = Signal()

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

# -*- coding: utf-8 -*-

from django import forms

from ellded.qseries import SeriesPolicy, TauPoint
from ellded.utils import get_setting, parse_complex

FORMAT_CHOICES = (
    ('json', 'json'),
    ('csv', 'csv'),
    ('pretty', 'pretty'),
    )


class RunConfigForm(forms.Form):
    """
    Options shared by the ``evaluate`` and ``verify`` commands.

    Syntax problems are validation errors. Whether a well-formed ``tau``
    lies in the upper half-plane is decided by :class:`TauPoint`, which
    raises a domain error instead.

    """

    tau = forms.CharField(required=False)
    tol = forms.FloatField(required=False)
    seed = forms.IntegerField(required=False)
    format = forms.ChoiceField(choices=FORMAT_CHOICES, required=False)
    max_terms = forms.IntegerField(required=False, min_value=1)

    def clean_tau(self):
        text = self.cleaned_data['tau']
        if not text:
            text = get_setting('ELLDED_DEFAULT_TAU')
        try:
            return parse_complex(text)
        except ValueError:
            raise forms.ValidationError('tau must be written as a+bi, got %r' % text)

    def clean_tol(self):
        tol = self.cleaned_data['tol']
        if tol is None:
            return None
        if not 0 < tol <= get_setting('ELLDED_MAX_TOL'):
            raise forms.ValidationError('tol must lie in (0, %g]' % get_setting('ELLDED_MAX_TOL'))
        return tol

    def clean_seed(self):
        seed = self.cleaned_data['seed']
        return get_setting('ELLDED_DEFAULT_SEED') if seed is None else seed

    def clean_format(self):
        return self.cleaned_data['format'] or get_setting('ELLDED_DEFAULT_FORMAT')

    def tau_point(self):
        return TauPoint(self.cleaned_data['tau'])

    def policy(self):
        return SeriesPolicy.from_settings(max_terms=self.cleaned_data['max_terms'])

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

# -*- coding: utf-8 -*-

from django.test import SimpleTestCase

from ellded.exceptions import HalfPlaneError
from ellded.forms import RunConfigForm


class RunConfigFormTest(SimpleTestCase):

    def test_defaults(self):
        form = RunConfigForm(data={})
        self.assertTrue(form.is_valid(), form.errors)
        self.assertEqual(form.cleaned_data['tau'], 1j)
        self.assertEqual(form.cleaned_data['format'], 'json')
        self.assertEqual(form.cleaned_data['seed'], 7)
        self.assertIsNone(form.cleaned_data['tol'])
        self.assertEqual(form.policy().max_terms, 10 ** 6)

    def test_tau(self):
        form = RunConfigForm(data={'tau': '0.3+1.1i'})
        self.assertTrue(form.is_valid(), form.errors)
        self.assertEqual(form.tau_point().tau, complex(0.3, 1.1))

    def test_bad_tau(self):
        form = RunConfigForm(data={'tau': '0.3,1.1'})
        self.assertFalse(form.is_valid())
        self.assertIn('tau', form.errors)

    def test_lower_half_plane_is_a_domain_error(self):
        form = RunConfigForm(data={'tau': '0-1i'})
        self.assertTrue(form.is_valid(), form.errors)
        with self.assertRaises(HalfPlaneError):
            form.tau_point()

    def test_tol_range(self):
        for tol in (0, -1e-9, 0.5):
            form = RunConfigForm(data={'tol': tol})
            self.assertFalse(form.is_valid(), tol)
            self.assertIn('tol', form.errors)
        form = RunConfigForm(data={'tol': 1e-300})
        self.assertTrue(form.is_valid(), form.errors)

    def test_format(self):
        self.assertFalse(RunConfigForm(data={'format': 'xml'}).is_valid())
        form = RunConfigForm(data={'format': 'csv'})
        self.assertTrue(form.is_valid(), form.errors)
        self.assertEqual(form.cleaned_data['format'], 'csv')

    def test_max_terms(self):
        self.assertFalse(RunConfigForm(data={'max_terms': 0}).is_valid())
        form = RunConfigForm(data={'max_terms': 500})
        self.assertTrue(form.is_valid(), form.errors)
        self.assertEqual(form.policy().max_terms, 500)

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

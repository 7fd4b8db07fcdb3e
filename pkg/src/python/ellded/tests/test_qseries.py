# -*- coding: utf-8 -*-

import math
import warnings

from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st

from ellded import qseries
from ellded.exceptions import (ConvergenceError, DomainError, HalfPlaneError,
                               SingularityError, SlowConvergenceWarning)
from ellded.qseries import ComplexVal, SeriesPolicy, TauPoint

I = TauPoint(1j)
TIGHT = SeriesPolicy(tol=1e-15)

taus = st.builds(complex, st.floats(min_value=-0.5, max_value=0.5),
                 st.floats(min_value=0.8, max_value=1.6)).map(TauPoint)


def relative(a, b):
    return abs(complex(a) - complex(b)) / max(abs(complex(b)), 1e-300)


class ComplexValTest(SimpleTestCase):

    def test_rejects_negative_error(self):
        with self.assertRaises(ValueError):
            ComplexVal(1.0, -1e-3)

    def test_errors_propagate(self):
        a, b = ComplexVal(1 + 1j, 1e-6), ComplexVal(2.0, 2e-6)
        self.assertGreaterEqual((a + b).err, 3e-6)
        self.assertGreaterEqual((a - b).err, 3e-6)
        self.assertGreaterEqual((a * b).err, abs(a.value) * 2e-6 + 2 * 1e-6)
        self.assertEqual((a * 2).value, 2 + 2j)
        self.assertEqual((3 - b).value, 1.0)

    def test_division(self):
        quotient = ComplexVal(1.0, 1e-9) / ComplexVal(4.0, 1e-9)
        self.assertEqual(quotient.value, 0.25)
        self.assertGreater(quotient.err, 0)
        with self.assertRaises(ZeroDivisionError):
            ComplexVal(1.0) / ComplexVal(1e-10, 1e-9)

    def test_agrees(self):
        a = ComplexVal(1.0, 1e-8)
        self.assertTrue(a.agrees(ComplexVal(1.0 + 1.5e-8, 1e-8)))
        self.assertFalse(a.agrees(1.0 + 1e-6))
        self.assertTrue(a.agrees(1.0 + 1e-6, slack=1e-5))

    def test_csum(self):
        total = qseries.csum([ComplexVal(1e16, 1.0), 1.0, ComplexVal(-1e16, 2.0)])
        self.assertEqual(total.value, 1.0)
        self.assertGreaterEqual(total.err, 3.0)

    def test_record(self):
        self.assertEqual(ComplexVal(1 - 2j, 0.5).as_record(), {'re': 1.0, 'im': -2.0, 'err': 0.5})

    def test_two_pi_i_power(self):
        self.assertEqual(qseries.two_pi_i_power(0), 1)
        self.assertEqual(qseries.two_pi_i_power(2), -(2 * math.pi) ** 2)
        self.assertEqual(qseries.two_pi_i_power(4), (2 * math.pi) ** 4)
        self.assertLess(abs(qseries.two_pi_i_power(3) + 1j * (2 * math.pi) ** 3), 1e-10)


class TauPointTest(SimpleTestCase):

    def test_parse(self):
        tau = TauPoint.parse('0.3+1.1i')
        self.assertEqual(tau.tau, complex(0.3, 1.1))
        self.assertEqual(tau.imag, 1.1)
        self.assertEqual(str(tau), '0.3+1.1i')

    def test_nome(self):
        self.assertAlmostEqual(I.nome.real, math.exp(-2 * math.pi), delta=1e-18)
        self.assertAlmostEqual(I.nome.imag, 0.0, delta=1e-18)

    def test_half_plane(self):
        for tau in (1.0, 1 - 0.5j, complex(0.2, 0.0), complex(0.0, float('nan'))):
            with self.assertRaises(HalfPlaneError):
                TauPoint(tau)

    def test_shifted_and_scaled(self):
        self.assertEqual(I.shifted(2).tau, 2 + 1j)
        self.assertEqual(I.scaled(3).tau, 3j)
        self.assertEqual(TauPoint(1j), I)


class SeriesPolicyTest(SimpleTestCase):

    def test_from_settings(self):
        policy = SeriesPolicy.from_settings(max_terms=None)
        self.assertEqual(policy, SeriesPolicy(1e-12, 10 ** 6, 0.05))
        self.assertEqual(SeriesPolicy.from_settings(max_terms=50).max_terms, 50)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            SeriesPolicy(tol=0.0)
        with self.assertRaises(ValueError):
            SeriesPolicy(max_terms=0)

    def test_rejects_low_modulus(self):
        with self.assertRaises(HalfPlaneError):
            SeriesPolicy().term_limit(TauPoint(0.04j))

    def test_slow_regime(self):
        policy = SeriesPolicy()
        with self.assertWarns(SlowConvergenceWarning):
            with self.assertLogs('ellded.qseries', 'WARNING'):
                limit = policy.term_limit(TauPoint(complex(0.1, 0.08)))
        self.assertEqual(limit, 10 ** 7)
        self.assertEqual(policy.term_limit(I), 10 ** 6)

    def test_term_cap(self):
        policy = SeriesPolicy(max_terms=2)
        with self.assertRaises(ConvergenceError) as context:
            qseries.eisenstein(2, TauPoint(0.5j), policy)
        self.assertEqual(context.exception.terms, 2)
        self.assertIsInstance(context.exception.partial, ComplexVal)
        self.assertIsInstance(context.exception, DomainError)


class DivisorSigmaTest(SimpleTestCase):

    def test_values(self):
        self.assertEqual(qseries.divisor_sigma(1, 12), 28)
        self.assertEqual(qseries.divisor_sigma(3, 2), 9)
        self.assertEqual(qseries.divisor_sigma(0, 12), 6)
        self.assertEqual(qseries.divisor_sigma(5, 1), 1)
        self.assertEqual(qseries.divisor_sigma(1, 997), 998)

    def test_rejects_zero(self):
        with self.assertRaises(ValueError):
            qseries.divisor_sigma(1, 0)


class EisensteinTest(SimpleTestCase):

    def test_cusp_limit(self):
        tau = TauPoint(40j)
        e4 = qseries.eisenstein(2, tau)
        self.assertLess(relative(e4.value, math.pi ** 4 / 45), 1e-12)
        self.assertLess(abs(e4.value.imag), 1e-12)
        g4 = qseries.eisenstein_normalized(2, tau)
        self.assertLess(abs(g4.value - 1.0 / 240), 1e-12)

    def test_values_at_i(self):
        self.assertLess(abs(qseries.eisenstein(1, I).value - math.pi), 1e-9)
        self.assertLess(abs(qseries.eisenstein(3, I).value), 1e-10)

    def test_rejects_n(self):
        with self.assertRaises(ValueError):
            qseries.eisenstein(0, I)
        with self.assertRaises(ValueError):
            qseries.eisenstein_tau_derivative(0, I)

    @given(taus, st.integers(min_value=1, max_value=5))
    def test_periodic(self, tau, n):
        self.assertTrue(qseries.eisenstein(n, tau).agrees(qseries.eisenstein(n, tau.shifted()),
                                                          slack=1e-12))

    @given(taus, st.integers(min_value=2, max_value=4))
    def test_modular(self, tau, n):
        inverted = TauPoint(-1 / tau.tau)
        lhs = qseries.eisenstein(n, inverted).value
        rhs = tau.tau ** (2 * n) * qseries.eisenstein(n, tau).value
        # E_4 vanishes at rho, which lies in the sampled box
        self.assertLess(abs(lhs - rhs), 1e-9 * max(1.0, abs(rhs)))

    @given(taus)
    def test_quasi_modular(self, tau):
        inverted = TauPoint(-1 / tau.tau)
        lhs = qseries.eisenstein(1, inverted).value
        rhs = tau.tau ** 2 * qseries.eisenstein(1, tau).value - 2j * math.pi * tau.tau
        self.assertLess(abs(lhs - rhs), 1e-9 * max(1.0, abs(rhs)))

    def test_slow_regime_value(self):
        tau = TauPoint(0.08j)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', SlowConvergenceWarning)
            with self.assertLogs('ellded.qseries', 'WARNING'):
                slow = qseries.eisenstein(2, tau).value
        fast = qseries.eisenstein(2, TauPoint(12.5j)).value
        self.assertLess(relative(slow, fast / tau.tau ** 4), 1e-9)

    def test_tau_derivative_at_cusp(self):
        self.assertLess(abs(qseries.eisenstein_tau_derivative(2, TauPoint(40j)).value), 1e-10)

    def test_tau_derivative(self):
        tau = TauPoint(complex(0.1, 1.1))
        h = 1e-5
        for n in (1, 2, 3):
            derivative = qseries.eisenstein_tau_derivative(n, tau, TIGHT).value
            forward = qseries.eisenstein(n, TauPoint(tau.tau + h), TIGHT).value
            backward = qseries.eisenstein(n, TauPoint(tau.tau - h), TIGHT).value
            self.assertLess(relative((forward - backward) / (2 * h), derivative), 1e-6)

    def test_tolerance_is_honoured(self):
        tau = TauPoint(complex(0.3, 0.9))
        coarse = qseries.eisenstein(3, tau, SeriesPolicy(tol=1e-8))
        fine = qseries.eisenstein(3, tau, SeriesPolicy(tol=1e-13))
        self.assertTrue(fine.agrees(coarse))
        self.assertLessEqual(abs(coarse.value - fine.value), coarse.err + fine.err)


class EllipticBernoulliTest(SimpleTestCase):

    def test_order_zero(self):
        self.assertEqual(qseries.elliptic_bernoulli(0, 0.3, 0.7, I).value, 1)

    def test_pole(self):
        for x, y in ((0, 0), (1, 2), (-3, 0)):
            with self.assertRaises(SingularityError):
                qseries.elliptic_bernoulli(1, x, y, I)

    def test_rejects_negative_order(self):
        with self.assertRaises(ValueError):
            qseries.elliptic_bernoulli(-1, 0.3, 0.1, I)

    def test_half_period(self):
        for tau in (I, TauPoint(complex(0.2, 1.3))):
            self.assertLess(abs(qseries.elliptic_bernoulli(1, 0.5, 0, tau).value), 1e-12)

    def test_b2_at_origin(self):
        for tau in (I, TauPoint(complex(-0.3, 1.1))):
            b2 = qseries.elliptic_bernoulli(2, 0, 0, tau).value
            e2 = qseries.eisenstein(1, tau).value
            self.assertLess(abs(b2 - e2 / (2 * math.pi ** 2)), 1e-11)

    @given(taus, st.integers(min_value=1, max_value=5),
           st.floats(min_value=0.05, max_value=0.95), st.floats(min_value=0.05, max_value=0.95))
    def test_periodic(self, tau, m, x, y):
        value = qseries.elliptic_bernoulli(m, x, y, tau)
        self.assertTrue(value.agrees(qseries.elliptic_bernoulli(m, x + 1, y, tau), slack=1e-10))
        self.assertTrue(value.agrees(qseries.elliptic_bernoulli(m, x, y - 1, tau), slack=1e-10))

    @given(taus, st.integers(min_value=1, max_value=5),
           st.floats(min_value=0.05, max_value=0.95), st.floats(min_value=0.05, max_value=0.95))
    def test_parity(self, tau, m, x, y):
        value = qseries.elliptic_bernoulli(m, x, y, tau).value
        mirrored = qseries.elliptic_bernoulli(m, -x, -y, tau).value
        self.assertLess(abs(mirrored - (-1) ** m * value), 1e-9 * max(1.0, abs(value)))

    def test_x_derivative(self):
        tau = TauPoint(complex(0.2, 1.3))
        x, y, h = 0.3, 0.2, 1e-5
        forward = qseries.elliptic_bernoulli(1, x + h, y, tau).value
        backward = qseries.elliptic_bernoulli(1, x - h, y, tau).value
        z = x - y * tau.tau
        slope = ((qseries.weierstrass_p_deriv(0, z, tau).value + qseries.eisenstein(1, tau).value)
                 / (2j * math.pi))
        self.assertLess(relative((forward - backward) / (2 * h), slope), 1e-6)

    def test_b2_from_sigma(self):
        tau = TauPoint(1.2j)
        x = 0.3
        e2 = qseries.eisenstein(1, tau).value
        de2 = qseries.eisenstein_tau_derivative(1, tau).value
        dlog = qseries.log_sigma_tau_derivative(x, tau).value
        expected = (2 * dlog - de2 * x ** 2 - e2 / (1j * math.pi)) / (2j * math.pi)
        self.assertLess(abs(qseries.elliptic_bernoulli(2, x, 0, tau).value - expected), 1e-10)


class WeierstrassTest(SimpleTestCase):

    def test_zeta_expansion(self):
        z = 0.05
        es = [qseries.eisenstein(k, I).value for k in range(2, 9)]
        expected = 1 / z - sum(e * z ** (2 * k - 1) for k, e in zip(range(2, 9), es))
        self.assertLess(abs(qseries.weierstrass_zeta(z, I).value - expected), 1e-10)

    def test_p_expansion(self):
        tau = TauPoint(complex(0.1, 1.2))
        z = complex(0.05, 0.02)
        es = [qseries.eisenstein(k, tau).value for k in range(2, 9)]
        expected = 1 / z ** 2 + sum((2 * k - 1) * e * z ** (2 * k - 2)
                                    for k, e in zip(range(2, 9), es))
        self.assertLess(abs(qseries.weierstrass_p_deriv(0, z, tau).value - expected), 1e-9)

    @given(taus, st.floats(min_value=0.05, max_value=0.95), st.floats(min_value=0.05, max_value=0.95))
    def test_zeta_quasi_periods(self, tau, x, y):
        z = x - y * tau.tau
        zeta = qseries.weierstrass_zeta(z, tau).value
        e2 = qseries.eisenstein(1, tau).value
        size = max(1.0, abs(zeta))
        self.assertLess(abs(qseries.weierstrass_zeta(z + 1, tau).value - zeta - e2), 1e-10 * size)
        shifted = qseries.weierstrass_zeta(z + tau.tau, tau).value
        self.assertLess(abs(shifted - zeta - e2 * tau.tau + 2j * math.pi), 1e-10 * size)
        self.assertLess(abs(qseries.weierstrass_zeta(-z, tau).value + zeta), 1e-10 * size)

    @given(taus, st.floats(min_value=0.05, max_value=0.95), st.floats(min_value=0.05, max_value=0.95),
           st.integers(min_value=0, max_value=4))
    def test_p_parity_and_periods(self, tau, x, y, k):
        z = x - y * tau.tau
        value = qseries.weierstrass_p_deriv(k, z, tau).value
        size = max(1.0, abs(value))
        mirrored = qseries.weierstrass_p_deriv(k, -z, tau).value
        self.assertLess(abs(mirrored - (-1) ** k * value), 1e-9 * size)
        for period in (1, tau.tau, tau.tau - 2):
            shifted = qseries.weierstrass_p_deriv(k, z + period, tau).value
            self.assertLess(abs(shifted - value), 1e-9 * size)

    def test_p_derivative(self):
        tau = TauPoint(complex(0.1, 1.2))
        z, h = complex(0.3, 0.2), 1e-5
        for k in (0, 1, 2):
            forward = qseries.weierstrass_p_deriv(k, z + h, tau).value
            backward = qseries.weierstrass_p_deriv(k, z - h, tau).value
            exact = qseries.weierstrass_p_deriv(k + 1, z, tau).value
            self.assertLess(relative((forward - backward) / (2 * h), exact), 1e-6)

    def test_zeta_derivative(self):
        z = complex(0.3, 0.2)
        self.assertEqual(qseries.weierstrass_zeta_deriv(0, z, I).value,
                         qseries.weierstrass_zeta(z, I).value)
        self.assertEqual(qseries.weierstrass_zeta_deriv(2, z, I).value,
                         -qseries.weierstrass_p_deriv(1, z, I).value)
        with self.assertRaises(ValueError):
            qseries.weierstrass_zeta_deriv(-1, z, I)

    def test_lattice_points(self):
        for z in (0, 1, 1j, complex(2, -3)):
            with self.assertRaises(SingularityError):
                qseries.weierstrass_zeta(z, I)
            with self.assertRaises(SingularityError):
                qseries.weierstrass_p_deriv(1, z, I)

    def test_log_sigma_strip(self):
        with self.assertRaises(ValueError):
            qseries.log_sigma_tau_derivative(1.5j, I)
        self.assertLess(abs(qseries.log_sigma_tau_derivative(0, I).value), 1e-15)


class ZetaOddTest(SimpleTestCase):

    def test_apery(self):
        self.assertLess(abs(qseries.zeta_odd(1) - 1.2020569031595943), 1e-12)

    def test_decreasing(self):
        values = [qseries.zeta_odd(n) for n in range(1, 7)]
        self.assertEqual(values, sorted(values, reverse=True))
        self.assertTrue(all(1.0 < value < 1.21 for value in values))
        self.assertLess(abs(qseries.zeta_odd(2) - 1.0369277551433699), 1e-12)

    def test_rejects_n(self):
        with self.assertRaises(ValueError):
            qseries.zeta_odd(0)

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

# -*- coding: utf-8 -*-

import math

from django.test import SimpleTestCase
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ellded import symbols
from ellded import utils
from ellded.exact import CoprimePair
from ellded.exceptions import CoprimalityError, DomainError, SingularityError
from ellded.qseries import TauPoint
from ellded.symbols import RademacherSpec, Route

I = TauPoint(1j)
SKEW = TauPoint(complex(0.3, 1.1))


class EllipticSumTest(SimpleTestCase):

    def test_p_one(self):
        for route in Route:
            result = symbols.elliptic_apostol_sum(2, CoprimePair(1, 5), I, route)
            self.assertEqual(result.value.value, 0)

    def test_record(self):
        result = symbols.elliptic_apostol_sum(1, CoprimePair(3, 2), I, 'bernoulli_product')
        self.assertIs(result.route, Route.BERNOULLI_PRODUCT)
        record = result.as_record()
        self.assertEqual(record['op'], 'elliptic-sum')
        self.assertEqual(record['params'], {'n': 1, 'p': 3, 'q': 2, 'tau': '0.0+1.0i'})
        self.assertEqual(record['route'], 'bernoulli_product')

    def test_rejects(self):
        with self.assertRaises(ValueError):
            symbols.elliptic_apostol_sum(0, CoprimePair(3, 2), I)
        with self.assertRaises(ValueError):
            symbols.elliptic_apostol_sum(1, CoprimePair(3, 2), I, 'contour')

    def test_division_points(self):
        points = symbols.division_points(3)
        self.assertEqual(len(points), 8)
        self.assertEqual(points[0], (0, 1))
        self.assertNotIn((0, 0), points)

    def test_routes_agree(self):
        pair = CoprimePair(7, 3)
        zeta = symbols.elliptic_apostol_sum(2, pair, I, Route.ZETA_DERIVATIVE).value
        product = symbols.elliptic_apostol_sum(2, pair, I, Route.BERNOULLI_PRODUCT).value
        self.assertTrue(zeta.agrees(product))
        self.assertLess(abs(zeta.value - product.value), 1e-8)

    def test_routes_agree_with_negative_q(self):
        pair = CoprimePair(5, -2)
        zeta = symbols.elliptic_apostol_sum(1, pair, SKEW, Route.ZETA_DERIVATIVE).value
        product = symbols.elliptic_apostol_sum(1, pair, SKEW, Route.BERNOULLI_PRODUCT).value
        self.assertTrue(zeta.agrees(product))

    def test_deterministic(self):
        pair = CoprimePair(5, 3)
        first = symbols.elliptic_apostol_sum(1, pair, SKEW).value
        second = symbols.elliptic_apostol_sum(1, pair, SKEW).value
        self.assertEqual(first, second)

    def test_axioms(self):
        residuals = symbols.verify_symbol_axioms(1, CoprimePair(5, 2), SKEW)
        self.assertEqual(sorted(residuals), ['oddness', 'periodicity', 'symmetry'])
        for name, residual in residuals.items():
            self.assertLess(abs(residual), 1e-9, name)

    def test_axioms_with_negative_q(self):
        residuals = symbols.verify_symbol_axioms(2, CoprimePair(5, -3), I, Route.BERNOULLI_PRODUCT)
        self.assertEqual(sorted(residuals), ['oddness', 'periodicity'])
        for name, residual in residuals.items():
            self.assertLess(abs(residual), 1e-9, name)


class ReciprocityTest(SimpleTestCase):

    def test_reciprocity(self):
        for tau in (I, SKEW):
            for n, p, q in ((1, 3, 2), (2, 5, 3), (1, 4, 1)):
                residual = symbols.reciprocity_residual(n, CoprimePair(p, q), tau)
                self.assertLess(abs(residual), 1e-8, (n, p, q, str(tau)))

    def test_reciprocity_by_products(self):
        residual = symbols.reciprocity_residual(1, CoprimePair(3, 2), SKEW,
                                                Route.BERNOULLI_PRODUCT)
        self.assertLess(abs(residual), 1e-8)

    def test_needs_positive_q(self):
        with self.assertRaises(CoprimalityError):
            symbols.reciprocity_residual(1, CoprimePair(3, -2), I)
        with self.assertRaises(CoprimalityError):
            symbols.reciprocity_rhs(1, CoprimePair(3, -2), I)

    @given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=9),
           st.integers(min_value=1, max_value=9))
    @settings(max_examples=10)
    def test_rhs_symmetric(self, n, p, q):
        assume(math.gcd(p, q) == 1)
        forward = symbols.reciprocity_rhs(n, CoprimePair(p, q), SKEW)
        backward = symbols.reciprocity_rhs(n, CoprimePair(q, p), SKEW)
        self.assertLess(abs(forward.value - backward.value), 1e-12 * max(1.0, abs(forward)))

    def test_degeneration(self):
        for n, p, q in ((1, 3, 1), (1, 5, 3), (2, 5, 2)):
            pair = CoprimePair(p, q)
            near = symbols.degeneration_residual(n, pair, TauPoint(10j))
            far = symbols.degeneration_residual(n, pair, TauPoint(20j))
            self.assertLess(far, 1e-6)
            self.assertLessEqual(far, near)


class GeneratingTest(SimpleTestCase):

    def test_p_one(self):
        self.assertEqual(symbols.generating_D(CoprimePair(1, 4), I, 0.1).value, 0)

    def test_odd_and_periodic_in_q(self):
        x = 0.02
        value = symbols.generating_D(CoprimePair(3, 2), SKEW, x)
        negated = symbols.generating_D(CoprimePair(3, -2), SKEW, x)
        shifted = symbols.generating_D(CoprimePair(3, 5), SKEW, x)
        self.assertLess(abs(value.value + negated.value), 1e-10)
        self.assertLess(abs(value.value - shifted.value), 1e-10)

    def test_even_part(self):
        pair = CoprimePair(3, 2)
        x = 0.01
        even = (symbols.generating_D(pair, I, x).value
                + symbols.generating_D(pair, I, -x).value) / 2
        constant = symbols.generating_D(pair, I, 0).value
        coefficients = [symbols.elliptic_apostol_sum(n, pair, I).value.value for n in (1, 2, 3)]
        series = sum(c * x ** (2 * n) for n, c in zip((1, 2, 3), coefficients))
        self.assertLess(abs(even - constant - series), 1e-10)

    def test_d_domain(self):
        with self.assertRaises(SingularityError):
            symbols.generating_D(CoprimePair(3, 2), I, 0.2)

    def test_r_symmetric(self):
        forward = symbols.generating_R(CoprimePair(3, 2), SKEW, 0.01)
        backward = symbols.generating_R(CoprimePair(2, 3), SKEW, 0.01)
        self.assertLess(abs(forward.value - backward.value), 1e-9)

    def test_r_domain(self):
        with self.assertRaises(SingularityError):
            symbols.generating_R(CoprimePair(3, 2), I, 0)
        with self.assertRaises(SingularityError):
            symbols.generating_R(CoprimePair(3, 2), I, 0.2)
        with self.assertRaises(DomainError):
            symbols.generating_R(CoprimePair(3, -2), I, 0.01)

    def test_r_taylor_coefficient(self):
        pair = CoprimePair(2, 1)
        estimate = utils.taylor_coefficient(lambda x: symbols.generating_R(pair, I, x).value, 2)
        expected = symbols.reciprocity_rhs(1, pair, I).value
        self.assertLess(abs(estimate - expected), 1e-6)

    def test_residual_is_constant(self):
        pair = CoprimePair(3, 2)
        for tau in (I, TauPoint(complex(0.2, 1.2))):
            constant = symbols.reciprocity_constant(pair, tau).value
            for x in (0.003, 0.007, 0.011):
                residual = symbols.generating_reciprocity_residual(pair, tau, x)
                self.assertLess(abs(residual.value - constant), 1e-8, (str(tau), x))


class BernoulliProductTest(SimpleTestCase):

    def test_residual_is_constant(self):
        pair = CoprimePair(3, 2)
        constant = symbols.reciprocity_constant(pair, I).value
        closed = symbols.bernoulli_reciprocity_constant(pair, I).value
        self.assertLess(abs(closed - constant), 1e-10)
        for s in (0.004, 0.009, -0.006):
            residual = symbols.bernoulli_reciprocity_residual(pair, s, I)
            self.assertLess(abs(residual.value - constant), 1e-8, s)

    def test_domain(self):
        with self.assertRaises(SingularityError):
            symbols.bernoulli_reciprocity_residual(CoprimePair(3, 2), 0, I)
        with self.assertRaises(SingularityError):
            symbols.bernoulli_reciprocity_residual(CoprimePair(3, 2), 0.5, I)


class RademacherTest(SimpleTestCase):

    def test_vanishing_example(self):
        spec = RademacherSpec((1, 1), (1, 1), (1, 1), (0, 0), (0, 0), (0.5, 0), 1, 1)
        self.assertLess(abs(symbols.rademacher_sum(spec, I).value), 1e-12)

    def test_degenerate(self):
        with self.assertRaises(DomainError):
            RademacherSpec((1, 1), (1, 1), (1, 1), (0, 0), (0, 0), (0, 0), 1, 1)
        with self.assertRaises(DomainError):
            RademacherSpec((2, 1), (1, 1), (2, 1), (0.5, 0), (0.25, 0), (1.5, 0), 1, 1)

    def test_invalid_vectors(self):
        with self.assertRaises(DomainError):
            RademacherSpec((0, 1), (1, 1), (1, 1), (0, 0), (0, 0), (0.5, 0), 1, 1)
        with self.assertRaises(DomainError):
            RademacherSpec((1.5, 1), (1, 1), (1, 1), (0, 0), (0, 0), (0.5, 0), 1, 1)
        with self.assertRaises(ValueError):
            RademacherSpec((1, 1), (1, 1), (1, 1), (0, 0), (0, 0), (0.5, 0), -1, 1)

    def test_rotation(self):
        spec = RademacherSpec.reciprocity_substitution(3, 2, 0.013, 0.007, 1, 1)
        self.assertEqual(spec.rotated().rotated().rotated(), spec)
        self.assertEqual(spec.rotated().vec_a, (3, 3))
        self.assertEqual(spec.with_orders(2, 0).m, 2)
        self.assertEqual(spec.as_params()['z'], [-0.014, 0.0])

    def test_coefficient_identities(self):
        for p, q in ((3, 2), (5, 3)):
            residuals = symbols.rademacher_coefficient_residuals(CoprimePair(p, q), 0.013, 0.007, I)
            self.assertEqual(sorted(residuals), ['mixed', 'quadratic_first', 'quadratic_second'])
            for name, residual in residuals.items():
                self.assertLess(abs(residual), 1e-7, (p, q, name))

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

# -*- coding: utf-8 -*-

import math

from django.test import SimpleTestCase

from ellded import qseries
from ellded.exceptions import SingularityError
from ellded.lattice import LatticeCutoff, kronecker_direct, weierstrass_p_direct
from ellded.qseries import TauPoint

I = TauPoint(1j)


class LatticeCutoffTest(SimpleTestCase):

    def test_points(self):
        points = LatticeCutoff(2).points(I)
        self.assertEqual(points.size, 24)
        self.assertNotIn(0j, list(points))
        self.assertIn(complex(-2, 2), list(points))

    def test_rejects_radius(self):
        with self.assertRaises(ValueError):
            LatticeCutoff(0)


class KroneckerTest(SimpleTestCase):

    def test_rejects_low_weight(self):
        with self.assertRaises(ValueError):
            kronecker_direct(2, 0.3, I, LatticeCutoff(10))

    def test_rejects_lattice_point(self):
        with self.assertRaises(SingularityError):
            kronecker_direct(3, complex(1, 1), I, LatticeCutoff(10))

    def test_parity(self):
        tau = TauPoint(complex(0.2, 1.1))
        z = complex(-0.3, 0.45)
        for k in (3, 4):
            value = kronecker_direct(k, z, tau, LatticeCutoff(50))
            mirrored = kronecker_direct(k, -z, tau, LatticeCutoff(50))
            self.assertLess(abs(mirrored.value - (-1) ** k * value.value), 1e-12)

    def test_cutoff_bound(self):
        z = complex(-0.25, 0.4)
        coarse = kronecker_direct(3, z, I, LatticeCutoff(100))
        fine = kronecker_direct(3, z, I, LatticeCutoff(200))
        self.assertLessEqual(abs(coarse.value - fine.value), coarse.err)
        self.assertLess(fine.err, coarse.err)

    def test_matches_elliptic_bernoulli(self):
        # B_k(x, y) = (-1)**(k-1) k! / (2 pi i)**k * C_k(-x + y tau)
        x, y = 0.25, 0.4
        z = -x + y * I.tau
        for k in (3, 4):
            direct = kronecker_direct(k, z, I, LatticeCutoff(400))
            scale = (-1) ** (k - 1) * math.factorial(k) / qseries.two_pi_i_power(k)
            series = qseries.elliptic_bernoulli(k, x, y, I)
            self.assertTrue(series.agrees(direct * scale))
            self.assertLess(abs(series.value - (direct * scale).value), 1e-5)


class WeierstrassDirectTest(SimpleTestCase):

    def test_matches_series(self):
        tau = TauPoint(complex(0.1, 1.2))
        z = complex(0.37, 0.21)
        direct = weierstrass_p_direct(z, tau, LatticeCutoff(600))
        series = qseries.weierstrass_p_deriv(0, z, tau)
        self.assertLess(abs(direct.value - series.value), 1e-6)
        self.assertTrue(series.agrees(direct))

    def test_rejects_lattice_point(self):
        with self.assertRaises(SingularityError):
            weierstrass_p_direct(0, I, LatticeCutoff(5))
        with self.assertRaises(SingularityError):
            weierstrass_p_direct(complex(1, 1), I, LatticeCutoff(5))

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

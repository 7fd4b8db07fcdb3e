# -*- coding: utf-8 -*-

"""
Direct truncated lattice sums, used as independent oracles for the
q-series evaluators.

"""

import logging
import math
from dataclasses import dataclass

import numpy

from ellded.exceptions import SingularityError
from ellded.qseries import ComplexVal, ROUNDING
from ellded.utils import format_complex, get_setting

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeCutoff:
    """ Square truncation ``|m|, |n| <= radius`` of the lattice ``Z tau + Z``. """

    radius: int = 200

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError('cutoff radius must be at least 1, got %r' % (self.radius,))

    def points(self, tau):
        """ Lattice points ``m tau + n`` of the box, origin excluded. """
        span = numpy.arange(-self.radius, self.radius + 1)
        m, n = numpy.meshgrid(span, span, indexing='ij')
        points = (m * tau.tau + n).ravel()
        return points[(m.ravel() != 0) | (n.ravel() != 0)]


def _shape_constant(tau):
    # |m tau + n| >= c * max(|m|, |n|)
    return tau.imag / max(1.0, abs(tau.tau))


def kronecker_direct(k, z, tau, cutoff):
    """
    ``C_k(z) = sum' chi(w) / w**k`` over the lattice points ``w`` of the
    cutoff box, with the character ``chi(w) = e(Im(w conj(z)) / Im tau)``.

    :param k:
    Integer ``>= 3``; the sum converges absolutely there.

    :return: :class:`ComplexVal` whose err bounds the omitted shells.

    """
    if k < 3:
        raise ValueError('the direct lattice sum needs k >= 3, got %d' % k)
    z = complex(z)
    y = -z.imag / tau.imag
    x = z.real + y * tau.tau.real
    gap = get_setting('ELLDED_LATTICE_GAP')
    if abs(x - round(x)) <= gap and abs(y - round(y)) <= gap:
        raise SingularityError('z = %s lies on the lattice' % format_complex(z))

    points = cutoff.points(tau)
    chi = numpy.exp(2j * math.pi * numpy.imag(points * numpy.conj(z)) / tau.imag)
    terms = chi / points ** k
    value = complex(numpy.sum(terms))
    c = _shape_constant(tau)
    tail = 8.0 * c ** (-k) * cutoff.radius ** (2 - k) / (k - 2)
    err = tail + ROUNDING * float(numpy.sum(numpy.abs(terms))) * math.sqrt(terms.size)
    logger.debug('C_%d: %d lattice points, tail %.3g', k, terms.size, tail)
    return ComplexVal(value, err)


def weierstrass_p_direct(z, tau, cutoff):
    """
    ``P(z) = 1/z**2 + sum' [1/(z - w)**2 - 1/w**2]`` over the cutoff box.

    The box is symmetric, so the omitted part is of order
    ``|z|**2 / radius**2``.

    """
    z = complex(z)
    points = cutoff.points(tau)
    if numpy.min(numpy.abs(points - z)) == 0.0 or z == 0:
        raise SingularityError('z = %s lies on the lattice' % format_complex(z))
    terms = 1.0 / (z - points) ** 2 - 1.0 / points ** 2
    value = 1.0 / z ** 2 + complex(numpy.sum(terms))
    c = _shape_constant(tau)
    tail = 24.0 * abs(z) ** 2 * c ** (-4) * cutoff.radius ** (-2)
    err = tail + ROUNDING * float(numpy.sum(numpy.abs(terms))) * math.sqrt(terms.size)
    return ComplexVal(value, err)

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

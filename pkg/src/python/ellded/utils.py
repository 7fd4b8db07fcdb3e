# -*- coding: utf-8 -*-

import json
import os
import re
from fractions import Fraction

import numpy
from django.conf import settings

from ellded import defaults

COMPLEX_RE = re.compile(r'^\s*([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)'
                        r'\s*([+-])\s*([0-9.]+(?:[eE][+-]?[0-9]+)?)\s*[ij]\s*$')
IMAG_RE = re.compile(r'^\s*([+-]?[0-9.]*(?:[eE][+-]?[0-9]+)?)\s*[ij]\s*$')


def get_setting(name):
    """
    Look up an ``ELLDED_*`` setting, falling back to the packaged default
    when the active settings module does not define it.

    :param name:
    Name of the setting.

    :return: The configured value.

    """
    if settings.configured and hasattr(settings, name):
        return getattr(settings, name)
    return getattr(defaults, name)


def parse_complex(text):
    """
    Parse a complex literal written as ``a+bi``, ``a-bi`` or ``bi``.

    Python's own ``a+bj`` spelling is accepted too. Raises ``ValueError``
    when ``text`` is not a complex literal.

    """
    match = COMPLEX_RE.match(text)
    if match:
        real, sign, imag = match.groups()
        imag = float(imag)
        return complex(float(real), -imag if sign == '-' else imag)
    match = IMAG_RE.match(text)
    if match:
        imag = match.group(1)
        if imag in ('', '+', '-'):
            imag += '1'
        return complex(0.0, float(imag))
    return complex(float(text))


def format_complex(value):
    """
    Render ``value`` the way :func:`parse_complex` reads it back, e.g.
    ``0.3+1.1i``.

    """
    value = complex(value)
    sign = '-' if value.imag < 0 else '+'
    return '%r%s%ri' % (value.real, sign, abs(value.imag))


def format_rational(value):
    value = Fraction(value)
    return '%d/%d' % (value.numerator, value.denominator)


def parse_rational(text):
    """ Read ``1/3``, ``-0.25`` or ``2`` as an exact ``Fraction``. """
    return Fraction(text.strip())


class CompensatedSum(object):
    """
    Neumaier summation of complex terms.

    Real and imaginary parts carry their own compensation. ``abs_total``
    accumulates the magnitudes of the terms and sizes the rounding
    allowance of the result.

    """

    def __init__(self, terms=()):
        self._real = 0.0
        self._imag = 0.0
        self._real_carry = 0.0
        self._imag_carry = 0.0
        self.abs_total = 0.0
        for term in terms:
            self.add(term)

    def add(self, term):
        term = complex(term)
        self._real, self._real_carry = _neumaier(self._real, self._real_carry, term.real)
        self._imag, self._imag_carry = _neumaier(self._imag, self._imag_carry, term.imag)
        self.abs_total += abs(term)
        return self

    @property
    def value(self):
        return complex(self._real + self._real_carry, self._imag + self._imag_carry)


def _neumaier(total, carry, term):
    result = total + term
    if abs(total) >= abs(term):
        carry += (total - result) + term
    else:
        carry += (term - result) + total
    return result, carry


SCHEMA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'schema')


def load_schema(name):
    """ The JSON schema ``schema/<name>.json`` shipped with the package. """
    with open(os.path.join(SCHEMA_DIR, '%s.json' % name)) as stream:
        return json.load(stream)


def pseudorandom_taus(count, seed=None):
    """
    Deterministic sample of moduli from the box configured by
    ``ELLDED_TAU_REAL_RANGE`` and ``ELLDED_TAU_IMAG_RANGE``.

    :param count:
    Number of moduli.

    :param seed:
    Seed of the generator, ``ELLDED_DEFAULT_SEED`` when omitted.

    :return: List of complex numbers with positive imaginary part.

    """
    if seed is None:
        seed = get_setting('ELLDED_DEFAULT_SEED')
    rng = numpy.random.default_rng(seed)
    low, high = get_setting('ELLDED_TAU_REAL_RANGE')
    real = rng.uniform(low, high, count)
    low, high = get_setting('ELLDED_TAU_IMAG_RANGE')
    imag = rng.uniform(low, high, count)
    return [complex(a, b) for a, b in zip(real, imag)]


def taylor_coefficient(func, degree, step=None, points=None):
    """
    Estimate the Taylor coefficient of ``x**degree`` at the origin of a
    function that cannot be evaluated at the origin itself.

    Samples ``func`` at ``+-k*step`` for ``k = 1..points`` and fits the even
    or odd part, whichever matches ``degree``, by a polynomial in
    ``x**2``. The fit is exact up to degree ``2*points - 1``.

    :param func:
    Callable of one real argument returning a complex number.

    :param degree:
    Non-negative integer, at most ``2*points - 1``.

    :return: The coefficient as a complex number.

    """
    if step is None:
        step = get_setting('ELLDED_TAYLOR_STEP')
    if points is None:
        points = get_setting('ELLDED_TAYLOR_POINTS')
    if degree < 0 or degree > 2 * points - 1:
        raise ValueError('degree %d cannot be fitted from %d points' % (degree, points))

    parity = degree % 2
    nodes = numpy.arange(1, points + 1, dtype=float)
    samples = numpy.array([complex(func(k * step)) for k in nodes]
                          + [complex(func(-k * step)) for k in nodes])
    upper, lower = samples[:points], samples[points:]
    part = (upper - lower) / 2 if parity else (upper + lower) / 2

    # unknowns are a_{2j+parity} * step**(2j+parity)
    powers = numpy.arange(points) * 2 + parity
    matrix = nodes[:, None] ** powers[None, :]
    scaled = numpy.linalg.solve(matrix.astype(complex), part)
    return complex(scaled[degree // 2] / step ** degree)

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

# -*- coding: utf-8 -*-

"""
q-series evaluation on the upper half-plane.

Every evaluator returns a :class:`ComplexVal` whose ``err`` bounds the
truncation tail plus a rounding allowance. Series are summed with
compensation and stop once a geometric majorant of the remaining tail is
below ``policy.tol`` relative to the size of the series part.

"""

import cmath
import functools
import logging
import math
import sys
import threading
import warnings
from dataclasses import dataclass, field

from ellded import exact
from ellded.exceptions import (ConvergenceError, HalfPlaneError,
                               SingularityError, SlowConvergenceWarning)
from ellded.utils import CompensatedSum, format_complex, get_setting, parse_complex

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * math.pi
ROUNDING = 64 * sys.float_info.epsilon

_I_POWERS = (1, 1j, -1, -1j)


def two_pi_i_power(k):
    """ ``(2 pi i)**k`` with the power of ``i`` taken exactly. """
    return (2 * math.pi) ** k * _I_POWERS[k % 4]


@dataclass(frozen=True)
class ComplexVal:
    """
    A complex value with an absolute error bound.

    Arithmetic propagates the bound first order plus a rounding allowance
    proportional to the result.

    """

    value: complex
    err: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'value', complex(self.value))
        err = float(self.err)
        if not err >= 0:
            raise ValueError('error bound must be non-negative, got %r' % (err,))
        object.__setattr__(self, 'err', err)

    def __abs__(self):
        return abs(self.value)

    def __neg__(self):
        return ComplexVal(-self.value, self.err)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        value = self.value + other.value
        return ComplexVal(value, self.err + other.err + ROUNDING * abs(value))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        value = self.value * other.value
        err = (abs(self.value) * other.err + abs(other.value) * self.err
               + self.err * other.err + ROUNDING * abs(value))
        return ComplexVal(value, err)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        size = abs(other.value)
        if size <= other.err:
            raise ZeroDivisionError('divisor %r is not bounded away from zero' % (other,))
        value = self.value / other.value
        err = (self.err + abs(value) * other.err) / (size - other.err) + ROUNDING * abs(value)
        return ComplexVal(value, err)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def agrees(self, other, slack=0.0):
        """ True when the two error discs, widened by ``slack``, intersect. """
        other = _coerce(other)
        return abs(self.value - other.value) <= self.err + other.err + slack

    def as_record(self):
        return {'re': self.value.real, 'im': self.value.imag, 'err': self.err}


def _coerce(value):
    if isinstance(value, ComplexVal):
        return value
    if isinstance(value, (int, float, complex)):
        return ComplexVal(value)
    try:
        return ComplexVal(complex(value))
    except TypeError:
        return NotImplemented


def csum(values):
    """ Compensated sum of ComplexVals; the error bounds add up. """
    acc = CompensatedSum()
    err = 0.0
    for item in values:
        item = _coerce(item)
        acc.add(item.value)
        err += item.err
    return ComplexVal(acc.value, err + ROUNDING * acc.abs_total)


@dataclass(frozen=True)
class TauPoint:
    """ A modulus ``tau`` with ``Im tau > 0`` and its nome ``q = e(tau)``. """

    tau: complex
    nome: complex = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        tau = complex(self.tau)
        if not (math.isfinite(tau.real) and math.isfinite(tau.imag)) or tau.imag <= 0:
            raise HalfPlaneError('tau must lie in the upper half-plane, got %s'
                                 % format_complex(tau))
        object.__setattr__(self, 'tau', tau)
        object.__setattr__(self, 'nome', cmath.exp(TWO_PI_I * tau))

    @classmethod
    def parse(cls, text):
        return cls(parse_complex(text))

    @property
    def imag(self):
        return self.tau.imag

    def shifted(self, k=1):
        return TauPoint(self.tau + k)

    def scaled(self, factor):
        return TauPoint(self.tau * factor)

    def __str__(self):
        return format_complex(self.tau)


@dataclass(frozen=True)
class SeriesPolicy:
    """
    Truncation policy shared by all series.

    :param tol:
    Relative tolerance on the tail of the series part.

    :param max_terms:
    Cap on the number of terms; reaching it raises ``ConvergenceError``.

    :param min_im_tau:
    Moduli below this height are rejected.

    """

    tol: float = 1e-12
    max_terms: int = 10 ** 6
    min_im_tau: float = 0.05

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError('tol must be positive, got %r' % (self.tol,))
        if self.max_terms < 1:
            raise ValueError('max_terms must be positive, got %r' % (self.max_terms,))

    @classmethod
    def from_settings(cls, **overrides):
        options = {
            'tol': get_setting('ELLDED_SERIES_TOL'),
            'max_terms': get_setting('ELLDED_MAX_TERMS'),
            'min_im_tau': get_setting('ELLDED_MIN_IM_TAU'),
            }
        options.update((key, value) for key, value in overrides.items() if value is not None)
        return cls(**options)

    def term_limit(self, tau):
        """
        Number of terms a series at ``tau`` may use.

        Raises ``HalfPlaneError`` below ``min_im_tau``; in the slow regime
        below ``ELLDED_SLOW_IM_TAU`` warns and widens the cap.

        """
        if tau.imag < self.min_im_tau:
            raise HalfPlaneError('Im tau = %g is below the supported minimum %g'
                                 % (tau.imag, self.min_im_tau))
        if tau.imag < get_setting('ELLDED_SLOW_IM_TAU'):
            message = 'slow convergence at tau = %s (|q| = %.4f)' % (tau, abs(tau.nome))
            logger.warning(message)
            warnings.warn(message, SlowConvergenceWarning, stacklevel=3)
            return self.max_terms * get_setting('ELLDED_SLOW_TERMS_FACTOR')
        return self.max_terms

    def converged(self, tail, scale):
        return tail <= self.tol * max(scale, 1.0)


def resolve_policy(policy):
    return policy if policy is not None else SeriesPolicy.from_settings()


def _geometric_tail(first, ratio):
    if ratio >= 1.0:
        return math.inf
    return first / (1.0 - ratio)


def _run_series(label, term, tail_bound, policy, limit):
    """
    Sum ``term(1), term(2), ...`` until ``tail_bound(k + 1)`` bounds what is
    left.

    :return: Tuple of the ``CompensatedSum`` and the final tail bound.

    """
    acc = CompensatedSum()
    tail = math.inf
    for k in range(1, limit + 1):
        acc.add(term(k))
        tail = tail_bound(k + 1)
        if policy.converged(tail, abs(acc.value)):
            logger.debug('%s: %d terms, tail %.3g', label, k, tail)
            return acc, tail
    logger.warning('%s: no convergence within %d terms (tail %.3g)', label, limit, tail)
    raise ConvergenceError('%s did not converge within %d terms' % (label, limit),
                           partial=ComplexVal(acc.value, tail), terms=limit)


_DIVISOR_SIGMA = {}
_DIVISOR_SIGMA_LOCK = threading.Lock()


def divisor_sigma(s, k):
    """ ``sigma_s(k)``, the sum of the ``s``-th powers of the divisors of ``k``. """
    if k < 1:
        raise ValueError('divisor sums start at k = 1, got %d' % k)
    table = _DIVISOR_SIGMA.get(s)
    if table is not None and k < len(table):
        return table[k]
    with _DIVISOR_SIGMA_LOCK:
        table = list(_DIVISOR_SIGMA.get(s, [0]))
        size = max(2 * len(table), k + 1)
        extended = [0] * size
        for d in range(1, size):
            power = d ** s
            for multiple in range(d, size, d):
                extended[multiple] += power
        _DIVISOR_SIGMA[s] = extended
    return extended[k]


def _power_tail(start, exponent, modulus):
    """ Bound on ``sum_{k >= start} k**exponent * modulus**k``. """
    if modulus == 0.0:
        return 0.0
    first = math.exp(exponent * math.log(start) + start * math.log(modulus))
    ratio = ((start + 1.0) / start) ** exponent * modulus
    return _geometric_tail(first, ratio)


@functools.lru_cache(maxsize=4096)
def _lambert(s, extra, tau, policy):
    # sum_k sigma_s(k) k**extra q**k
    q = tau.nome
    modulus = abs(q)
    limit = policy.term_limit(tau)

    def term(k):
        return float(divisor_sigma(s, k)) * k ** extra * q ** k

    def bound(k):
        return _power_tail(k, s + 1 + extra, modulus)

    acc, tail = _run_series('lambert(%d, %d)' % (s, extra), term, bound, policy, limit)
    return ComplexVal(acc.value, tail + ROUNDING * acc.abs_total)


def _eisenstein_factor(n):
    return 2 * two_pi_i_power(2 * n) / math.factorial(2 * n - 1)


def eisenstein_normalized(n, tau, policy=None):
    """
    ``G_2n(tau) = -B_2n / (4n) + sum_k sigma_{2n-1}(k) q**k``.

    :param n:
    Positive integer.

    :param tau:
    A :class:`TauPoint`.

    """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    constant = float(-exact.bernoulli_number(2 * n) / (4 * n))
    return _lambert(2 * n - 1, 0, tau, resolve_policy(policy)) + constant


def eisenstein(n, tau, policy=None):
    """ ``E_2n(tau) = 2 (2 pi i)**(2n) / (2n-1)! * G_2n(tau)``. """
    return eisenstein_normalized(n, tau, policy) * _eisenstein_factor(n)


def eisenstein_tau_derivative(n, tau, policy=None):
    """ ``d E_2n / d tau``, differentiated termwise in ``q``. """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    series = _lambert(2 * n - 1, 1, tau, resolve_policy(policy))
    return series * (_eisenstein_factor(n) * TWO_PI_I)


@functools.lru_cache(maxsize=None)
def _bernoulli_coefficients(m):
    return tuple(float(math.comb(m, j) * exact.bernoulli_number(j)) for j in range(m + 1))


def bernoulli_polynomial_float(m, y):
    value = 0.0
    for coeff in _bernoulli_coefficients(m):
        value = value * y + coeff
    return value


def _unit_fraction(value):
    reduced = value - math.floor(value)
    if reduced >= 1.0:
        reduced = 0.0
    return reduced


def _near_integer(value, gap):
    return abs(value - round(value)) <= gap


def elliptic_bernoulli(m, x, y, tau, policy=None):
    """
    Elliptic Bernoulli function ``B_m(x, y; tau)``, the coefficient of
    ``alpha**(m-1) / m!`` in Kronecker's double series at ``z = x - y tau``.

    Periodic in ``x`` and ``y``. ``B_0 = 1``; ``B_1`` has a pole at the
    lattice points, every ``B_m`` with ``m >= 2`` is continuous there.

    :param m:
    Non-negative integer.

    :param x:
    Real number.

    :param y:
    Real number.

    :param tau:
    A :class:`TauPoint`.

    """
    if m < 0:
        raise ValueError('m must be non-negative, got %d' % m)
    if m == 0:
        return ComplexVal(1.0)
    policy = resolve_policy(policy)
    x = _unit_fraction(float(x))
    y = _unit_fraction(float(y))
    gap = get_setting('ELLDED_LATTICE_GAP')
    if m == 1 and _near_integer(x, gap) and _near_integer(y, gap):
        raise SingularityError('B_1 has a pole at the lattice point (x, y) = (%r, %r)' % (x, y))

    t = tau.tau
    modulus = abs(tau.nome)
    limit = policy.term_limit(tau)
    power = m - 1

    def term(j):
        a = cmath.exp(TWO_PI_I * (x + (j - y) * t))
        b = cmath.exp(TWO_PI_I * (-x + (j + y) * t))
        return (y - j) ** power * a / (1.0 - a) - (y + j) ** power * b / (1.0 - b)

    def bound(j):
        radius = math.exp(-2 * math.pi * (j - y) * t.imag)
        first = 2.0 * (j + 1.0) ** power * radius / (1.0 - radius)
        return _geometric_tail(first, ((j + 2.0) / (j + 1.0)) ** power * modulus)

    acc, tail = _run_series('B_%d' % m, term, bound, policy, limit)

    if y == 0.0 and m >= 2:
        closing = 0.0
    else:
        c = cmath.exp(TWO_PI_I * (-x + y * t))
        closing = y ** power * c / (c - 1.0)

    polynomial = bernoulli_polynomial_float(m, y)
    value = m * (acc.value + closing) + polynomial
    err = (m * (tail + ROUNDING * (acc.abs_total + abs(closing)))
           + ROUNDING * (abs(polynomial) + abs(value)))
    return ComplexVal(value, err)


def _lattice_coordinates(z, tau):
    # z = x - y tau
    y = -z.imag / tau.tau.imag
    return z.real + y * tau.tau.real, y


def _require_off_lattice(z, tau, what):
    x, y = _lattice_coordinates(z, tau)
    gap = get_setting('ELLDED_LATTICE_GAP')
    if _near_integer(x, gap) and _near_integer(y, gap):
        raise SingularityError('%s has a pole at the lattice point z = %s'
                               % (what, format_complex(z)))


def weierstrass_zeta(z, tau, policy=None):
    """
    Weierstrass zeta function normalised by ``zeta(z + 1) = zeta(z) + E_2``
    and ``zeta(z + tau) = zeta(z) + E_2 tau - 2 pi i``.

    Evaluated as ``E_2 z - 2 pi i (B_1(x, y) - y)`` with ``z = x - y tau``, so
    the quasi-periods come out exactly.

    """
    z = complex(z)
    _require_off_lattice(z, tau, 'zeta')
    policy = resolve_policy(policy)
    x, y = _lattice_coordinates(z, tau)
    b1 = elliptic_bernoulli(1, x, y, tau, policy)
    return eisenstein(1, tau, policy) * z - (b1 - y) * TWO_PI_I


@functools.lru_cache(maxsize=None)
def _eulerian_row(m):
    row = [1]
    for size in range(2, m + 1):
        row = [(j + 1) * (row[j] if j < len(row) else 0)
               + (size - j) * (row[j - 1] if j >= 1 else 0)
               for j in range(size)]
    return tuple(row)


def _theta(m, v):
    """
    ``sum_{j >= 1} j**m v**j`` in closed form, together with the magnitude
    that sizes its rounding error.

    """
    d = 1.0 - v
    if m == 0:
        return v / d, abs(v) / abs(d)
    size = abs(v)
    poly, magnitude = 0j, 0.0
    for coeff in reversed(_eulerian_row(m)):
        poly = poly * v + coeff
        magnitude = magnitude * size + coeff
    denominator = d ** (m + 1)
    return v * poly / denominator, size * magnitude / abs(denominator)


def weierstrass_p_deriv(k, z, tau, policy=None):
    """
    ``k``-th derivative of the Weierstrass function ``P(z; tau)``.

    The argument is first reduced to the strip ``0 <= Im z <= Im tau / 2``
    using periodicity and parity, then summed as a q-series of Eulerian
    rational functions of ``u = e(z)``.

    :param k:
    Non-negative integer.

    :param z:
    Complex argument off the lattice.

    """
    if k < 0:
        raise ValueError('k must be non-negative, got %d' % k)
    z = complex(z)
    _require_off_lattice(z, tau, 'P')
    policy = resolve_policy(policy)
    t = tau.tau
    w = z - math.floor(z.imag / t.imag) * t
    sign = 1.0
    if w.imag > t.imag / 2:
        w = t - w
        sign = (-1.0) ** k
    w -= math.floor(w.real + 0.5)

    u = cmath.exp(TWO_PI_I * w)
    q = tau.nome
    modulus, size = abs(q), abs(u)
    order = k + 1
    parity = (-1) ** k
    prefactor = two_pi_i_power(k + 2)
    limit = policy.term_limit(tau)

    def term(n):
        qn = q ** n
        value = _theta(order, qn * u)[0] + parity * _theta(order, qn / u)[0]
        if k == 0:
            value -= 2 * _theta(1, qn)[0]
        return prefactor * value

    def bound(n):
        radius = modulus ** n / size
        if radius >= 1.0:
            return math.inf
        first = 2 * _theta(order, radius)[1]
        if k == 0:
            first += 2 * _theta(1, modulus ** n)[1]
        return abs(prefactor) * _geometric_tail(first, modulus)

    acc, tail = _run_series('P^(%d)' % k, term, bound, policy, limit)
    leading, magnitude = _theta(order, u)
    value = prefactor * leading + acc.value
    if k == 0:
        value += prefactor / 12
    # the power of (1 - u) amplifies the rounding of u
    err = tail + ROUNDING * (acc.abs_total
                             + (order + 1) * abs(prefactor) * (magnitude + 1))
    return ComplexVal(sign * value, err)


def weierstrass_zeta_deriv(j, z, tau, policy=None):
    """ ``zeta^(j)``: ``zeta`` itself for ``j = 0``, ``-P^(j-1)`` above. """
    if j < 0:
        raise ValueError('j must be non-negative, got %d' % j)
    if j == 0:
        return weierstrass_zeta(z, tau, policy)
    return -weierstrass_p_deriv(j - 1, z, tau, policy)


def log_sigma_tau_derivative(z, tau, policy=None):
    """
    ``d log sigma(z; tau) / d tau`` for ``|Im z| < Im tau``.

    From ``log sigma = E_2 z**2 / 2 + log(sin(pi z) / pi)
    + sum_n [log(1 - q**n u) + log(1 - q**n / u) - 2 log(1 - q**n)]``.

    """
    z = complex(z)
    t = tau.tau
    if not abs(z.imag) < t.imag:
        raise ValueError('requires |Im z| < Im tau, got z = %s' % format_complex(z))
    policy = resolve_policy(policy)
    u = cmath.exp(TWO_PI_I * z)
    q = tau.nome
    modulus = abs(q)
    reach = max(abs(u), 1.0 / abs(u))
    limit = policy.term_limit(tau)

    def g(v):
        return v / (1.0 - v)

    def term(n):
        qn = q ** n
        return -TWO_PI_I * n * (g(qn * u) + g(qn / u) - 2 * g(qn))

    def bound(n):
        radius = modulus ** n * reach
        if radius >= 1.0:
            return math.inf
        first = 2 * math.pi * n * 4 * radius / (1.0 - radius)
        return _geometric_tail(first, (n + 1.0) / n * modulus)

    acc, tail = _run_series('dlog sigma', term, bound, policy, limit)
    series = ComplexVal(acc.value, tail + ROUNDING * acc.abs_total)
    return eisenstein_tau_derivative(1, tau, policy) * (z * z / 2) + series


def zeta_odd(n, tol=None):
    """
    Riemann ``zeta(2n + 1)`` from a partial sum closed by the midpoint of the
    integral bracket for its tail.

    """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    if tol is None:
        tol = get_setting('ELLDED_SERIES_TOL')
    s = 2 * n + 1

    def width(cutoff):
        return (cutoff ** (1 - s) - (cutoff + 1) ** (1 - s)) / (s - 1)

    cutoff = max(1, int((0.5 / tol) ** (1.0 / s)))
    while width(cutoff) > 2 * tol:
        cutoff += max(1, cutoff // 8)
    partial = math.fsum(k ** -s for k in range(1, cutoff + 1))
    lower = (cutoff + 1) ** (1 - s) / (s - 1)
    upper = cutoff ** (1 - s) / (s - 1)
    return partial + (lower + upper) / 2

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

# -*- coding: utf-8 -*-

"""
Elliptic Apostol-Dedekind sums ``D^-_2n(p, q; tau)``, the reciprocity
functions ``R^-_2n(p, q; tau)``, their generating functions in ``x`` and the
elliptic Dedekind-Rademacher sums built from elliptic Bernoulli functions.

All double sums over ``p``-division points run in row-major ``(lambda, mu)``
order through compensated accumulation, so results are bit-reproducible.

"""

import cmath
import enum
import logging
import math
from dataclasses import dataclass, replace
from fractions import Fraction

from ellded import exact
from ellded import qseries
from ellded.exceptions import DomainError, SingularityError
from ellded.exact import CoprimePair
from ellded.qseries import (TWO_PI_I, ComplexVal, TauPoint, csum,
                            two_pi_i_power)
from ellded.utils import get_setting

logger = logging.getLogger(__name__)


class Route(str, enum.Enum):
    ZETA_DERIVATIVE = 'zeta_derivative'
    BERNOULLI_PRODUCT = 'bernoulli_product'


@dataclass(frozen=True)
class EllipticSumResult:
    value: ComplexVal
    route: Route
    n: int
    p: int
    q: int
    tau: TauPoint

    def as_record(self):
        return {
            'op': 'elliptic-sum',
            'params': {'n': self.n, 'p': self.p, 'q': self.q, 'tau': str(self.tau)},
            'value': self.value.as_record(),
            'route': self.route.value,
            }


def division_points(p):
    """ ``(lambda, mu)`` modulo ``p`` without ``(0, 0)``, row-major. """
    return [(lam, mu) for lam in range(p) for mu in range(p) if lam or mu]


def _zeta_bracket(point, shift, e2, tau, policy):
    # zeta(point) - E_2 point + 2 pi i shift
    return qseries.weierstrass_zeta(point, tau, policy) - e2 * point + TWO_PI_I * shift


def elliptic_apostol_sum(n, pair, tau, route=Route.ZETA_DERIVATIVE, policy=None):
    """
    Elliptic Apostol-Dedekind sum ``D^-_2n(p, q; tau)``.

    :param n:
    Positive integer.

    :param pair:
    A :class:`CoprimePair`; ``q`` may be negative.

    :param tau:
    A :class:`TauPoint`.

    :param route:
    ``zeta_derivative`` sums ``zeta^(2n)`` against the ``zeta`` bracket;
    ``bernoulli_product`` sums products of elliptic Bernoulli functions of
    the division points.

    :return: :class:`EllipticSumResult`.

    """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    route = Route(route)
    policy = qseries.resolve_policy(policy)
    if pair.p == 1:
        value = ComplexVal(0.0)
    elif route is Route.ZETA_DERIVATIVE:
        value = _sum_by_zeta_derivative(n, pair, tau, policy)
    else:
        value = _sum_by_bernoulli_product(n, pair, tau, policy)
    logger.debug('D_%d(%d, %d; %s) by %s: %r', 2 * n, pair.p, pair.q, tau, route.value, value)
    return EllipticSumResult(value, route, n, pair.p, pair.q, tau)


def _sum_by_zeta_derivative(n, pair, tau, policy):
    p, q = pair.p, pair.q
    e2 = qseries.eisenstein(1, tau, policy)
    terms = []
    for lam, mu in division_points(p):
        point = (lam + mu * tau.tau) / p
        derivative = qseries.weierstrass_zeta_deriv(2 * n, point, tau, policy)
        terms.append(derivative * _zeta_bracket(q * point, q * mu / p, e2, tau, policy))
    return csum(terms) * (1 / (two_pi_i_power(2) * p * math.factorial(2 * n)))


def _sum_by_bernoulli_product(n, pair, tau, policy):
    p, q = pair.p, pair.q
    points = division_points(p)
    order = 2 * n + 1
    table = dict(((alpha, beta), qseries.elliptic_bernoulli(order, Fraction(-alpha, p),
                                                            Fraction(beta, p), tau, policy))
                 for alpha, beta in points)
    roots = [cmath.exp(-TWO_PI_I * r / p) for r in range(p)]
    terms = []
    for lam, mu in points:
        transform = csum(table[alpha, beta] * roots[(mu * alpha - lam * beta) % p]
                         for alpha, beta in points)
        factor = qseries.elliptic_bernoulli(1, Fraction(q * lam, p), Fraction(-q * mu, p),
                                            tau, policy)
        terms.append(transform * factor)
    scale = -two_pi_i_power(2 * n) * p ** (2 * n - 2) / math.factorial(2 * n + 1)
    return csum(terms) * scale


def reciprocity_rhs(n, pair, tau, policy=None):
    """
    Reciprocity function ``R^-_2n(p, q; tau)`` in closed form:
    ``-1/((2 pi i)**2 p q) [sum_j E_2j E_{2n+2-2j} p**2j q**(2n+2-2j)
    - E_{2n+2} (p**(2n+2) + q**(2n+2)) - (2n+1) E_{2n+2}]
    - dE_2n/dtau (p**(2n-1) q + p q**(2n-1)) / (4 pi i n)``.

    """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    pair.require_positive()
    policy = qseries.resolve_policy(policy)
    p, q = pair.p, pair.q
    es = dict((j, qseries.eisenstein(j, tau, policy)) for j in range(1, n + 2))
    top = es[n + 1]
    products = csum(es[j] * es[n + 1 - j] * (p ** (2 * j) * q ** (2 * n + 2 - 2 * j))
                    for j in range(1, n + 1))
    bracket = products - top * (p ** (2 * n + 2) + q ** (2 * n + 2)) - top * (2 * n + 1)
    derivative = qseries.eisenstein_tau_derivative(n, tau, policy)
    weight = (p ** (2 * n - 1) * q + p * q ** (2 * n - 1)) / (4j * math.pi * n)
    return bracket * (-1 / (two_pi_i_power(2) * p * q)) - derivative * weight


def _require_small(x, bound, what):
    if not abs(x) < bound:
        raise SingularityError('%s needs |x| < %g, got x = %r' % (what, bound, x))


def generating_D(pair, tau, x, policy=None):
    """
    Generating function ``D^-(p, q; tau; x)``; its ``x**2n`` Taylor
    coefficient is ``D^-_2n(p, q; tau)``.

    Requires ``|x| < 1/(2p)``.

    """
    policy = qseries.resolve_policy(policy)
    p, q = pair.p, pair.q
    x = float(x)
    if p == 1:
        return ComplexVal(0.0)
    _require_small(x, 1.0 / (2 * p), 'D^-(p, q; x)')
    e2 = qseries.eisenstein(1, tau, policy)
    terms = []
    for lam, mu in division_points(p):
        point = (lam + mu * tau.tau) / p
        left = _zeta_bracket(point - x, mu / p, e2, tau, policy)
        right = _zeta_bracket(q * point, q * mu / p, e2, tau, policy)
        terms.append(left * right)
    return csum(terms) * (1 / (two_pi_i_power(2) * p))


def _sigma_block(z, e2, de2, tau, policy):
    # 2 dlog sigma/dtau - dE_2/dtau z**2 - E_2/(pi i)
    derivative = qseries.log_sigma_tau_derivative(z, tau, policy)
    return derivative * 2 - de2 * (z * z) - e2 * (1 / (1j * math.pi))


def generating_R(pair, tau, x, policy=None):
    """
    Generating function ``R^-(p, q; tau; x)`` from its four blocks. The
    ``1/x**2`` singularities of the blocks cancel, but each block is
    evaluated separately, so ``x = 0`` is excluded.

    Requires ``0 < |x| < 1/(2 max(p, q))``.

    """
    pair.require_positive()
    policy = qseries.resolve_policy(policy)
    p, q = pair.p, pair.q
    x = float(x)
    if x == 0.0:
        raise SingularityError('R^-(p, q; x) is evaluated blockwise and needs x != 0')
    _require_small(x, 1.0 / (2 * max(p, q)), 'R^-(p, q; x)')
    e2 = qseries.eisenstein(1, tau, policy)
    de2 = qseries.eisenstein_tau_derivative(1, tau, policy)
    zp = qseries.weierstrass_zeta(p * x, tau, policy) - e2 * (p * x)
    zq = qseries.weierstrass_zeta(q * x, tau, policy) - e2 * (q * x)
    blocks = [
        zp * zq * (-1 / two_pi_i_power(2)),
        _sigma_block(p * x, e2, de2, tau, policy) * (q / (4j * math.pi * p)),
        _sigma_block(q * x, e2, de2, tau, policy) * (p / (4j * math.pi * q)),
        (qseries.weierstrass_p_deriv(0, x, tau, policy) + e2) * (1 / (two_pi_i_power(2) * p * q)),
        ]
    return csum(blocks)


def generating_reciprocity_residual(pair, tau, x, policy=None):
    """ ``D^-(p, q; x) + D^-(q, p; x) - R^-(p, q; x)``, constant in ``x``. """
    pair.require_positive()
    return (generating_D(pair, tau, x, policy) + generating_D(pair.swapped(), tau, x, policy)
            - generating_R(pair, tau, x, policy))


def reciprocity_constant(pair, tau, policy=None):
    """ ``-E_2(tau) / ((2 pi i)**2 p q)``. """
    pair.require_positive()
    e2 = qseries.eisenstein(1, tau, policy)
    return e2 * (-1 / (two_pi_i_power(2) * pair.p * pair.q))


def _b1_product_sum(p, q, s, tau, policy):
    # (1/p) sum' B_1(lambda/p - s, mu/p) B_1(q lambda/p, q mu/p)
    terms = []
    for lam, mu in division_points(p):
        first = qseries.elliptic_bernoulli(1, Fraction(lam, p) - Fraction(s), Fraction(mu, p),
                                           tau, policy)
        second = qseries.elliptic_bernoulli(1, Fraction(q * lam, p), Fraction(q * mu, p),
                                            tau, policy)
        terms.append(first * second)
    return csum(terms) * (1.0 / p)


def bernoulli_reciprocity_residual(pair, s, tau, policy=None):
    """
    Reciprocity of sums of products of ``B_1``: the two division-point sums
    minus their non-constant closed-form part. The result does not depend
    on ``s`` and equals :func:`reciprocity_constant`.

    Requires ``0 < |s| < 1/(2 max(p, q))``.

    """
    pair.require_positive()
    policy = qseries.resolve_policy(policy)
    p, q = pair.p, pair.q
    s = float(s)
    if s == 0.0:
        raise SingularityError('the B_1 product sums need s != 0')
    _require_small(s, 1.0 / (2 * max(p, q)), 'the B_1 product sums')
    lhs = _b1_product_sum(p, q, s, tau, policy) + _b1_product_sum(q, p, s, tau, policy)

    def b(m, value):
        return qseries.elliptic_bernoulli(m, value, 0, tau, policy)

    e2 = qseries.eisenstein(1, tau, policy)
    # d B_1(s, 0) / ds = (P(s) + E_2) / (2 pi i)
    slope = (qseries.weierstrass_p_deriv(0, s, tau, policy) + e2) * (1 / TWO_PI_I)
    rhs = csum([
        -(b(1, p * s) * b(1, q * s)),
        b(2, p * s) * (q / (2.0 * p)),
        b(2, q * s) * (p / (2.0 * q)),
        slope * (1 / (TWO_PI_I * p * q)),
        ])
    return lhs - rhs


def bernoulli_reciprocity_constant(pair, tau, policy=None):
    """ ``(1/(2pq)) sum_{lambda, mu mod q} B_2(p lambda/q, p mu/q; tau)``. """
    pair.require_positive()
    p, q = pair.p, pair.q
    terms = [qseries.elliptic_bernoulli(2, Fraction(p * lam, q), Fraction(p * mu, q), tau, policy)
             for lam in range(q) for mu in range(q)]
    return csum(terms) * (1.0 / (2 * p * q))


def _positive_pair(value, name):
    first, second = value
    if not (isinstance(first, int) and isinstance(second, int) and first > 0 and second > 0):
        raise DomainError('%s must be a pair of positive integers, got %r' % (name, value))
    return (first, second)


def _off_lattice(value, modulus, gap, what):
    ratio = value / modulus
    if abs(ratio - round(ratio)) <= gap:
        raise DomainError('degenerate parameters: %s is a multiple of %d' % (what, modulus))


@dataclass(frozen=True)
class RademacherSpec:
    """
    Parameters of the elliptic Dedekind-Rademacher sum ``S_{m,n}``.

    Each vector is a pair ``(primed, plain)``: ``vec_a = (a', a)`` and so on.

    """

    vec_a: tuple
    vec_b: tuple
    vec_c: tuple
    vec_x: tuple
    vec_y: tuple
    vec_z: tuple
    m: int
    n: int

    def __post_init__(self):
        for name in ('vec_a', 'vec_b', 'vec_c'):
            object.__setattr__(self, name, _positive_pair(getattr(self, name), name))
        for name in ('vec_x', 'vec_y', 'vec_z'):
            first, second = getattr(self, name)
            object.__setattr__(self, name, (float(first), float(second)))
        if self.m < 0 or self.n < 0:
            raise ValueError('orders must be non-negative, got (%d, %d)' % (self.m, self.n))
        gap = get_setting('ELLDED_NONDEGENERACY_GAP')
        (a1, _), (b1, _), (c1, _) = self.vec_a, self.vec_b, self.vec_c
        x1, y1, z1 = self.vec_x[0], self.vec_y[0], self.vec_z[0]
        _off_lattice(a1 * z1 - c1 * x1, math.gcd(a1, c1), gap, "a'z' - c'x'")
        _off_lattice(b1 * z1 - c1 * y1, math.gcd(b1, c1), gap, "b'z' - c'y'")

    def rotated(self):
        """ Cyclic permutation ``(a, b, c; x, y, z) -> (b, c, a; y, z, x)``. """
        return RademacherSpec(self.vec_b, self.vec_c, self.vec_a,
                              self.vec_y, self.vec_z, self.vec_x, self.m, self.n)

    def with_orders(self, m, n):
        return replace(self, m=m, n=n)

    @classmethod
    def reciprocity_substitution(cls, p, q, s, t, m, n):
        """
        ``a = (1, 1), b = (p, p), c = (q, q), x = (s, 0), y = (pt, 0),
        z = (-qt, 0)``: the parameters that reduce the sums to the ``B_1``
        product sums of a coprime pair.

        """
        return cls((1, 1), (p, p), (q, q), (s, 0), (p * t, 0), (-q * t, 0), m, n)

    def as_params(self):
        return {
            'a': list(self.vec_a), 'b': list(self.vec_b), 'c': list(self.vec_c),
            'x': list(self.vec_x), 'y': list(self.vec_y), 'z': list(self.vec_z),
            'm': self.m, 'n': self.n,
            }


def rademacher_sum(spec, tau, policy=None):
    """
    ``S_{m,n} = (1/c') sum_{j mod c} sum_{j' mod c'}
    B_m(a'(j'+z')/c' - x', a(j+z)/c - x; (a'/a) tau)
    B_n(b'(j'+z')/c' - y', b(j+z)/c - y; (b'/b) tau)``.

    """
    policy = qseries.resolve_policy(policy)
    (a1, a0), (b1, b0), (c1, c0) = spec.vec_a, spec.vec_b, spec.vec_c
    (x1, x0), (y1, y0), (z1, z0) = spec.vec_x, spec.vec_y, spec.vec_z
    tau_a = tau.scaled(a1 / a0)
    tau_b = tau.scaled(b1 / b0)
    terms = []
    for j in range(c0):
        for jp in range(c1):
            u = (jp + z1) / c1
            v = (j + z0) / c0
            first = qseries.elliptic_bernoulli(spec.m, a1 * u - x1, a0 * v - x0, tau_a, policy)
            second = qseries.elliptic_bernoulli(spec.n, b1 * u - y1, b0 * v - y0, tau_b, policy)
            terms.append(first * second)
    return csum(terms) * (1.0 / c1)


def rademacher_coefficient_residuals(pair, s, t, tau, policy=None):
    """
    The three coefficient identities of the Dedekind-Rademacher reciprocity
    at :meth:`RademacherSpec.reciprocity_substitution`.

    :return: Dict with keys ``quadratic_first``, ``quadratic_second`` and
    ``mixed``, each a :class:`ComplexVal` that vanishes.

    """
    pair.require_positive()
    policy = qseries.resolve_policy(policy)
    base = RademacherSpec.reciprocity_substitution(pair.p, pair.q, s, t, 0, 0)
    abc = base
    bca = base.rotated()
    cab = bca.rotated()
    a, b, c = 1, pair.p, pair.q

    def value(spec, m, n):
        return rademacher_sum(spec.with_orders(m, n), tau, policy)

    s20_abc, s02_abc, s11_abc = value(abc, 2, 0), value(abc, 0, 2), value(abc, 1, 1)
    s20_bca, s02_bca, s11_bca = value(bca, 2, 0), value(bca, 0, 2), value(bca, 1, 1)
    s02_cab, s11_cab = value(cab, 0, 2), value(cab, 1, 1)
    return {
        'quadratic_first': csum([s20_bca * (-c / (2.0 * b)), s02_cab * (c / (2.0 * a))]),
        'quadratic_second': csum([s20_abc * (b / (2.0 * a)), s02_bca * (-b / (2.0 * c))]),
        'mixed': csum([
            s02_abc * (a / (2.0 * b)), -s11_abc, s20_abc * (b / (2.0 * a)),
            -s11_bca, s20_bca * (-c / (2.0 * b)), s02_cab * (c / (1.0 * a)), -s11_cab,
            ]),
        }


def degeneration_gap(n, pair, tau, route=Route.ZETA_DERIVATIVE, policy=None):
    """
    ``D^-_2n(p, q; tau) - r (2 pi i)**2n`` with the exact rational factor
    ``r`` of :func:`exact.degeneration_limit`, as a :class:`ComplexVal`.

    """
    value = elliptic_apostol_sum(n, pair, tau, route, policy).value
    return value - float(exact.degeneration_limit(n, pair)) * two_pi_i_power(2 * n)


def degeneration_residual(n, pair, tau, route=Route.ZETA_DERIVATIVE, policy=None):
    """ ``|D^-_2n(p, q; tau) - r (2 pi i)**2n|``; shrinks as ``Im tau`` grows. """
    return abs(degeneration_gap(n, pair, tau, route, policy).value)


def verify_symbol_axioms(n, pair, tau, route=Route.ZETA_DERIVATIVE, policy=None):
    """
    Residuals of the Dedekind symbol axioms for ``D^-_2n`` and ``R^-_2n``:
    periodicity in ``q``, oddness in ``q`` and symmetry of ``R``.

    """
    p, q = pair.p, pair.q

    def d(other):
        return elliptic_apostol_sum(n, CoprimePair(p, other), tau, route, policy).value

    base = d(q)
    residuals = {
        'periodicity': d(q + p) - base,
        'oddness': d(-q) + base,
        }
    if q >= 1:
        residuals['symmetry'] = (reciprocity_rhs(n, pair, tau, policy)
                                 - reciprocity_rhs(n, pair.swapped(), tau, policy))
    return residuals


def reciprocity_residual(n, pair, tau, route=Route.ZETA_DERIVATIVE, policy=None):
    """ ``D^-_2n(p, q) + D^-_2n(q, p) - R^-_2n(p, q)``. """
    pair.require_positive()
    forward = elliptic_apostol_sum(n, pair, tau, route, policy).value
    backward = elliptic_apostol_sum(n, pair.swapped(), tau, route, policy).value
    return forward + backward - reciprocity_rhs(n, pair, tau, policy)

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

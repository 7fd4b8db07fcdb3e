# -*- coding: utf-8 -*-

"""
Eisenstein-series consequences of elliptic reciprocity: the coefficients
``c_j`` of ``T^-_2n``, the identities among them, Eisenstein period data and
the rank of the reciprocity polynomials across moduli.

"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy

from ellded import exact
from ellded import qseries
from ellded import symbols
from ellded.exact import CoprimePair
from ellded.laurent import LaurentPoly
from ellded.qseries import TWO_PI_I, csum, two_pi_i_power
from ellded.utils import get_setting

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoefficientVector:
    """
    ``c_0 .. c_{n+1}``, symmetric with both ends equal to ``E_{2n+2}``.
    ``scale`` is the size of the Eisenstein products the ``c_j`` are built
    from; it stays away from zero where the ``c_j`` themselves vanish.

    """

    n: int
    c: tuple
    scale: float

    def __getitem__(self, j):
        return self.c[j]

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def polynomial(self):
        """ ``T^-_2n = sum_j c_j p**2j q**(2n+2-2j)`` with complex coefficients. """
        n = self.n
        return LaurentPoly(dict(((2 * j, 2 * n + 2 - 2 * j), c.value) for j, c in enumerate(self.c)))


def c_coefficients(n, tau, policy=None):
    """
    ``c_0 = c_{n+1} = E_{2n+2}`` and ``c_j = -E_2j E_{2n+2-2j}`` for
    ``1 <= j <= n``. The boundary coefficients ``c_1`` and ``c_n`` also
    carry ``-(pi i / n) dE_2n/dtau``; at ``n = 1`` they are the same
    coefficient, which then carries the correction twice.

    """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    policy = qseries.resolve_policy(policy)
    es = dict((j, qseries.eisenstein(j, tau, policy)) for j in range(1, n + 2))
    correction = qseries.eisenstein_tau_derivative(n, tau, policy) * (math.pi * 1j / n)
    products = [abs(es[j] * es[n + 1 - j]) for j in range(1, n + 1)]
    scale = max(products + [abs(es[n + 1])]) + abs(correction)
    coefficients = []
    for j in range(n + 2):
        if j in (0, n + 1):
            coefficients.append(es[n + 1])
            continue
        c = -(es[j] * es[n + 1 - j])
        for edge in (1, n):
            if j == edge:
                c = c - correction
        coefficients.append(c)
    return CoefficientVector(n, tuple(coefficients), scale)


def t_polynomial(n, tau, policy=None):
    return c_coefficients(n, tau, policy).polynomial()


def t_value(n, pair, tau, policy=None):
    """ ``T^-_2n(p, q) = (2 pi i)**2 p q R^-_2n(p, q) - (2n+1) E_{2n+2}``. """
    rhs = symbols.reciprocity_rhs(n, pair, tau, policy)
    top = qseries.eisenstein(n + 1, tau, policy)
    return rhs * (two_pi_i_power(2) * pair.p * pair.q) - top * (2 * n + 1)


def s_value(n, pair, tau, policy=None):
    """ ``S^-_2n(p, q) = R^-_2n(p, q) - (2n+1) E_{2n+2} / ((2 pi i)**2 p q)``. """
    rhs = symbols.reciprocity_rhs(n, pair, tau, policy)
    top = qseries.eisenstein(n + 1, tau, policy)
    return rhs - top * ((2 * n + 1) / (two_pi_i_power(2) * pair.p * pair.q))


def verify_coefficient_identity(n, k, tau, policy=None):
    """
    ``sum_{2i >= k-1} C(2i, k-1) c_i + sum_{2i <= k} C(2n+2-2i, 2n+2-k) c_i``
    minus ``c_{(k-1)/2}`` for odd ``k`` or ``c_{k/2}`` for even ``k``.

    :param k:
    Integer in ``[1, 2n + 2]``.

    """
    if not 1 <= k <= 2 * n + 2:
        raise ValueError('k must lie in [1, %d], got %d' % (2 * n + 2, k))
    c = c_coefficients(n, tau, policy)
    terms = []
    for i in range(n + 2):
        if 2 * i >= k - 1:
            terms.append(c[i] * math.comb(2 * i, k - 1))
    for i in range(n + 2):
        if 2 * i <= k:
            terms.append(c[i] * math.comb(2 * n + 2 - 2 * i, 2 * n + 2 - k))
    target = c[(k - 1) // 2] if k % 2 else c[k // 2]
    return csum(terms) - target


def verify_e2n_derivative_identity(n, tau, policy=None):
    """
    ``(2 pi i / n) dE_2n/dtau + sum_{j=1}^{n} E_2j E_{2n+2-2j}
    - (2n+3) E_{2n+2}``, which vanishes; ``n = 1`` is
    ``2 pi i E_2' = 5 E_4 - E_2**2``.

    """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    policy = qseries.resolve_policy(policy)
    es = dict((j, qseries.eisenstein(j, tau, policy)) for j in range(1, n + 2))
    derivative = qseries.eisenstein_tau_derivative(n, tau, policy) * (TWO_PI_I / n)
    products = csum(es[j] * es[n + 1 - j] for j in range(1, n + 1))
    return derivative + products - es[n + 1] * (2 * n + 3)


def verify_three_term(n, pair, tau, policy=None):
    """ ``p T(p+q, q) + q T(p, p+q) - (p+q) T(p, q)``. """
    pair.require_positive()
    p, q = pair.p, pair.q
    return csum([
        t_value(n, CoprimePair(p + q, q), tau, policy) * p,
        t_value(n, CoprimePair(p, p + q), tau, policy) * q,
        -(t_value(n, pair, tau, policy) * (p + q)),
        ])


def verify_s_three_term(n, pair, tau, policy=None):
    """ ``S(p+q, q) + S(p, p+q) - S(p, q)``. """
    pair.require_positive()
    p, q = pair.p, pair.q
    return csum([
        s_value(n, CoprimePair(p + q, q), tau, policy),
        s_value(n, CoprimePair(p, p + q), tau, policy),
        -s_value(n, pair, tau, policy),
        ])


def reciprocity_polynomial(n, tau, policy=None):
    """
    ``R^-_2n`` as a Laurent polynomial, read off its closed form
    independently of the ``c_j``. Its coefficients are ``c_j / (2 pi i)**2``
    at ``p**(2j-1) q**(2n+1-2j)`` and ``(2n+1) E_{2n+2} / (2 pi i)**2`` at
    ``p**-1 q**-1``.

    """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    policy = qseries.resolve_policy(policy)
    es = dict((j, qseries.eisenstein(j, tau, policy).value) for j in range(1, n + 2))
    top = es[n + 1]
    scale = -1 / two_pi_i_power(2)
    terms = dict(((2 * j - 1, 2 * n + 1 - 2 * j), es[j] * es[n + 1 - j] * scale)
                 for j in range(1, n + 1))
    terms[(2 * n + 1, -1)] = -top * scale
    terms[(-1, 2 * n + 1)] = -top * scale
    terms[(-1, -1)] = -(2 * n + 1) * top * scale
    derivative = qseries.eisenstein_tau_derivative(n, tau, policy).value / (4j * math.pi * n)
    for key in ((2 * n - 1, 1), (1, 2 * n - 1)):
        terms[key] = terms.get(key, 0) - derivative
    return LaurentPoly(terms)


def reciprocity_scale(n, tau, policy=None):
    """ Size of the Eisenstein products in the coefficients of ``R^-_2n``. """
    return c_coefficients(n, tau, policy).scale / abs(two_pi_i_power(2))


def verify_r_limit(w, pair, tau, policy=None):
    """ ``R^-_w(p, q; tau) - 2 (2 pi i)**w / w! g_w(p, q)``; small for large ``Im tau``. """
    if w < 2 or w % 2:
        raise ValueError('weight must be a positive even integer, got %d' % w)
    rhs = symbols.reciprocity_rhs(w // 2, pair, tau, policy)
    limit = float(exact.g_poly(w)(pair.p, pair.q)) * 2 * two_pi_i_power(w) / math.factorial(w)
    return rhs - limit


@dataclass(frozen=True)
class PeriodData:
    """ Period data of the normalised Eisenstein series ``G_{2n+2}``. """

    n: int
    r2n: complex
    petersson: float
    odd_period: LaurentPoly

    def as_record(self):
        return {
            'n': self.n,
            'r2n': {'re': self.r2n.real, 'im': self.r2n.imag},
            'petersson': self.petersson,
            'odd_period': self.odd_period.to_json(),
            }


def eisenstein_odd_period(n):
    """
    ``r^-(G_{2n+2})(p, q) = -1/(pq) [sum_j (2n)! B_2j B_{2n+2-2j}
    / (2 (2j)! (2n+2-2j)!) p**2j q**(2n+2-2j) + B_{2n+2} / (4(n+1))]``.

    """
    w = 2 * n
    terms = {}
    for j in range(n + 2):
        coeff = (Fraction(math.factorial(w)) * exact.bernoulli_number(2 * j)
                 * exact.bernoulli_number(w + 2 - 2 * j)
                 / (2 * math.factorial(2 * j) * math.factorial(w + 2 - 2 * j)))
        terms[(2 * j - 1, w + 1 - 2 * j)] = -coeff
    terms[(-1, -1)] = -exact.bernoulli_number(w + 2) / (4 * (n + 1))
    return LaurentPoly(terms)


def eisenstein_period_data(n, policy=None):
    """
    ``r_2n(G) = (2n)! zeta(2n+1) / (2 (2 pi i)**(2n+1))`` and the Petersson
    norm ``(G, G) = (2n)! / (4 pi)**(2n+1) * B_{2n+2} / (2(2n+2)) * zeta(2n+1)``
    of ``G = G_{2n+2}``, with its odd period polynomial.

    """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    tol = policy.tol if policy is not None else None
    zeta = qseries.zeta_odd(n, tol)
    r2n = math.factorial(2 * n) * zeta / (2 * two_pi_i_power(2 * n + 1))
    petersson = (math.factorial(2 * n) / (4 * math.pi) ** (2 * n + 1)
                 * float(exact.bernoulli_number(2 * n + 2)) / (2 * (2 * n + 2)) * zeta)
    return PeriodData(n, complex(r2n), petersson, eisenstein_odd_period(n))


def verify_eisenstein_decomposition(w, tau, policy=None):
    """
    ``R^-_w(p, q; tau)`` minus its Eisenstein component
    ``-(2 i pi**w / w!) (r_w(G) / (G, G)) r^-(G)(p, q) G(tau)``, ``G = G_{w+2}``,
    as a Laurent polynomial. Only defined when there are no cusp forms of
    weight ``w + 2``.

    """
    d, _ = exact.dim_data(w)
    if d > 0:
        raise ValueError('weight %d carries %d cusp form(s); the Eisenstein part alone '
                         'does not reproduce R^-' % (w, d))
    n = w // 2
    data = eisenstein_period_data(n, policy)
    g = qseries.eisenstein_normalized(n + 1, tau, policy)
    factor = -2j * math.pi ** w / math.factorial(w) * data.r2n / data.petersson * g.value
    return reciprocity_polynomial(n, tau, policy) - data.odd_period * factor


def basis_rank(w, taus, policy=None):
    """
    Numerical rank of the coefficient matrix of ``R^-_w(.; tau_i)`` over the
    monomial support: singular values above ``ELLDED_RANK_THRESHOLD`` times
    the largest.

    :param taus:
    At least ``d_w + 1`` :class:`TauPoint` instances.

    """
    d, _ = exact.dim_data(w)
    if len(taus) < d + 1:
        raise ValueError('weight %d needs at least %d moduli, got %d' % (w, d + 1, len(taus)))
    n = w // 2
    support = sorted([(2 * j - 1, 2 * n + 1 - 2 * j) for j in range(n + 2)] + [(-1, -1)])
    rows = []
    for tau in taus:
        poly = reciprocity_polynomial(n, tau, policy)
        rows.append([complex(poly.coefficient(i, j)) for i, j in support])
    singular = numpy.linalg.svd(numpy.array(rows, dtype=complex), compute_uv=False)
    threshold = get_setting('ELLDED_RANK_THRESHOLD') * singular[0]
    rank = int(numpy.count_nonzero(singular > threshold))
    logger.debug('rank of R^-_%d over %d moduli: %d (singular values %s)',
                 w, len(taus), rank, singular)
    return rank

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

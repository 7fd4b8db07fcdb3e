# -*- coding: utf-8 -*-

"""
Exact rational arithmetic: Bernoulli numbers and polynomials, classical
Apostol-Dedekind sums and the rational period functions ``g_w``.

"""

import functools
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from ellded.exceptions import CoprimalityError
from ellded.laurent import LaurentPoly

_BERNOULLI = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli_number(k):
    """
    ``B_k`` with the convention ``B_1 = -1/2``.

    Values are memoised; the table only grows, under a lock, so readers
    never need one.

    """
    if k < 0:
        raise ValueError('Bernoulli index must be non-negative, got %d' % k)
    if k < len(_BERNOULLI):
        return _BERNOULLI[k]
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= k:
            m = len(_BERNOULLI)
            total = sum(math.comb(m + 1, j) * _BERNOULLI[j] for j in range(m))
            _BERNOULLI.append(-total / (m + 1))
    return _BERNOULLI[k]


def bernoulli_polynomial(k, x):
    """ ``B_k(x) = sum_j C(k, j) B_j x**(k-j)``, exact for rational ``x``. """
    if k < 0:
        raise ValueError('Bernoulli index must be non-negative, got %d' % k)
    x = Fraction(x)
    value = Fraction(0)
    for j in range(k + 1):
        value = value * x + math.comb(k, j) * bernoulli_number(j)
    return value


@functools.lru_cache(maxsize=65536)
def bernoulli_function(k, x):
    """
    Periodic Bernoulli function ``B_k({x})``, with ``B_1`` set to zero at the
    integers.

    """
    if k < 1:
        raise ValueError('periodic Bernoulli functions start at k = 1, got %d' % k)
    x = Fraction(x)
    reduced = x - math.floor(x)
    if k == 1 and reduced == 0:
        return Fraction(0)
    return bernoulli_polynomial(k, reduced)


@dataclass(frozen=True)
class CoprimePair:
    """
    Coprime pair ``(p, q)`` with ``p >= 1``.

    The reciprocity laws need both entries positive; :meth:`require_positive`
    checks that.

    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if not isinstance(p, int) or not isinstance(q, int):
            raise CoprimalityError('p and q must be integers, got %r, %r' % (p, q))
        if p < 1:
            raise CoprimalityError('p must be positive, got %d' % p)
        if math.gcd(p, q) != 1:
            raise CoprimalityError('gcd(%d, %d) = %d' % (p, q, math.gcd(p, q)))

    def require_positive(self):
        if self.q < 1:
            raise CoprimalityError('q must be positive, got %d' % self.q)
        return self

    def swapped(self):
        return CoprimePair(self.q, self.p)

    @classmethod
    def all_up_to(cls, bound):
        """ Every positive coprime pair with entries at most ``bound``. """
        return [cls(p, q) for p in range(1, bound + 1) for q in range(1, bound + 1)
                if math.gcd(p, q) == 1]

    def as_params(self):
        return {'p': self.p, 'q': self.q}


def apostol_sum(k, q, p):
    """
    Apostol-Dedekind sum ``s_k(q, p) = sum_{mu=1}^{p-1} (mu/p) B_k({mu q/p})``.

    :param k:
    Positive integer.

    :param q:
    Integer coprime to ``p``.

    :param p:
    Positive integer.

    :return: The exact value as a ``Fraction``.

    """
    CoprimePair(p, q)
    total = Fraction(0)
    for mu in range(1, p):
        total += Fraction(mu, p) * bernoulli_function(k, Fraction(mu * q, p))
    return total


def classical_dedekind_sum(q, p):
    return apostol_sum(1, q, p)


def _require_weight(w):
    if w < 2 or w % 2:
        raise ValueError('weight must be a positive even integer, got %d' % w)


def g_poly(w):
    """
    Rational period function ``g_w`` as a Laurent polynomial in ``(p, q)``.

    The monomial ``p**(2j-1) q**(w+1-2j)`` carries
    ``-w! B_2j B_{w+2-2j} / (2 (2j)! (w+2-2j)!)`` and ``p**-1 q**-1`` carries
    ``-B_{w+2} / (2 (w+2))``.

    """
    _require_weight(w)
    terms = {}
    for j in range(w // 2 + 2):
        coeff = (-Fraction(math.factorial(w)) * bernoulli_number(2 * j)
                 * bernoulli_number(w + 2 - 2 * j)
                 / (2 * math.factorial(2 * j) * math.factorial(w + 2 - 2 * j)))
        terms[(2 * j - 1, w + 1 - 2 * j)] = coeff
    terms[(-1, -1)] = -bernoulli_number(w + 2) / (2 * (w + 2))
    return LaurentPoly(terms)


def verify_apostol_reciprocity(w, pair):
    """
    Residual ``p**w s_{w+1}(q, p) + q**w s_{w+1}(p, q) + 2 (w+1) g_w(p, q)``,
    which is exactly zero.

    """
    _require_weight(w)
    pair.require_positive()
    p, q = pair.p, pair.q
    lhs = p ** w * apostol_sum(w + 1, q, p) + q ** w * apostol_sum(w + 1, p, q)
    return lhs + 2 * (w + 1) * g_poly(w)(p, q)


def dim_data(w):
    """
    ``(d_w, d_w + 1)``: the dimension of weight ``w + 2`` cusp forms and of
    the full space of modular forms of that weight.

    """
    _require_weight(w)
    d = (w + 2) // 12 - (1 if w % 12 == 0 else 0)
    return d, d + 1


def degeneration_limit(n, pair):
    """
    Rational factor ``r`` of the limit ``r * (2 pi i)**(2n)`` approached by the
    elliptic sum ``D^-_{2n}(p, q; tau)`` as ``Im tau`` grows:
    ``r = -p**(2n) s_{2n+1}(q, p) / (2n+1)!``.

    """
    if n < 1:
        raise ValueError('n must be positive, got %d' % n)
    p, q = pair.p, pair.q
    return -Fraction(p ** (2 * n)) * apostol_sum(2 * n + 1, q, p) / math.factorial(2 * n + 1)

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

# -*- coding: utf-8 -*-

"""
Laurent polynomials in two variables ``p`` and ``q``.

Coefficients may be any numbers supporting ``+``, ``*`` and comparison with
zero: exact ``Fraction`` values for the rational period functions, complex
floats for the numerically assembled reciprocity polynomials.

"""

from fractions import Fraction

from ellded.utils import format_rational


class LaurentPoly(object):
    """
    Finite sum ``sum c_ij p**i q**j`` with integer exponents.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term dictionaries are.

    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        cleaned = {}
        for key, coeff in dict(terms or {}).items():
            i, j = key
            key = (int(i), int(j))
            coeff = cleaned.get(key, 0) + coeff
            if coeff == 0:
                cleaned.pop(key, None)
            else:
                cleaned[key] = coeff
        self._terms = cleaned

    @classmethod
    def monomial(cls, i, j, coeff=1):
        return cls({(i, j): coeff})

    @classmethod
    def p(cls):
        return cls.monomial(1, 0)

    @classmethod
    def q(cls):
        return cls.monomial(0, 1)

    def terms(self):
        """ ``((i, j), coeff)`` pairs sorted by exponent. """
        return sorted(self._terms.items())

    def support(self):
        return sorted(self._terms)

    def coefficient(self, i, j):
        return self._terms.get((i, j), 0)

    def is_zero(self):
        return not self._terms

    def max_abs_coefficient(self):
        return max([abs(c) for c in self._terms.values()] or [0])

    def min_exponent(self):
        return min([min(key) for key in self._terms] or [0])

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if other == 0:
            return self.is_zero()
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return 'LaurentPoly(%r)' % (dict(self.terms()),)

    def __neg__(self):
        return LaurentPoly(dict((key, -c) for key, c in self._terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return LaurentPoly(terms)

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
        terms = {}
        for (i, j), a in self._terms.items():
            for (k, l), b in other._terms.items():
                key = (i + k, j + l)
                terms[key] = terms.get(key, 0) + a * b
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            if len(self._terms) != 1:
                raise ValueError('negative power of a polynomial with %d terms' % len(self._terms))
            ((i, j), coeff), = self._terms.items()
            inverse = LaurentPoly.monomial(-i, -j, Fraction(1) / coeff)
            return inverse ** -exponent
        result = LaurentPoly.monomial(0, 0)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, p, q):
        """
        Evaluate at ``(p, q)``. Exact for ``int`` and ``Fraction`` arguments
        when the coefficients are exact.

        """
        if isinstance(p, int):
            p = Fraction(p)
        if isinstance(q, int):
            q = Fraction(q)
        total = 0
        for (i, j), coeff in self.terms():
            total += coeff * p ** i * q ** j
        return total

    evaluate = __call__

    def swap(self):
        """ Exchange the roles of ``p`` and ``q``. """
        return LaurentPoly(dict(((j, i), c) for (i, j), c in self._terms.items()))

    def is_symmetric(self):
        return self == self.swap()

    def compose(self, p_value, q_value):
        """
        Substitute polynomials for ``p`` and ``q``.

        Negative exponents are only allowed where the substituted polynomial
        is a single monomial.

        """
        p_value, q_value = _coerce(p_value), _coerce(q_value)
        result = LaurentPoly()
        for (i, j), coeff in self.terms():
            result = result + (p_value ** i) * (q_value ** j) * coeff
        return result

    def shift_p(self):
        """ ``h(p + q, q)``. """
        return self.compose(LaurentPoly.p() + LaurentPoly.q(), LaurentPoly.q())

    def shift_q(self):
        """ ``h(p, p + q)``. """
        return self.compose(LaurentPoly.p(), LaurentPoly.p() + LaurentPoly.q())

    def period_defect(self):
        """
        Three-term defect of ``h = p*q*self``:
        ``p*h(p+q, q) + q*h(p, p+q) - (p+q)*h(p, q)``.

        Vanishes for the period functions of modular forms. Raises
        ``ValueError`` when ``h`` still has negative exponents.

        """
        pv, qv = LaurentPoly.p(), LaurentPoly.q()
        lifted = self * pv * qv
        if lifted.min_exponent() < 0:
            raise ValueError('p*q*h is not a polynomial')
        return pv * lifted.shift_p() + qv * lifted.shift_q() - (pv + qv) * lifted

    def to_json(self):
        """ Sorted list of ``{"i", "j", "coeff"}`` records. """
        return [{'i': i, 'j': j, 'coeff': _json_coefficient(c)} for (i, j), c in self.terms()]


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, float, complex, Fraction)):
        return LaurentPoly.monomial(0, 0, value)
    return NotImplemented


def _json_coefficient(coeff):
    if isinstance(coeff, (int, Fraction)):
        return format_rational(coeff)
    coeff = complex(coeff)
    return {'re': coeff.real, 'im': coeff.imag}

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

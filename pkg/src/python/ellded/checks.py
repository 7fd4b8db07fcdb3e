# -*- coding: utf-8 -*-

"""
Verification harness behind ``manage.py verify``.

Each family function returns a list of :class:`Verdict` in a fixed
parameter order and announces every verdict on
:data:`ellded.signals.check_complete`.

"""

import logging
from dataclasses import dataclass, field

from ellded import exact
from ellded import identities
from ellded import signals
from ellded import symbols
from ellded.exact import CoprimePair
from ellded.qseries import TauPoint, two_pi_i_power
from ellded.utils import format_rational, get_setting, pseudorandom_taus

logger = logging.getLogger(__name__)

RECIPROCITY_CASES = (
    (1, 3, 2), (1, 5, 3), (1, 7, 2), (1, 4, 1), (1, 2, 1),
    (2, 5, 3), (2, 3, 1), (2, 7, 4), (3, 2, 1), (3, 5, 2),
    )
SAMPLE_TAUS = ('0+1i', '0.3+1.1i', '0+1.4i')
LIMIT_CASES = ((1, 3, 1), (1, 5, 3), (2, 5, 2))
RADEMACHER_PAIRS = ((3, 2), (5, 3))


@dataclass(frozen=True)
class Verdict:
    check: str
    params: dict = field(hash=False)
    residual: object
    tol: float
    passed: bool

    def as_record(self):
        return {
            'check': self.check,
            'params': self.params,
            'residual': self.residual,
            'tol': self.tol,
            'pass': self.passed,
            }


def check_tolerance(family, override=None):
    """
    Tolerance of a check family: ``override`` (``--tol``), then
    ``ELLDED_CHECK_TOL``, then the family default.

    """
    if override is not None:
        return override
    configured = get_setting('ELLDED_CHECK_TOL')
    if configured is not None:
        return configured
    return get_setting('ELLDED_CHECK_TOLERANCES')[family]


def _announce(family, verdicts):
    for verdict in verdicts:
        signals.check_complete.send(sender=family, verdict=verdict)
    return verdicts


def _numeric(check, params, residual, tol):
    residual = float(residual)
    return Verdict(check, params, residual, tol, residual < tol)


def _tau_params(tau, **params):
    params['tau'] = str(tau)
    return params


def apostol_reciprocity(w_max=10, pq_max=30, tol=None):
    """ Exact reciprocity of the Apostol-Dedekind sums; residuals must be ``0/1``. """
    verdicts = []
    for w in range(2, w_max + 1, 2):
        for pair in CoprimePair.all_up_to(pq_max):
            residual = exact.verify_apostol_reciprocity(w, pair)
            verdicts.append(Verdict('apostol-reciprocity', {'w': w, 'p': pair.p, 'q': pair.q},
                                    format_rational(residual), 0.0, residual == 0))
    return _announce('apostol-reciprocity', verdicts)


def _weight_unit(n):
    # D^-_2n and R^-_2n carry (2 pi i)**2n; residuals are reported in that unit
    return abs(two_pi_i_power(2 * n))


def axioms(n, pair, tau, policy=None, tol=None):
    """
    Periodicity and oddness of ``D^-_2n`` in ``q`` and symmetry of
    ``R^-_2n``, in units of ``(2 pi i)**2n``.

    """
    tol = check_tolerance('axioms', tol)
    unit = _weight_unit(n)
    residuals = symbols.verify_symbol_axioms(n, pair, tau, policy=policy)
    verdicts = [_numeric('axioms.%s' % name, _tau_params(tau, n=n, p=pair.p, q=pair.q),
                         abs(residuals[name]) / unit, tol)
                for name in sorted(residuals)]
    return _announce('axioms', verdicts)


def reciprocity(n, pair, tau, policy=None, tol=None):
    """
    ``D^-_2n(p, q) + D^-_2n(q, p) = R^-_2n(p, q)`` and route agreement, in
    units of ``(2 pi i)**2n``.

    """
    tol = check_tolerance('reciprocity', tol)
    unit = _weight_unit(n)
    params = _tau_params(tau, n=n, p=pair.p, q=pair.q)
    residual = symbols.reciprocity_residual(n, pair, tau, policy=policy)
    zeta_route = symbols.elliptic_apostol_sum(n, pair, tau, symbols.Route.ZETA_DERIVATIVE, policy)
    product_route = symbols.elliptic_apostol_sum(n, pair, tau, symbols.Route.BERNOULLI_PRODUCT, policy)
    routes = zeta_route.value - product_route.value
    verdicts = [
        _numeric('reciprocity', params, abs(residual) / unit, tol),
        _numeric('reciprocity.routes', params, abs(routes) / unit, max(tol, routes.err / unit)),
        ]
    return _announce('reciprocity', verdicts)


def _constancy(check, params, values, constant, tol):
    spread = max(abs(a.value - b.value) for a in values for b in values)
    offset = max(abs(a.value - constant.value) for a in values)
    return [
        _numeric('%s.constancy' % check, params, spread, tol),
        _numeric('%s.constant' % check, params, offset, tol),
        ]


def generating(pair, tau, policy=None, tol=None, points=None):
    """ The generating-function residual is constant in ``x`` and equals ``-E_2/((2 pi i)**2 pq)``. """
    tol = check_tolerance('generating', tol)
    points = points or get_setting('ELLDED_GENERATING_POINTS')
    params = _tau_params(tau, p=pair.p, q=pair.q, x=list(points))
    values = [symbols.generating_reciprocity_residual(pair, tau, x, policy) for x in points]
    constant = symbols.reciprocity_constant(pair, tau, policy)
    return _announce('generating', _constancy('generating', params, values, constant, tol))


def bernoulli_sums(pair, tau, policy=None, tol=None, points=None):
    """ Reciprocity of ``B_1`` product sums: constancy in ``s``, the constant, the closed form. """
    tol = check_tolerance('bernoulli-sums', tol)
    points = points or get_setting('ELLDED_BERNOULLI_SUM_POINTS')
    params = _tau_params(tau, p=pair.p, q=pair.q, s=list(points))
    values = [symbols.bernoulli_reciprocity_residual(pair, s, tau, policy) for s in points]
    constant = symbols.reciprocity_constant(pair, tau, policy)
    verdicts = _constancy('bernoulli-sums', params, values, constant, tol)
    closed = symbols.bernoulli_reciprocity_constant(pair, tau, policy)
    gap = abs(values[0].value - closed.value)
    verdicts.append(_numeric('bernoulli-sums.closed-form', params, gap,
                             max(tol, values[0].err + closed.err)))
    return _announce('bernoulli-sums', verdicts)


def rademacher(pair, tau, s=None, t=None, policy=None, tol=None):
    """ The three coefficient identities of the Dedekind-Rademacher sums. """
    tol = check_tolerance('rademacher', tol)
    s = get_setting('ELLDED_SHIFT_S') if s is None else s
    t = get_setting('ELLDED_SHIFT_T') if t is None else t
    params = _tau_params(tau, p=pair.p, q=pair.q, s=s, t=t)
    residuals = symbols.rademacher_coefficient_residuals(pair, s, t, tau, policy)
    verdicts = [_numeric('rademacher.%s' % name, params, abs(residuals[name]), tol)
                for name in sorted(residuals)]
    return _announce('rademacher', verdicts)


def coefficients(n, tau, policy=None, tol=None):
    """
    Every coefficient identity ``k = 1 .. 2n+2``, relative to the size of
    the Eisenstein products in the ``c_j``.

    """
    tol = check_tolerance('coefficients', tol)
    scale = identities.c_coefficients(n, tau, policy).scale
    verdicts = []
    for k in range(1, 2 * n + 3):
        residual = identities.verify_coefficient_identity(n, k, tau, policy)
        verdicts.append(_numeric('coefficients', _tau_params(tau, n=n, k=k),
                                 abs(residual) / scale, tol))
    derivative = identities.verify_e2n_derivative_identity(n, tau, policy)
    verdicts.append(_numeric('coefficients.derivative', _tau_params(tau, n=n),
                             abs(derivative) / scale, tol))
    return _announce('coefficients', verdicts)


def three_term(n, pair, tau, policy=None, tol=None):
    """
    Weighted three-term relation of ``T^-_2n`` and the plain one of
    ``S^-_2n``, relative to their largest monomial at ``p + q`` when that
    exceeds one.

    """
    tol = check_tolerance('three-term', tol)
    params = _tau_params(tau, n=n, p=pair.p, q=pair.q)
    size = identities.c_coefficients(n, tau, policy).scale * (n + 2)
    top = pair.p + pair.q
    t_scale = max(1.0, size * top ** (2 * n + 3))
    s_scale = max(1.0, size * top ** (2 * n + 1) / _weight_unit(1))
    t_residual = identities.verify_three_term(n, pair, tau, policy)
    s_residual = identities.verify_s_three_term(n, pair, tau, policy)
    verdicts = [
        _numeric('three-term', params, abs(t_residual) / t_scale, tol),
        _numeric('three-term.s', params, abs(s_residual) / s_scale, tol),
        ]
    return _announce('three-term', verdicts)


def decomposition(w, tau, policy=None, tol=None):
    """
    ``R^-_w`` equals its Eisenstein component when ``d_w = 0``, relative to
    the Eisenstein products in its coefficients. Those stay finite where
    ``G_{w+2}`` and with it ``R^-_w`` vanish.

    """
    tol = check_tolerance('decomposition', tol)
    residual = identities.verify_eisenstein_decomposition(w, tau, policy)
    size = residual.max_abs_coefficient() / identities.reciprocity_scale(w // 2, tau, policy)
    return _announce('decomposition', [_numeric('decomposition', _tau_params(tau, w=w), size, tol)])


def basis_rank(w, num_tau=None, seed=None, policy=None, tol=None):
    """ Rank of the reciprocity polynomials over pseudorandom moduli is ``d_w + 1``. """
    d, dim = exact.dim_data(w)
    count = num_tau if num_tau is not None else d + 3
    seed = get_setting('ELLDED_DEFAULT_SEED') if seed is None else seed
    taus = [TauPoint(tau) for tau in pseudorandom_taus(count, seed)]
    rank = identities.basis_rank(w, taus, policy)
    verdict = Verdict('basis-rank', {'w': w, 'num_tau': count, 'seed': seed, 'dim': dim},
                      rank, get_setting('ELLDED_RANK_THRESHOLD'), rank == dim)
    return _announce('basis-rank', [verdict])


def limit(n, pair, policy=None, tol=None, heights=None):
    """
    ``D^-_2n(p, q; it)`` approaches its classical limit as ``t`` grows. The
    gap may not grow from the lowest to the highest ``t`` by more than the
    error bounds of the sums, which is all that is left once the q-tail
    drops below rounding.

    """
    tol = check_tolerance('limit', tol)
    heights = heights or get_setting('ELLDED_LIMIT_HEIGHTS')
    gaps = [symbols.degeneration_gap(n, pair, TauPoint(complex(0, t)), policy=policy)
            for t in heights]
    residuals = [abs(gap) for gap in gaps]
    slack = max(gap.err for gap in gaps)
    params = {'n': n, 'p': pair.p, 'q': pair.q, 't': list(heights)}
    growth = residuals[-1] - residuals[0]
    verdicts = [
        _numeric('limit', params, residuals[-1], tol),
        Verdict('limit.monotone', params, growth, slack, growth <= slack),
        ]
    return _announce('limit', verdicts)


def suite(policy=None, tol=None):
    """ The whole acceptance sweep, family by family. """
    verdicts = []
    verdicts += apostol_reciprocity(tol=tol)
    for text in SAMPLE_TAUS:
        tau = TauPoint.parse(text)
        for n, p, q in RECIPROCITY_CASES:
            pair = CoprimePair(p, q)
            verdicts += reciprocity(n, pair, tau, policy, tol)
            verdicts += axioms(n, pair, tau, policy, tol)
    for n, p, q in LIMIT_CASES:
        verdicts += limit(n, CoprimePair(p, q), policy, tol)
    for text in ('0+1i', '0.2+1.2i'):
        tau = TauPoint.parse(text)
        verdicts += generating(CoprimePair(3, 2), tau, policy, tol)
        verdicts += bernoulli_sums(CoprimePair(3, 2), tau, policy, tol)
    for p, q in RADEMACHER_PAIRS:
        verdicts += rademacher(CoprimePair(p, q), TauPoint(1j), policy=policy, tol=tol)
    for text in ('0+1i', '0.3+1.0i'):
        tau = TauPoint.parse(text)
        for n in range(1, 5):
            verdicts += coefficients(n, tau, policy, tol)
        verdicts += three_term(1, CoprimePair(2, 1), tau, policy, tol)
        verdicts += three_term(2, CoprimePair(3, 2), tau, policy, tol)
    for text in ('0+1i', '0.1+1.1i'):
        tau = TauPoint.parse(text)
        for w in (2, 4, 6, 8, 12):
            verdicts += decomposition(w, tau, policy, tol)
    for w in range(2, 16, 2):
        verdicts += basis_rank(w, policy=policy)
    logger.info('suite: %d checks, %d failed', len(verdicts),
                sum(1 for verdict in verdicts if not verdict.passed))
    return verdicts

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

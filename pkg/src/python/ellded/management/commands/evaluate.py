# -*- coding: utf-8 -*-

from ellded import exact
from ellded import identities
from ellded import qseries
from ellded import symbols
from ellded.management.base import EllDedCommand
from ellded.qseries import ComplexVal
from ellded.utils import format_complex, format_rational, get_setting, taylor_coefficient

TARGETS = (
    'bernoulli', 'apostol-sum', 'dedekind-sum', 'g-poly', 'dim',
    'eisenstein', 'elliptic-bernoulli', 'zeta-w', 'weierstrass-p', 'zeta-odd',
    'elliptic-sum', 'reciprocity-rhs', 'generating', 'rademacher', 'period-data',
    )

ALIASES = {'machide': 'rademacher'}


class Command(EllDedCommand):
    """
    Evaluate one quantity and print it as a JSON record
    ``{op, params, value}``.

    """

    help = 'Evaluates Dedekind sums, Eisenstein series and elliptic functions.'
    targets = TARGETS
    aliases = ALIASES
    schema = 'value'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--route', choices=[route.value for route in symbols.Route],
                            default=symbols.Route.ZETA_DERIVATIVE.value)
        parser.add_argument('--variant', choices=('full', 'normalized', 'derivative'),
                            default='full')
        parser.add_argument('--periodic', action='store_true')
        parser.add_argument('--block', choices=('D', 'R'), default='D')
        parser.add_argument('--orders', default='1,1', help='orders m,n of the Rademacher sum')
        parser.add_argument('--rotation', type=int, choices=(0, 1, 2), default=0)
        parser.add_argument('--degree', type=int,
                            help='Taylor coefficient of x**degree instead of the value at x')

    def run(self, target, options, config):
        handler = getattr(self, 'evaluate_%s' % target.replace('-', '_'))
        params, value = handler(options, config)
        record = {'op': target, 'params': params, 'value': value}
        if target == 'elliptic-sum':
            record['route'] = options['route']
        return [record], 0

    def evaluate_bernoulli(self, options, config):
        k = self.require(options, 'k')
        if options['x'] is None:
            return {'k': k}, format_rational(exact.bernoulli_number(k))
        x = self.rational(options, 'x')
        params = {'k': k, 'x': format_rational(x), 'periodic': options['periodic']}
        if options['periodic']:
            return params, format_rational(exact.bernoulli_function(k, x))
        return params, format_rational(exact.bernoulli_polynomial(k, x))

    def evaluate_apostol_sum(self, options, config):
        k, q, p = (self.require(options, name) for name in ('k', 'q', 'p'))
        return {'k': k, 'q': q, 'p': p}, format_rational(exact.apostol_sum(k, q, p))

    def evaluate_dedekind_sum(self, options, config):
        q, p = self.require(options, 'q'), self.require(options, 'p')
        return {'q': q, 'p': p}, format_rational(exact.classical_dedekind_sum(q, p))

    def evaluate_g_poly(self, options, config):
        w = self.require(options, 'w')
        return {'w': w}, exact.g_poly(w).to_json()

    def evaluate_dim(self, options, config):
        w = self.require(options, 'w')
        d, dim = exact.dim_data(w)
        return {'w': w}, {'d': d, 'dim': dim}

    def evaluate_eisenstein(self, options, config):
        n = self.require(options, 'n')
        tau = config.tau_point()
        evaluator = {
            'full': qseries.eisenstein,
            'normalized': qseries.eisenstein_normalized,
            'derivative': qseries.eisenstein_tau_derivative,
            }[options['variant']]
        value = evaluator(n, tau, config.policy())
        return {'n': n, 'tau': str(tau), 'variant': options['variant']}, value.as_record()

    def evaluate_elliptic_bernoulli(self, options, config):
        m = self.require(options, 'm')
        x, y = self.rational(options, 'x'), self.rational(options, 'y')
        tau = config.tau_point()
        value = qseries.elliptic_bernoulli(m, x, y, tau, config.policy())
        params = {'m': m, 'x': format_rational(x), 'y': format_rational(y), 'tau': str(tau)}
        return params, value.as_record()

    def evaluate_zeta_w(self, options, config):
        j = options['k'] or 0
        z = self.complex_argument(options, 'z')
        tau = config.tau_point()
        value = qseries.weierstrass_zeta_deriv(j, z, tau, config.policy())
        return {'k': j, 'z': format_complex(z), 'tau': str(tau)}, value.as_record()

    def evaluate_weierstrass_p(self, options, config):
        k = options['k'] or 0
        z = self.complex_argument(options, 'z')
        tau = config.tau_point()
        value = qseries.weierstrass_p_deriv(k, z, tau, config.policy())
        return {'k': k, 'z': format_complex(z), 'tau': str(tau)}, value.as_record()

    def evaluate_zeta_odd(self, options, config):
        n = self.require(options, 'n')
        tol = config.cleaned_data['tol']
        return {'n': n}, {'re': qseries.zeta_odd(n, tol), 'im': 0.0, 'err': tol or config.policy().tol}

    def evaluate_elliptic_sum(self, options, config):
        n = self.require(options, 'n')
        pair = self.pair(options)
        tau = config.tau_point()
        result = symbols.elliptic_apostol_sum(n, pair, tau, options['route'], config.policy())
        return result.as_record()['params'], result.value.as_record()

    def evaluate_reciprocity_rhs(self, options, config):
        n = self.require(options, 'n')
        pair = self.pair(options)
        tau = config.tau_point()
        value = symbols.reciprocity_rhs(n, pair, tau, config.policy())
        return {'n': n, 'p': pair.p, 'q': pair.q, 'tau': str(tau)}, value.as_record()

    def evaluate_generating(self, options, config):
        pair = self.pair(options)
        tau = config.tau_point()
        evaluator = symbols.generating_D if options['block'] == 'D' else symbols.generating_R
        policy = config.policy()
        params = {'block': options['block'], 'p': pair.p, 'q': pair.q, 'tau': str(tau)}
        degree = options['degree']
        if degree is None:
            x = self.rational(options, 'x')
            params['x'] = format_rational(x)
            return params, evaluator(pair, tau, x, policy).as_record()

        def sample(x):
            return evaluator(pair, tau, x, policy).value

        # error estimate: change against the fit with one node fewer
        points = get_setting('ELLDED_TAYLOR_POINTS')
        fine = taylor_coefficient(sample, degree, points=points)
        coarse = taylor_coefficient(sample, degree, points=points - 1)
        params['degree'] = degree
        return params, ComplexVal(fine, abs(fine - coarse)).as_record()

    def evaluate_rademacher(self, options, config):
        pair = self.pair(options)
        s = self.rational(options, 's', default=get_setting('ELLDED_SHIFT_S'))
        t = self.rational(options, 't', default=get_setting('ELLDED_SHIFT_T'))
        try:
            m, n = (int(order) for order in options['orders'].split(','))
        except ValueError:
            raise ValueError('--orders expects m,n, got %r' % options['orders'])
        tau = config.tau_point()
        spec = symbols.RademacherSpec.reciprocity_substitution(pair.p, pair.q, float(s),
                                                               float(t), m, n)
        for _ in range(options['rotation']):
            spec = spec.rotated()
        value = symbols.rademacher_sum(spec, tau, config.policy())
        params = spec.as_params()
        params['tau'] = str(tau)
        return params, value.as_record()

    def evaluate_period_data(self, options, config):
        n = self.require(options, 'n')
        return {'n': n}, identities.eisenstein_period_data(n, config.policy()).as_record()

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

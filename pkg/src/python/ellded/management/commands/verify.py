# -*- coding: utf-8 -*-

import logging

from django.dispatch import receiver

from ellded import checks
from ellded import signals
from ellded.management.base import EllDedCommand
from ellded.utils import get_setting

logger = logging.getLogger(__name__)

FAMILIES = (
    'apostol-reciprocity', 'axioms', 'reciprocity', 'generating', 'bernoulli-sums',
    'rademacher', 'coefficients', 'three-term', 'decomposition', 'basis-rank',
    'limit', 'suite',
    )

ALIASES = {
    'thm11': 'reciprocity',
    'thm13': 'generating',
    'prop31': 'bernoulli-sums',
    'lemma32': 'rademacher',
    'eq73': 'coefficients',
    'eq64': 'decomposition',
    }


@receiver(signals.check_complete)
def log_verdict(sender, verdict, **kwargs):
    logger.info('%s %s residual=%s tol=%g %s', verdict.check, verdict.params,
                verdict.residual, verdict.tol, 'pass' if verdict.passed else 'FAIL')


class Command(EllDedCommand):
    """
    Run a family of checks and print one JSON verdict
    ``{check, params, residual, tol, pass}`` per line. Exits with status 1
    when any check fails.

    """

    help = 'Verifies reciprocity laws and Eisenstein identities numerically.'
    targets = FAMILIES
    aliases = ALIASES
    schema = 'verdict'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--w-max', dest='w_max', type=int, default=10)
        parser.add_argument('--pq-max', dest='pq_max', type=int, default=30)
        parser.add_argument('--num-tau', dest='num_tau', type=int)

    def run(self, target, options, config):
        tol = config.cleaned_data['tol']
        if target == 'apostol-reciprocity':
            verdicts = checks.apostol_reciprocity(options['w_max'], options['pq_max'], tol)
        elif target == 'basis-rank':
            verdicts = checks.basis_rank(self.require(options, 'w'), options['num_tau'],
                                         config.cleaned_data['seed'], config.policy(), tol)
        elif target == 'limit':
            verdicts = checks.limit(self.require(options, 'n'), self.pair(options),
                                    config.policy(), tol)
        elif target == 'suite':
            verdicts = checks.suite(config.policy(), tol)
        else:
            verdicts = self.run_at_tau(target, options, config, tol)
        records = [verdict.as_record() for verdict in verdicts]
        return records, sum(1 for verdict in verdicts if not verdict.passed)

    def run_at_tau(self, target, options, config, tol):
        tau = config.tau_point()
        policy = config.policy()
        if target in ('axioms', 'reciprocity', 'three-term'):
            family = getattr(checks, target.replace('-', '_'))
            return family(self.require(options, 'n'), self.pair(options), tau, policy, tol)
        if target == 'generating':
            return checks.generating(self.pair(options), tau, policy, tol)
        if target == 'bernoulli-sums':
            return checks.bernoulli_sums(self.pair(options), tau, policy, tol)
        if target == 'rademacher':
            s = float(self.rational(options, 's', default=get_setting('ELLDED_SHIFT_S')))
            t = float(self.rational(options, 't', default=get_setting('ELLDED_SHIFT_T')))
            return checks.rademacher(self.pair(options), tau, s, t, policy, tol)
        if target == 'coefficients':
            return checks.coefficients(self.require(options, 'n'), tau, policy, tol)
        return checks.decomposition(self.require(options, 'w'), tau, policy, tol)

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

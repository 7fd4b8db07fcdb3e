# -*- coding: utf-8 -*-

import csv
import io
import json
import logging
from fractions import Fraction

import jsonschema
from django.core.management.base import BaseCommand, CommandError

from ellded.exact import CoprimePair
from ellded.exceptions import DomainError
from ellded.forms import FORMAT_CHOICES, RunConfigForm
from ellded.utils import load_schema, parse_complex, parse_rational

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def flag(name):
    """ Command-line spelling of an option: ``-n`` or ``--max-terms``. """
    if len(name) == 1 and name not in 'stz':
        return '-' + name
    return '--' + name.replace('_', '-')


def flatten(record, prefix=''):
    """ Flatten nested dicts to dotted keys; lists become JSON text. """
    row = {}
    for key, value in record.items():
        name = prefix + key
        if isinstance(value, dict):
            row.update(flatten(value, name + '.'))
        elif isinstance(value, list):
            row[name] = json.dumps(value, sort_keys=True, separators=(',', ':'))
        else:
            row[name] = value
    return row


class EllDedCommand(BaseCommand):
    """
    Shared plumbing of ``evaluate`` and ``verify``: argument parsing,
    ``RunConfigForm`` validation, exit codes and record output.

    Subclasses set ``targets`` and ``schema`` and implement :meth:`run`.
    ``aliases`` maps further accepted names onto targets.

    """

    requires_system_checks = []
    targets = ()
    aliases = {}
    schema = None

    def add_arguments(self, parser):
        parser.add_argument('target', choices=tuple(self.targets) + tuple(self.aliases))
        parser.add_argument('--tau', help='modulus written as a+bi')
        parser.add_argument('--tol', type=float)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--format', choices=[choice for choice, _ in FORMAT_CHOICES])
        parser.add_argument('--max-terms', dest='max_terms', type=int)
        for short in ('-n', '-p', '-q', '-k', '-w', '-m'):
            parser.add_argument(short, '-' + short, type=int)
        parser.add_argument('-x', help='rational, e.g. 1/3 or 0.25')
        parser.add_argument('-y', help='rational, e.g. 1/3 or 0.25')
        parser.add_argument('--s', dest='s')
        parser.add_argument('--t', dest='t')
        parser.add_argument('--z', dest='z', help='complex argument written as a+bi')

    def handle(self, *args, **options):
        form = RunConfigForm(data={
            'tau': options['tau'] or '',
            'tol': options['tol'],
            'seed': options['seed'],
            'format': options['format'] or '',
            'max_terms': options['max_terms'],
            })
        if not form.is_valid():
            raise CommandError(form.errors.as_text(), returncode=EXIT_USAGE)
        target = self.aliases.get(options['target'], options['target'])
        try:
            records, failed = self.run(target, options, form)
        except DomainError as error:
            logger.warning('%s %s: %s', self.__module__.rsplit('.', 1)[-1], target, error)
            raise CommandError(str(error), returncode=EXIT_DOMAIN)
        except ValueError as error:
            raise CommandError(str(error), returncode=EXIT_USAGE)
        self.emit(records, form.cleaned_data['format'])
        if failed:
            raise CommandError('%d of %d checks failed' % (failed, len(records)),
                               returncode=EXIT_FAILED)

    def run(self, target, options, config):
        """
        :return: Tuple of the list of records to print and the number of
        failed checks among them.

        """
        raise NotImplementedError

    def require(self, options, name):
        value = options.get(name)
        if value is None:
            raise CommandError('%s needs %s' % (options['target'], flag(name)),
                               returncode=EXIT_USAGE)
        return value

    def pair(self, options):
        return CoprimePair(self.require(options, 'p'), self.require(options, 'q'))

    def rational(self, options, name, default=None):
        text = options.get(name)
        if text is None and default is not None:
            return Fraction(default)
        text = self.require(options, name)
        try:
            return parse_rational(text)
        except (ValueError, ZeroDivisionError):
            raise CommandError('%s expects a rational, got %r' % (flag(name), text),
                               returncode=EXIT_USAGE)

    def complex_argument(self, options, name):
        text = self.require(options, name)
        try:
            return parse_complex(text)
        except ValueError:
            raise CommandError('%s expects a+bi, got %r' % (flag(name), text), returncode=EXIT_USAGE)

    def emit(self, records, fmt):
        validator = jsonschema.Draft7Validator(load_schema(self.schema))
        for record in records:
            validator.validate(record)
        if fmt == 'csv':
            rows = [flatten(record) for record in records]
            columns = sorted(set().union(*rows)) if rows else []
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator='\n')
            writer.writerow(columns)
            for row in rows:
                writer.writerow([row.get(column, '') for column in columns])
            self.stdout.write(buffer.getvalue(), ending='')
            return
        for record in records:
            if fmt == 'pretty':
                self.stdout.write(json.dumps(record, sort_keys=True, indent=2))
            else:
                self.stdout.write(json.dumps(record, sort_keys=True, separators=(',', ':')))

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4

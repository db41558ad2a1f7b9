# -*-  coding: utf-8 -*-
"""
Command line front end.

``analyze`` reports on one germ, ``corpus`` runs the bundled examples.
Exit codes of ``analyze``: 0 success, 2 invalid input, 3 a violated
consistency relation. ``corpus``: 0 all pass, 1 a failing item, 2 an
empty selection.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import sys

import six

from logres.config import settings
from logres.corpus import run_corpus
from logres.criteria import analyze
from logres.lib.exceptions import (ConfigurationError, ConsistencyError, CorpusError,
                                   InvalidBranchError, InvalidFactorizationError,
                                   InvalidGermError, LogresError, PolySyntaxError,
                                   UnknownVariableError, UnsupportedGermError)
from logres.lib.manage import Command, ManagementCommands
from logres.lib.utils import merge_truthy
from logres.log import log
from logres.log_derivations import DivisorGerm
from logres.normalization import load_branches
from logres.poly.parser import parse_variables

INPUT_ERRORS = (PolySyntaxError, UnknownVariableError, InvalidGermError, InvalidBranchError,
                InvalidFactorizationError, UnsupportedGermError, ConfigurationError)


class RunConfig(object):
    """
    Everything that determines an ``analyze`` run; echoed into the report.
    """
    FIELDS = ('vars', 'poly', 'factors', 'branches', 'format', 'precision', 'seed')

    def __init__(self, **kwargs):
        defaults = {'format': 'text', 'seed': settings.SEED}
        values = merge_truthy(defaults, kwargs)
        for field in self.FIELDS:
            setattr(self, field, values.get(field))
        if self.format not in ('text', 'json'):
            raise ConfigurationError("unknown format %r" % self.format)
        if self.precision is not None and int(self.precision) < 1:
            raise ConfigurationError("precision must be positive")

    def to_dict(self):
        return dict((f, getattr(self, f)) for f in self.FIELDS)


class AnalyzeDivisor(Command):
    """
    Analyzes the germ ``{poly = 0}``.

    Args:
        vars: comma separated variable names.
        poly: defining equation.
        factors: semicolon separated factorization.
        branches: branch parametrization JSON file.
    """
    CMD_NAME = 'analyze'
    HELP = 'Decide freeness, residue and normal crossing conditions of a divisor germ'
    PARAMS = [
        {'name': 'vars', 'required': True, 'help': 'Comma separated variables, e.g. x,y'},
        {'name': 'poly', 'required': True, 'help': 'Defining polynomial, e.g. "x^2 - y^3"'},
        {'name': 'factors', 'help': 'Semicolon separated factors of poly'},
        {'name': 'branches', 'help': 'JSON file with branch parametrizations'},
        {'name': 'format', 'default': 'text', 'help': 'text or json'},
        {'name': 'precision', 'type': int, 'help': 'Puiseux expansion accuracy'},
        {'name': 'seed', 'type': int, 'help': 'Seed of the random choices'},
    ]

    def run(self):
        args = self.manager.args
        try:
            config = RunConfig(**dict((f, getattr(args, f, None)) for f in RunConfig.FIELDS))
            report = self.analyze(config)
        except ConsistencyError as exc:
            log.exception("consistency failure")
            self.manager.write("consistency failure: %s" % exc)
            return 3
        except INPUT_ERRORS as exc:
            self.manager.write("error: %s" % exc)
            return 2
        except LogresError as exc:
            # certificate failures inside the engine
            log.exception("analysis failed")
            self.manager.write("internal failure: %s" % exc)
            return 3
        if config.format == 'json':
            self.manager.write(report.to_json())
        else:
            self.manager.write(report.to_text())
        return 0

    @staticmethod
    def analyze(config):
        variables = parse_variables(config.vars)
        germ = DivisorGerm.from_text(variables, config.poly)
        factors = None
        if config.factors:
            factors = [germ.context.parse(f) for f in config.factors.split(';') if f.strip()]
        branches = load_branches(config.branches, germ) if config.branches else None
        log.info("analyze %s = 0 in %s", germ.to_str(), ','.join(variables))
        return analyze(germ, factors, branches, config.precision, config.seed,
                       config.to_dict())


class RunCorpus(Command):
    """
    Runs the bundled corpus and compares every verdict with its expected
    value.
    """
    CMD_NAME = 'corpus'
    HELP = 'Run the bundled example corpus'
    PARAMS = [
        {'name': 'only', 'help': 'Comma separated item names'},
        {'name': 'workers', 'type': int, 'help': 'Worker threads'},
        {'name': 'seed', 'type': int, 'help': 'Seed of the random choices'},
    ]

    def run(self):
        args = self.manager.args
        only = [n.strip() for n in args.only.split(',')] if args.only else None
        try:
            results = run_corpus(only, args.workers, seed=args.seed)
        except CorpusError as exc:
            self.manager.write("error: %s" % exc)
            return 2
        for result in results:
            self.manager.write(('PASS ' if result.passed else 'FAIL ') + result.describe())
        failed = [r for r in results if not r.passed]
        if failed:
            self.manager.write("first failure: %s" % failed[0].describe())
            return 1
        self.manager.write("%d items passed" % len(results))
        return 0


def main(args=None):
    """Console entry point."""
    try:
        manager = ManagementCommands(args)
    except LogresError as exc:
        six.print_("error: %s" % exc, file=sys.stderr)
        return 2
    return manager.exit_code

# -*-  coding: utf-8 -*-
"""
Bundled corpus of divisor germs with their expected verdicts.

Items run on a thread pool; results come back in corpus order whatever
the completion order was.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from concurrent.futures import ThreadPoolExecutor

from logres.config import settings
from logres.criteria import analyze
from logres.lib.exceptions import CorpusError, LogresError
from logres.log import log
from logres.log_derivations import DivisorGerm

T, F = 'true', 'false'


class CorpusItem(object):
    """
    Args:
        name (str): selector for ``--only``.
        variables (str): comma separated variable names.
        h (str): defining equation.
        expected (dict): verdict field to expected value.
        factors (list): optional factor texts.
    """

    def __init__(self, name, variables, h, expected, factors=None):
        self.name = name
        self.variables = [v.strip() for v in variables.split(',')]
        self.h = h
        self.expected = dict(expected)
        self.factors = list(factors or [])

    def germ(self):
        return DivisorGerm.from_text(self.variables, self.h)

    def __repr__(self):
        return "CorpusItem(%s)" % self.name


class CorpusResult(object):
    def __init__(self, item, failures, report=None, error=None):
        self.item = item
        self.failures = failures
        self.report = report
        self.error = error

    @property
    def passed(self):
        return not self.failures and self.error is None

    def describe(self):
        if self.error is not None:
            return '%s: %s' % (self.item.name, self.error)
        return '%s: %s' % (self.item.name, '; '.join(
            '%s expected %s, got %s' % f for f in self.failures) or 'ok')


def _curve_verdicts(node_like, gorenstein=None):
    base = dict.fromkeys(('free', 'euler_homogeneous'), T)
    value = T if node_like else F
    base.update(dict.fromkeys(('jacobian_radical', 'jacobian_eq_conductor',
                               'residues_weakly_holomorphic', 'normal_crossing_at_origin',
                               'normal_crossing_codim1'), value))
    if gorenstein:
        base['gorenstein_singular_locus'] = gorenstein
    return base


CORPUS = [
    CorpusItem('node', 'x,y', 'x*y', _curve_verdicts(True, 'gorenstein'), ['x', 'y']),
    CorpusItem('cusp', 'x,y', 'x^2 - y^3', _curve_verdicts(False, 'gorenstein')),
    CorpusItem('triple_point', 'x,y', 'x*y*(x + y)', _curve_verdicts(False, 'gorenstein'),
               ['x', 'y', 'x + y']),
    CorpusItem('xy(x-y)', 'x,y', 'x*y*(x - y)', _curve_verdicts(False, 'gorenstein'),
               ['x', 'y', 'x - y']),
    CorpusItem('x(x+y)', 'x,y', 'x*(x + y)', _curve_verdicts(True, 'gorenstein'),
               ['x', 'x + y']),
    CorpusItem('x(x+y^2)', 'x,y', 'x*(x + y^2)', _curve_verdicts(False, 'gorenstein'),
               ['x', 'x + y^2']),
    CorpusItem('x(x+y^3)', 'x,y', 'x*(x + y^3)', _curve_verdicts(False, 'gorenstein'),
               ['x', 'x + y^3']),
    CorpusItem('xyz', 'x,y,z', 'x*y*z', {
        'free': T, 'euler_homogeneous': T, 'jacobian_radical': T,
        'jacobian_eq_conductor': T, 'residues_weakly_holomorphic': T,
        'normal_crossing_at_origin': T, 'normal_crossing_codim1': T,
        'gorenstein_singular_locus': 'not_gorenstein'}, ['x', 'y', 'z']),
    CorpusItem('whitney_umbrella', 'x,y,z', 'x^2 - y^2*z', {
        'free': F, 'euler_homogeneous': T, 'jacobian_radical': F,
        'residues_weakly_holomorphic': T, 'jacobian_eq_conductor': F,
        'normal_crossing_at_origin': F}),
    CorpusItem('four_planes', 'x,y,z', 'x*y*(x + y)*(x + y*z)', {
        'free': T, 'euler_homogeneous': T, 'jacobian_radical': F,
        'normal_crossing_at_origin': F, 'normal_crossing_codim1': F}),
    CorpusItem('non_quasihomogeneous', 'x,y', 'x^4 + y^5 + x*y^4', {
        'free': T, 'euler_homogeneous': F, 'jacobian_radical': F,
        'jacobian_eq_conductor': F, 'residues_weakly_holomorphic': F,
        'normal_crossing_at_origin': F, 'normal_crossing_codim1': F}),
]


def select(only=None, items=None):
    """
    Corpus items whose name is in ``only`` (all when empty).

    Raises:
        CorpusError: the filter selects nothing.
    """
    items = CORPUS if items is None else items
    if not only:
        return list(items)
    chosen = [item for item in items if item.name in only]
    if not chosen:
        raise CorpusError("no corpus item matches %s" % ', '.join(only))
    return chosen


def run_item(item, seed=None):
    try:
        germ = item.germ()
        factors = [germ.context.parse(f) for f in item.factors] or None
        report = analyze(germ, factors=factors, seed=seed)
    except LogresError as exc:
        log.exception("corpus item %s failed", item.name)
        return CorpusResult(item, [], error=exc)
    failures = []
    for field, expected in sorted(item.expected.items()):
        verdict = report.verdict(field)
        got = verdict.value if verdict is not None else None
        if got != expected:
            failures.append((field, expected, got))
    return CorpusResult(item, failures, report)


def run_corpus(only=None, workers=None, items=None, seed=None):
    """
    Runs the selected items on ``workers`` threads.

    Returns:
        list of :class:`CorpusResult` in corpus order.
    """
    chosen = select(only, items)
    workers = workers or settings.CORPUS_WORKERS
    log.info("corpus: %d items on %d workers", len(chosen), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda item: run_item(item, seed), chosen))

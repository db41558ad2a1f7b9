# -*-  coding: utf-8 -*-
"""
Decision procedures for the named conditions on a divisor germ and the
report that assembles them.

Conditions:

* ``B``: normal crossing outside a subset of codimension two in ``D``.
* ``C``: every residue of a logarithmic form is weakly holomorphic.
* ``D``: the Jacobian ideal is radical.
* ``F``: normal crossing at the origin.
* ``G``: the Jacobian ideal equals the conductor.

Every ``true`` verdict carries a certificate and every ``false`` verdict a
witness. Proven relations between the verdicts are evaluated on each germ
and collected as consistency records; a violated one aborts the analysis.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import time

import sympy

from logres.config import settings
from logres.fractional_ideals import dual, from_ideal, unit_ideal
from logres.groebner.ideal import Ideal
from logres.groebner.radical import NOT_RADICAL, RADICAL, radical_test
from logres.lib.exceptions import NoNonzerodivisorError, PrecisionError, UnsupportedGermError
from logres.log import log
from logres.log_derivations import milnor_number, tjurina_number
from logres.log_residues import (EMPTY, GORENSTEIN, MeroFraction, closed_forms_check,
                                 direct_sum_check, gorenstein_singular_locus, mu_residues,
                                 residue_module, validate_factors)
from logres.normalization import normalization, plane_milnor
from logres.poly.poly import rational_factors
from logres.report import FALSE, TRUE, UNDECIDED, DivisorReport, Verdict, check

NOT_APPLICABLE = 'not_applicable'
SUSPENSION = 'suspension_of_quasihomogeneous_plane_curve'


def _is_curve_like(germ):
    return germ.n >= 2 and len(germ.h.variables()) <= 2


def _smooth_at_origin(f):
    return any(f.differentiate(i).constant_term != 0 for i in range(f.n))


def _gradient_rank(factors, n):
    matrix = sympy.Matrix([[sympy.Rational(str(f.differentiate(i).constant_term))
                            for i in range(n)] for f in factors])
    return matrix.rank()


def check_normal_crossing_at_origin(germ, factors):
    """
    ``factors`` form part of a coordinate system at the origin: at most
    ``n`` of them, each smooth, with independent differentials at 0.

    Raises:
        InvalidFactorizationError: see :func:`validate_factors`.
    """
    validate_factors(germ, factors)
    if len(factors) > germ.n:
        return False
    if not all(_smooth_at_origin(f) for f in factors):
        return False
    return _gradient_rank(factors, germ.n) == len(factors)


def _essential_variables(form):
    """Number of linear coordinates a homogeneous form really depends on."""
    d = form.degree
    n = form.n
    linear = [form]
    for _ in range(d - 1):
        linear = [p.differentiate(i) for p in linear for i in range(n)]
        linear = [p for p in linear if p]
    rows = [[sympy.Rational(str(p.terms.get(tuple(1 if j == i else 0 for j in range(n)), 0)))
             for i in range(n)] for p in linear]
    return sympy.Matrix(rows).rank() if rows else 0


def _smooth_rational_factors(germ):
    """Rational factors through the origin when all of them are smooth there, else None."""
    factors = [f for f, _ in rational_factors(germ.h) if f.constant_term == 0]
    if factors and all(_smooth_at_origin(f) for f in factors):
        return factors
    return None


def normal_crossing_verdict(germ, factors=None):
    """Condition ``F`` for factored or unfactored input."""
    if factors:
        holds = check_normal_crossing_at_origin(germ, factors)
        if holds:
            return Verdict(TRUE, certificate='factors have independent differentials at 0')
        return Verdict(FALSE, witness='rank %d for %d factors' % (
            _gradient_rank(factors, germ.n), len(factors)))
    if germ.is_smooth():
        return Verdict(TRUE, certificate='smooth germ')
    smooth_factors = _smooth_rational_factors(germ)
    if smooth_factors is not None:
        verdict = normal_crossing_verdict(germ, smooth_factors)
        verdict.note = 'rational factorization %s' % '; '.join(
            germ.to_str(f) for f in smooth_factors)
        return verdict
    if _is_curve_like(germ):
        mu = plane_milnor(germ)
        if mu == 1:
            return Verdict(TRUE, certificate='curve factor has Milnor number 1')
        return Verdict(FALSE, witness='curve factor has Milnor number %s' % mu)
    initial = germ.h.initial_form()
    order = initial.degree
    essential = _essential_variables(initial)
    if order > germ.n or essential != order:
        return Verdict(FALSE, witness='initial form %s of degree %d depends on %d variables' % (
            germ.to_str(initial), order, essential))
    return Verdict.undecided('no rational smooth factorization')


def check_condition_D(germ, seed=None):
    result = radical_test(germ.jacobian.pullback(), seed)
    if result.status == RADICAL:
        return Verdict(TRUE, certificate=result.reason)
    if result.status == NOT_RADICAL:
        return Verdict(FALSE, witness=germ.to_str(result.witness),
                       certificate=result.reason)
    return Verdict.undecided(result.reason)


def _integral(fraction, germ, bound):
    """``p/q`` satisfies a monic equation of degree at most ``bound``."""
    p, q = fraction
    for k in range(1, bound + 1):
        gens = [p ** j * q ** (k - j) for j in range(k)]
        if Ideal(gens, germ.context, [germ.h]).contains(p ** k, local=True):
            return k
    return None


def check_condition_C(germ, data=None, module=None):
    """
    Every generator of ``R_D`` is weakly holomorphic: decided along the
    branches when normalization data exists, else certified by an
    integral equation when one of low degree exists.
    """
    module = module if module is not None else residue_module(germ)
    pairs = module.generators()
    if data is not None:
        try:
            for p, q in pairs:
                if not data.is_weakly_holomorphic(MeroFraction(p, q, germ)):
                    return Verdict(FALSE, witness='(%s)/(%s)' % (germ.to_str(p),
                                                                 germ.to_str(q)))
        except (PrecisionError, UnsupportedGermError) as exc:
            log.debug("condition C along branches: %s", exc)
        else:
            return Verdict(TRUE, certificate='no residue generator has a pole on a branch')
    degrees = []
    for pair in pairs:
        k = _integral(pair, germ, settings.INTEGRALITY_DEGREE_BOUND)
        if k is None:
            return Verdict.undecided('no integral equation of degree <= %d' %
                                     settings.INTEGRALITY_DEGREE_BOUND)
        degrees.append(k)
    return Verdict(TRUE, certificate='integral equations of degrees %s' % degrees)


def check_condition_G(germ, data=None, module=None, condition_c=None):
    """
    ``J_D == C_D``. Without normalization data the conductor is
    ``dual(R_D)`` once ``R_D`` is known to be the normalization.
    """
    jacobian = germ.jacobian
    if data is not None:
        conductor = data.conductor
    elif condition_c is not None and condition_c.is_true:
        module = module if module is not None else residue_module(germ)
        frac = dual(module)
        if frac.den != 1:
            return Verdict.undecided('dual of R_D has a denominator')
        conductor = Ideal(list(frac.num.gens), germ.context, [germ.h])
    else:
        return Verdict.undecided('conductor unknown')
    for g in conductor.gens:
        if not jacobian.contains(g, local=True):
            return Verdict(FALSE, witness=germ.to_str(g))
    if not conductor.includes(jacobian, local=True):
        for g in jacobian.gens:
            if not conductor.contains(g, local=True):
                return Verdict(FALSE, witness=germ.to_str(g))
    return Verdict(TRUE, certificate='<%s>' % ', '.join(jacobian.to_strings()))


def _pair_transversal(germ, f, g):
    n = germ.n
    minors = []
    for i in range(n):
        for j in range(i + 1, n):
            minors.append(f.differentiate(i) * g.differentiate(j) -
                          f.differentiate(j) * g.differentiate(i))
    tangency = Ideal([f, g] + minors, germ.context)
    return tangency.local_dimension() <= germ.n - 3


def check_condition_B(germ, factors=None):
    """
    Normal crossing in codimension one, for curves and suspensions and for
    arrangements of components smooth at the origin.
    """
    if germ.is_smooth():
        return Verdict(TRUE, certificate='smooth germ')
    if _is_curve_like(germ):
        mu = plane_milnor(germ)
        if mu == 1:
            return Verdict(TRUE, certificate='curve factor has Milnor number 1')
        return Verdict(FALSE, witness='curve factor has Milnor number %s' % mu)
    if factors is None or not all(_smooth_at_origin(f) for f in factors):
        factors = _smooth_rational_factors(germ)
    else:
        validate_factors(germ, factors)
    if factors is None:
        return Verdict.undecided('components are not all smooth at the origin')
    n = germ.n
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if not _pair_transversal(germ, factors[i], factors[j]):
                return Verdict(FALSE, witness='%s and %s are tangent in codimension one' % (
                    germ.to_str(factors[i]), germ.to_str(factors[j])))
            for k in range(j + 1, len(factors)):
                triple = Ideal([factors[i], factors[j], factors[k]], germ.context)
                if triple.local_dimension() > n - 3:
                    return Verdict(FALSE, witness='%s, %s and %s meet in codimension one' % (
                        germ.to_str(factors[i]), germ.to_str(factors[j]),
                        germ.to_str(factors[k])))
    return Verdict(TRUE, certificate='%d smooth components meet transversally' % len(factors))


def free_equivalence_crosscheck(germ, condition_b, condition_d, condition_g):
    """
    For a free germ the decided verdicts among normal crossing in
    codimension one, radical Jacobian ideal and Jacobian equal to conductor
    agree.

    Raises:
        ConsistencyError: two decided verdicts differ.
    """
    triple = (condition_b.value, condition_d.value, condition_g.value)
    decided = set(v for v in triple if v != UNDECIDED)
    return check('free-normal-crossing-radical-conductor', len(decided) <= 1,
                 'B, D, G = %s' % ', '.join(triple), h=germ.to_str())


class Classification(object):
    """Outcome of :func:`classify_gorenstein_locus`."""

    def __init__(self, kind, passive=(), curve=None, euler_field=None, note=''):
        self.kind = kind
        self.passive = list(passive)
        self.curve = curve
        self.euler_field = euler_field
        self.note = note

    def to_dict(self):
        return {'kind': self.kind, 'passive_directions': self.passive, 'curve': self.curve,
                'euler_field': self.euler_field, 'note': self.note}


def _translation_directions(germ):
    """Constant vector fields ``v`` with ``v(h) == 0``."""
    partials = germ.partials
    monomials = sorted(set(e for p in partials for e in p.terms))
    if not monomials:
        return [[1 if i == j else 0 for i in range(germ.n)] for j in range(germ.n)]
    matrix = sympy.Matrix([[sympy.Rational(str(p.terms.get(m, 0))) for p in partials]
                           for m in monomials])
    return [[sympy.Rational(c) for c in v] for v in matrix.nullspace()]


def classify_gorenstein_locus(germ, locus=None):
    """
    A germ whose singular locus is Gorenstein and of codimension one splits
    off smooth directions until a quasihomogeneous plane curve remains.
    The observable part is checked: at most two directions are essential
    and ``h`` is Euler homogeneous.
    """
    locus = locus if locus is not None else gorenstein_singular_locus(germ)
    if locus != GORENSTEIN:
        return Classification(NOT_APPLICABLE, note='singular locus is %s' % locus)
    z_dim = germ.jacobian.pullback().local_dimension()
    if z_dim != germ.n - 2:
        return Classification(NOT_APPLICABLE, note='singular locus has dimension %d' % z_dim)
    directions = _translation_directions(germ)
    if germ.n - len(directions) > 2:
        return Classification(NOT_APPLICABLE, note='only %d directions split off' %
                              len(directions))
    euler, field = germ.euler
    if not euler:
        return Classification(NOT_APPLICABLE, note='curve factor is not Euler homogeneous')
    return Classification(SUSPENSION, [[str(c) for c in v] for v in directions],
                          germ.to_str(), field.to_strings(germ.context))


def _chain_records(germ, module, data):
    """``J <= dual(R) <= C <= O <= O~ <= R`` as fractional ideal inclusions."""
    J = from_ideal(germ.jacobian, germ) if germ.jacobian.gens else None
    one = unit_ideal(germ)
    dual_r = dual(module)
    steps = []
    if J is not None:
        steps.append(('jacobian-in-dual-of-residues', dual_r.includes(J)))
    if data is not None:
        C = from_ideal(data.conductor, germ)
        steps.append(('dual-of-residues-in-conductor', C.includes(dual_r)))
        steps.append(('conductor-in-O', one.includes(C)))
        steps.append(('O-in-weakly-holomorphic', data.tilde.includes(one)))
        steps.append(('weakly-holomorphic-in-residues', module.includes(data.tilde)))
    else:
        steps.append(('dual-of-residues-in-O', one.includes(dual_r)))
        steps.append(('O-in-residues', module.includes(one)))
    return [check('chain-%s' % name, holds, h=germ.to_str()) for name, holds in steps]


def _verdict_implies(name, premise, conclusion, germ):
    if premise.is_true and conclusion.decided:
        return check(name, conclusion.is_true, '%s => %s' % (premise.value, conclusion.value),
                     h=germ.to_str())
    return None


def analyze(germ, factors=None, branches=None, precision=None, seed=None, config=None):
    """
    Runs every decision procedure on ``germ`` and returns a
    :class:`DivisorReport`.

    Args:
        germ (DivisorGerm): the germ.
        factors (list): optional factorization of ``h`` into components.
        branches (list): optional :class:`BranchParam` values.
        precision (int): Puiseux accuracy override.
        seed (int): seed of every random choice.
        config (dict): echoed into the provenance.

    Raises:
        ConsistencyError: a proven relation fails on this germ.
        InvalidFactorizationError, InvalidBranchError: bad user input.
    """
    seed = settings.SEED if seed is None else seed
    started = time.time()
    timings = {}

    def lap(name, since):
        timings[name] = round(time.time() - since, 4)
        return time.time()

    if factors is not None:
        validate_factors(germ, factors)
    report = DivisorReport({'variables': list(germ.variables), 'h': germ.to_str()})
    verdicts = report.verdicts
    data = report.data
    mark = time.time()

    free, matrix = germ.freeness
    if free:
        verdicts['free'] = Verdict(TRUE, certificate='det = (%s) * h / (%s)' % (
            germ.to_str(matrix.unit_num), germ.to_str(matrix.unit_den)))
        data['saito_matrix'] = [[germ.to_str(c) for c in row] for row in matrix.rows]
    else:
        verdicts['free'] = Verdict(FALSE, witness='%d minimal logarithmic fields' %
                                   len(germ.derivations.gens))
    euler, field = germ.euler
    verdicts['euler_homogeneous'] = Verdict(TRUE, certificate=field.to_strings(germ.context)) \
        if euler else Verdict(FALSE, witness='h not in the local ideal of its partials')
    data['log_derivations'] = [[germ.to_str(c) for c in g] for g in germ.derivations.gens]
    data['jacobian_ideal'] = germ.jacobian.to_strings()
    data['milnor_number'] = milnor_number(germ)
    data['tjurina_number'] = tjurina_number(germ)
    mark = lap('derivations', mark)

    module = residue_module(germ)
    data['residue_module'] = module.to_strings()
    count, contains_unit = mu_residues(germ, module)
    data['mu_residues'] = [count, contains_unit]
    locus = gorenstein_singular_locus(germ, module)
    verdicts['gorenstein_singular_locus'] = Verdict(
        locus, certificate='mu_residues = (%d, %s)' % (count, contains_unit)
        if locus == GORENSTEIN else None,
        witness='mu_residues = (%d, %s)' % (count, contains_unit)
        if locus not in (GORENSTEIN, EMPTY, UNDECIDED) else None)
    mark = lap('residues', mark)

    norm = None
    try:
        norm = normalization(germ, branches, precision)
    except (UnsupportedGermError, PrecisionError) as exc:
        data['normalization_note'] = str(exc)
        log.info("analyze %s: no normalization (%s)", germ.to_str(), exc)
    if norm is not None:
        data['normalization'] = norm.to_dict()
    mark = lap('normalization', mark)

    c = check_condition_C(germ, norm, module)
    verdicts['residues_weakly_holomorphic'] = c
    verdicts['jacobian_eq_conductor'] = check_condition_G(germ, norm, module, c)
    verdicts['jacobian_radical'] = check_condition_D(germ, seed)
    verdicts['normal_crossing_at_origin'] = normal_crossing_verdict(germ, factors)
    verdicts['normal_crossing_codim1'] = check_condition_B(germ, factors)
    mark = lap('conditions', mark)

    classification = classify_gorenstein_locus(germ, locus)
    data['classification'] = classification.to_dict()

    _consistency(report, germ, module, norm, factors, free, count, classification)
    lap('consistency', mark)

    report.provenance = {
        'seed': seed,
        'precision': precision,
        'truncation': norm.truncation if norm is not None else None,
        'branch_source': norm.source if norm is not None else None,
        'nzd_trial_budget': settings.NZD_TRIAL_BUDGET,
        'radical_trial_budget': settings.RADICAL_TRIAL_BUDGET,
        'integrality_degree_bound': settings.INTEGRALITY_DEGREE_BOUND,
        'truncation_margin': settings.TRUNCATION_MARGIN,
    }
    if config:
        report.provenance['config'] = dict(config)
    if settings.REPORT_TIMINGS:
        timings['total'] = round(time.time() - started, 4)
        report.provenance['timings'] = timings
    return report


def _consistency(report, germ, module, norm, factors, free, count, classification):
    v = report.verdicts
    b, c, d, g = (v['normal_crossing_codim1'], v['residues_weakly_holomorphic'],
                  v['jacobian_radical'], v['jacobian_eq_conductor'])
    f = v['normal_crossing_at_origin']
    try:
        for record in _chain_records(germ, module, norm):
            report.add(record)
    except NoNonzerodivisorError as exc:
        log.exception("chain inclusions skipped: %s", exc)

    report.add(check('residues-cyclic-iff-smooth', (count == 1) == germ.is_smooth(),
                     'mu = %d' % count, h=germ.to_str()))
    if free:
        J = from_ideal(germ.jacobian, germ) if germ.jacobian.gens else unit_ideal(germ)
        report.add(check('free-jacobian-is-dual-of-residues', dual(module).equals(J),
                         h=germ.to_str()))
        report.add(check('free-jacobian-reflexive', dual(dual(J)).equals(J), h=germ.to_str()))
        if c.decided and g.decided:
            report.add(check('free-weakly-holomorphic-iff-conductor', c.value == g.value,
                             'C = %s, G = %s' % (c.value, g.value), h=germ.to_str()))
        report.add(free_equivalence_crosscheck(germ, b, d, g))
        if norm is not None and f.decided and any(x.is_true for x in (b, c, d, g)):
            report.add(check('free-curve-condition-implies-normal-crossing', f.is_true,
                             'F = %s' % f.value, h=germ.to_str()))
    for record in (_verdict_implies('radical-implies-normal-crossing-codim1', d, b, germ),
                   _verdict_implies('normal-crossing-codim1-implies-weakly-holomorphic',
                                    b, c, germ)):
        if record is not None:
            report.add(record)
    if norm is not None and g.is_true and factors:
        smooth = all(_smooth_at_origin(x) for x in factors)
        report.add(check('conductor-jacobian-smooth-components', smooth, h=germ.to_str()))
    if classification.kind == SUSPENSION:
        report.add(check('gorenstein-locus-splits', True, classification.note or
                         '%d passive directions' % len(classification.passive),
                         h=germ.to_str()))
    if factors:
        _factor_records(report, germ, module, factors, c)


def _factor_records(report, germ, module, factors, c):
    direct = direct_sum_check(germ, factors, module)
    closed = closed_forms_check(germ, factors)
    report.data['direct_sum'] = bool(direct)
    report.data['idempotents'] = ['(%s)/(%s)' % (germ.to_str(p), germ.to_str(q))
                                  for p, q in direct.idempotents]
    report.data['closed_forms'] = closed
    report.add(check('closed-forms-iff-direct-sum', closed == bool(direct),
                     'closed = %s, direct = %s' % (closed, bool(direct)), h=germ.to_str()))
    if c.decided and _is_curve_like(germ):
        transversal = all(_pair_transversal(germ, factors[i], factors[j])
                          for i in range(len(factors)) for j in range(i + 1, len(factors)))
        report.add(check('direct-sum-iff-holomorphic-and-transversal',
                         bool(direct) == (c.is_true and transversal),
                         'direct = %s, C = %s, transversal = %s' % (
                             bool(direct), c.value, transversal), h=germ.to_str()))


# -*-  coding: utf-8 -*-
"""
Residues of logarithmic one-forms.

For ``omega = a / h`` logarithmic there are ``g``, ``xi`` and ``b`` with
``g * a == xi * grad(h) + h * b`` and ``g`` a nonzerodivisor modulo ``h``;
the residue is ``xi / g`` restricted to ``D``. The residue module is the
dual of the Jacobian ideal.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from logres.config import settings
from logres.fractional_ideals import dual, from_ideal, is_nonzerodivisor, make
from logres.groebner.ideal import Ideal, ModuleBasis, min_generators_local, syzygies
from logres.lib.exceptions import (ConsistencyError, EngineError, InvalidFactorizationError,
                                   NoNonzerodivisorError, NotLogarithmicError,
                                   ZeroDivisorError)
from logres.lib.utils import make_rng
from logres.log import log
from logres.log_derivations import LogOneForm, log_forms_basis
from logres.poly.poly import Poly, poly_gcd, squarefree_check
from logres.report import ConsistencyRecord

EMPTY = 'empty'
GORENSTEIN = 'gorenstein'
NOT_GORENSTEIN = 'not_gorenstein'
UNDECIDED = 'undecided'


def is_logarithmic(a, germ):
    """``dh_i * a_j - dh_j * a_i`` lies in ``<h>`` for every ``i < j``."""
    d = germ.partials
    n = germ.n
    for i in range(n):
        for j in range(i + 1, n):
            if not germ.principal.contains(d[i] * a[j] - d[j] * a[i], local=True):
                return False
    return True


class MeroFraction(object):
    """The meromorphic function ``xi / g`` on ``D``; ``g`` is a nonzerodivisor."""

    def __init__(self, xi, g, germ):
        self.xi = xi
        self.g = g
        self.germ = germ

    def equals(self, other):
        return self.germ.principal.contains(self.xi * other.g - other.xi * self.g, local=True)

    def is_zero(self):
        return self.germ.principal.contains(self.xi, local=True)

    def restrict(self, factor):
        return restrict(self, factor)

    def to_str(self):
        common = poly_gcd(self.xi, self.g) if self.xi else self.g
        p, q = self.xi.exact_div(common), self.g.exact_div(common)
        lead = q.lead()[1]
        p, q = p * (1 / lead), q * (1 / lead)
        if q == 1:
            return self.germ.to_str(p)
        return '(%s)/(%s)' % (self.germ.to_str(p), self.germ.to_str(q))

    def __repr__(self):
        return "MeroFraction(%s)" % self.to_str()


class Residue(object):
    """
    Residue of a form together with every certificate ``(g, xi, b)``
    that was found for ``a``.

    ``value`` already accounts for the unit in the form's denominator.
    """

    def __init__(self, form, certificates):
        self.form = form
        self.certificates = certificates
        g, xi, _ = certificates[0]
        self.value = MeroFraction(xi, g * form.unit, form.germ)

    @property
    def g(self):
        return self.certificates[0][0]

    @property
    def xi(self):
        return self.certificates[0][1]


class Restriction(object):
    """``num / den`` on the component ``{factor = 0}``; ``den`` does not vanish there."""

    def __init__(self, num, den, factor, germ):
        self.num = num
        self.den = den
        self.factor = factor
        self.germ = germ

    def equals(self, p, q=None):
        """Equality with ``p / q`` on the component."""
        q = q if q is not None else Poly.one(self.germ.n)
        component = Ideal([self.factor], self.germ.context)
        return component.contains(self.num * q - p * self.den, local=True)

    def valuation(self, param):
        """
        ``ord_t`` along a parametrization of the component.

        ``param`` lists one polynomial in ``t`` per variable.
        """
        num = self.num.substitute(param)
        den = self.den.substitute(param)
        if not den:
            raise ZeroDivisorError(self.germ.to_str(self.den), "the parametrized branch")
        if not num:
            return None
        return num.order - den.order


def restrict(fraction, factor):
    """
    Restriction of a fraction to the component ``{factor = 0}``.

    Raises:
        ZeroDivisorError: the denominator vanishes on the component.
    """
    component = Ideal([factor], fraction.germ.context)
    if component.contains(fraction.g, local=True):
        raise ZeroDivisorError(fraction.germ.to_str(fraction.g), fraction.germ.to_str(factor))
    return Restriction(fraction.xi, fraction.g, factor, fraction.germ)


def _relation_candidates(relations, rng, budget):
    rows = [r for r in relations if r[0]]
    for r in rows:
        yield r
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            yield tuple(p + q for p, q in zip(rows[i], rows[j]))
    all_rows = list(relations)
    for _ in range(budget):
        combo = None
        for r in all_rows:
            c = rng.randint(-3, 3)
            scaled = tuple(p * c for p in r)
            combo = scaled if combo is None else tuple(p + q for p, q in zip(combo, scaled))
        if combo is not None and combo[0]:
            yield combo


def residue_certificates(a, germ, wanted=None, seed=None):
    """
    Certificates ``(g, xi, b)`` with ``g * a == xi * grad(h) + h * b``.

    The pairs ``(g, -xi)`` are the first two coordinates of the relations
    between ``a``, ``grad(h)`` and ``h * e_k``; relation rows and their
    small combinations are tried until ``wanted`` distinct certificates
    with nonzerodivisor ``g`` are found.
    """
    wanted = settings.RESIDUE_CERTIFICATES if wanted is None else wanted
    seed = settings.SEED if seed is None else seed
    n = germ.n
    zero = Poly.zero(n)
    rows = [tuple(a), tuple(germ.partials)]
    for k in range(n):
        row = [zero] * n
        row[k] = germ.h
        rows.append(tuple(row))
    relations = syzygies(rows, germ.context).gens
    rng = make_rng(seed)
    found, tried = [], 0
    budget = settings.NZD_TRIAL_BUDGET
    for rel in _relation_candidates(relations, rng, budget):
        if tried >= budget or len(found) >= wanted:
            break
        tried += 1
        g, xi, b = rel[0], -rel[1], [-t for t in rel[2:]]
        if any((g, xi) == (f[0], f[1]) for f in found):
            continue
        if germ.principal.contains(g, local=True) or not is_nonzerodivisor(g, germ):
            continue
        lhs = [g * c for c in a]
        rhs = [xi * d + germ.h * bk for d, bk in zip(germ.partials, b)]
        if lhs != rhs:
            raise EngineError("residue certificate does not re-multiply")
        found.append((g, xi, tuple(b)))
    if not found:
        raise NoNonzerodivisorError(budget, "for a residue certificate")
    log.debug("residue: %d certificates after %d trials", len(found), tried)
    return found


def residue(form, seed=None):
    """
    Residue of a logarithmic one-form as a :class:`Residue`.

    Raises:
        NotLogarithmicError: the form is not logarithmic.
        EngineError: two certificates give different residues.
    """
    germ = form.germ
    if not is_logarithmic(form.a, germ):
        raise NotLogarithmicError("form %s is not logarithmic" % (form.to_strings(),))
    certificates = residue_certificates(form.a, germ, seed=seed)
    result = Residue(form, certificates)
    first = MeroFraction(certificates[0][1], certificates[0][0], germ)
    for g, xi, _ in certificates[1:]:
        if not first.equals(MeroFraction(xi, g, germ)):
            raise EngineError("residue depends on the certificate")
    return result


def sigma_check(field, res):
    """
    ``g * <delta, a> == delta(h) * xi`` modulo ``h`` for the residue
    certificate ``(g, xi)`` of ``res``.
    """
    germ = res.form.germ
    lhs = res.g * res.form.pair(field)
    rhs = field.apply(germ.h) * res.xi
    return germ.principal.contains(lhs - rhs, local=True)


def log_forms_module(germ):
    """
    Generators ``a`` of the logarithmic one-forms ``a / h``, minimal at the
    origin. Computed from the relations expressing the pairwise
    logarithmic congruences.
    """
    n = germ.n
    if n == 1:
        return ModuleBasis(1, [(Poly.one(1),)], germ.context)
    d = germ.partials
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    zero = Poly.zero(n)
    rows = []
    for k in range(n):
        row = []
        for i, j in pairs:
            if k == j:
                row.append(d[i])
            elif k == i:
                row.append(-d[j])
            else:
                row.append(zero)
        rows.append(tuple(row))
    for p in range(len(pairs)):
        row = [zero] * len(pairs)
        row[p] = germ.h
        rows.append(tuple(row))
    relations = syzygies(rows, germ.context)
    forms = [rel[:n] for rel in relations.gens if any(rel[:n])]
    for a in forms:
        if not is_logarithmic(a, germ):
            raise EngineError("relation does not give a logarithmic form")
    count, minimal = min_generators_local(ModuleBasis(n, forms, germ.context))
    return ModuleBasis(n, minimal, germ.context)


def residue_module(germ):
    """
    ``R_D`` as the dual of the Jacobian ideal.

    For free germs the residues of the dual basis of logarithmic forms
    must generate the same fractional ideal.

    Raises:
        ConsistencyError: the two descriptions differ.
    """
    result = dual(from_ideal(germ.jacobian, germ))
    free, matrix = germ.freeness
    if free:
        forms = log_forms_basis(matrix, germ)
        fractions = []
        for form in forms:
            value = residue(form).value
            fractions.append((value.xi, value.g))
        generated = make(fractions, germ)
        if not generated.equals(result):
            raise ConsistencyError(ConsistencyRecord(
                'residue-module-free-basis', False,
                "residues of the dual basis give %s, the dual gives %s" % (
                    generated.to_strings(), result.to_strings())))
    return result


def mu_residues(germ, module=None):
    """
    Minimal generator count of ``R_D`` at the origin and whether 1 is part
    of a minimal generating set (1 outside ``m * R_D``).

    Returns:
        (int, bool)
    """
    module = module if module is not None else residue_module(germ)
    count, _ = min_generators_local(module.num)
    n = germ.n
    m_gens = [Poly.variable(n, i) * g for i in range(n) for g in module.num.gens]
    mR = Ideal(m_gens, germ.context, [germ.h])
    contains_unit = not mR.contains(module.den, local=True)
    return count, contains_unit


def gorenstein_singular_locus(germ, module=None):
    """
    ``empty`` for smooth germs; for free germs ``gorenstein`` exactly when
    ``R_D`` is minimally generated by 1 and one more element; ``undecided``
    otherwise.
    """
    if germ.is_smooth():
        return EMPTY
    free, _ = germ.freeness
    if not free:
        return UNDECIDED
    return GORENSTEIN if mu_residues(germ, module) == (2, True) else NOT_GORENSTEIN


def validate_factors(germ, factors):
    """
    Checks that ``factors`` are pairwise coprime squarefree polynomials
    through the origin whose product is ``h`` up to a unit.

    Raises:
        InvalidFactorizationError
    """
    if not factors:
        raise InvalidFactorizationError("no factors")
    product = Poly.one(germ.n)
    for idx, f in enumerate(factors):
        if f.n != germ.n or f.is_constant():
            raise InvalidFactorizationError("factor %d is constant" % idx)
        if f.constant_term != 0:
            raise InvalidFactorizationError("factor %s does not pass through the origin" %
                                            germ.to_str(f))
        if not squarefree_check(f):
            raise InvalidFactorizationError("factor %s is not squarefree" % germ.to_str(f))
        product = product * f
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if not poly_gcd(factors[i], factors[j]).is_constant():
                raise InvalidFactorizationError("factors %s and %s share a component" % (
                    germ.to_str(factors[i]), germ.to_str(factors[j])))
    same = Ideal([product], germ.context).contains(germ.h, local=True) and \
        germ.principal.contains(product, local=True)
    if not same:
        raise InvalidFactorizationError("product of the factors is not a unit multiple of h")
    return product


class DirectSumResult(object):
    """
    Attributes:
        holds (bool): ``R_D`` is the sum of the component rings.
        idempotents (list): ``(g_i, f_i + g_i)`` numerator and denominator pairs.
    """

    def __init__(self, holds, idempotents):
        self.holds = holds
        self.idempotents = idempotents

    def __bool__(self):
        return self.holds

    __nonzero__ = __bool__


def direct_sum_check(germ, factors, module=None):
    """
    Whether ``R_D`` equals the product of the rings of the components.

    The idempotent of component ``i`` is ``g_i / (f_i + g_i)`` with ``g_i``
    the product of the other factors; ``e_i^2 == e_i`` and
    ``sum(e_i) == 1`` are certified modulo ``h`` before comparing the
    fractional ideal they generate with ``R_D``.
    """
    validate_factors(germ, factors)
    module = module if module is not None else residue_module(germ)
    n = germ.n
    idempotents = []
    for i, f in enumerate(factors):
        g = Poly.one(n)
        for j, other in enumerate(factors):
            if j != i:
                g = g * other
        idempotents.append((g, f + g))
    fractions = [MeroFraction(g, d, germ) for g, d in idempotents]
    for fr in fractions:
        square = MeroFraction(fr.xi * fr.xi, fr.g * fr.g, germ)
        if not square.equals(fr):
            raise EngineError("idempotent certificate failed")
    total_den = Poly.one(n)
    for _, d in idempotents:
        total_den = total_den * d
    total_num = Poly.zero(n)
    for g, d in idempotents:
        total_num = total_num + g * total_den.exact_div(d)
    if not MeroFraction(total_num, total_den, germ).equals(MeroFraction(Poly.one(n),
                                                                         Poly.one(n), germ)):
        raise EngineError("idempotents do not sum to one")
    components = make(idempotents, germ)
    holds = components.equals(module)
    return DirectSumResult(holds, idempotents)


def closed_forms_check(germ, factors, forms=None):
    """
    Whether every logarithmic one-form is a combination of the ``df_i/f_i``
    and holomorphic forms.
    """
    validate_factors(germ, factors)
    forms = forms if forms is not None else log_forms_module(germ)
    n = germ.n
    zero = Poly.zero(n)
    gens = []
    for i, f in enumerate(factors):
        # product of the other factors; equals h/f_i up to a unit
        g = Poly.one(n)
        for j, other in enumerate(factors):
            if j != i:
                g = g * other
        gens.append(tuple(g * f.differentiate(k) for k in range(n)))
    for k in range(n):
        e = [zero] * n
        e[k] = germ.h
        gens.append(tuple(e))
    span = ModuleBasis(n, gens, germ.context)
    return all(span.contains(a, local=True) for a in forms.gens)


def form_from_text(germ, coefficients):
    """``LogOneForm`` from coefficient texts of ``a`` in ``omega = a / h``."""
    return LogOneForm([germ.context.parse(c) for c in coefficients], germ)

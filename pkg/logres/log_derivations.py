# -*-  coding: utf-8 -*-
"""
Divisor germs and their logarithmic vector fields.

A :class:`DivisorGerm` is a reduced hypersurface ``{h = 0}`` through the
origin. Its logarithmic vector fields are the fields ``delta`` with
``delta(h)`` in ``<h>``; they are read off the relations between the
partials of ``h`` and ``h`` itself.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from logres.groebner.ideal import Ideal, ModuleBasis, PolyContext, min_generators_local, syzygies
from logres.lib.exceptions import EngineError, InvalidGermError, UncertifiedMatrixError
from logres.lib.utils import lazy_property
from logres.log import log
from logres.poly.orders import LOCAL
from logres.poly.parser import parse
from logres.poly.poly import Poly, determinant, squarefree_check


class DivisorGerm(object):
    """
    Reduced hypersurface germ at the origin.

    Args:
        variables (list): variable names.
        h (Poly): defining equation; must vanish at the origin and be
            squarefree.

    Raises:
        InvalidGermError: zero, non vanishing or non reduced equation.
    """

    def __init__(self, variables, h):
        self.variables = tuple(variables)
        if h.n != len(self.variables):
            raise InvalidGermError("equation uses %d variables, %d declared" % (
                h.n, len(self.variables)))
        if not h:
            raise InvalidGermError("zero polynomial")
        if h.constant_term != 0:
            raise InvalidGermError("h(0) != 0, the germ is empty")
        if not squarefree_check(h):
            raise InvalidGermError("not squarefree")
        self.h = h
        self.context = PolyContext(self.variables, LOCAL)

    @classmethod
    def from_text(cls, variables, text):
        return cls(variables, parse(text, variables))

    @property
    def n(self):
        return len(self.variables)

    @lazy_property
    def partials(self):
        return tuple(self.h.differentiate(i) for i in range(self.n))

    @lazy_property
    def principal(self):
        """``<h>`` as an ideal of the ambient ring."""
        return Ideal([self.h], self.context)

    @lazy_property
    def jacobian(self):
        return jacobian_ideal(self)

    @lazy_property
    def derivations(self):
        return log_derivations(self)

    @lazy_property
    def freeness(self):
        return is_free(self)

    @lazy_property
    def euler(self):
        return is_euler_homogeneous(self)

    def is_smooth(self):
        return self.jacobian.is_unit(local=True)

    def to_str(self, p=None):
        return self.context.to_str(self.h if p is None else p)

    def __eq__(self, other):
        return isinstance(other, DivisorGerm) and self.variables == other.variables and \
            self.h == other.h

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.variables, self.h))

    def __repr__(self):
        return "DivisorGerm(%s = 0 in %s)" % (self.to_str(), ','.join(self.variables))


class VectorField(object):
    """
    ``sum(coeffs[i] * d/dx_i) / denominator``; the denominator is a unit.
    """

    def __init__(self, coeffs, denominator=None):
        self.coeffs = tuple(coeffs)
        n = self.coeffs[0].n
        self.denominator = denominator if denominator is not None else Poly.one(n)

    def apply(self, p):
        """``denominator * delta(p)``; equals ``delta(p)`` for polynomial fields."""
        total = Poly.zero(p.n)
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + c * p.differentiate(i)
        return total

    def is_logarithmic(self, germ):
        return germ.principal.contains(self.apply(germ.h), local=True)

    def to_strings(self, context):
        coeffs = [context.to_str(c) for c in self.coeffs]
        if self.denominator == 1:
            return coeffs
        return ['(%s)/(%s)' % (c, context.to_str(self.denominator)) for c in coeffs]

    def __eq__(self, other):
        return isinstance(other, VectorField) and \
            [c * other.denominator for c in self.coeffs] == \
            [c * self.denominator for c in other.coeffs]

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "VectorField(%s)" % ', '.join(str(c) for c in self.coeffs)


class LogOneForm(object):
    """
    The meromorphic one-form ``omega = sum(a[i] dx_i) / (unit * h)``.

    ``unit`` has nonzero constant term; forms built from user data use 1.
    """

    def __init__(self, a, germ, unit=None):
        self.a = tuple(a)
        self.germ = germ
        self.unit = unit if unit is not None else Poly.one(germ.n)
        if len(self.a) != germ.n:
            raise ValueError("form needs %d coefficients" % germ.n)

    def pair(self, field):
        """``<delta, omega> * unit * h * field.denominator`` as a polynomial."""
        total = Poly.zero(self.germ.n)
        for c, a in zip(field.coeffs, self.a):
            total = total + c * a
        return total

    def to_strings(self):
        return [self.germ.to_str(a) for a in self.a]

    def __repr__(self):
        return "LogOneForm(%s / h)" % ', '.join(str(a) for a in self.a)


class SaitoMatrix(object):
    """
    Rows are the coefficient vectors of ``n`` logarithmic fields with
    ``det == (unit_num / unit_den) * h`` where both unit parts have
    nonzero constant term.
    """

    def __init__(self, rows, det, unit_num, unit_den=None):
        self.rows = tuple(tuple(r) for r in rows)
        self.det = det
        self.unit_num = unit_num
        self.unit_den = unit_den if unit_den is not None else Poly.one(det.n)

    @property
    def fields(self):
        return [VectorField(r) for r in self.rows]

    def is_certified(self, h):
        return (self.unit_num.is_unit_local() and self.unit_den.is_unit_local() and
                self.det * self.unit_den == self.unit_num * h)


def adjugate(rows):
    """``adj[k][j] = (-1)^(j+k) * det(rows without row j and column k)``."""
    size = len(rows)
    n = rows[0][0].n
    if size == 1:
        return [[Poly.one(n)]]
    adj = [[None] * size for _ in range(size)]
    for j in range(size):
        for k in range(size):
            minor = [r[:k] + r[k + 1:] for idx, r in enumerate(rows) if idx != j]
            d = determinant(minor)
            adj[k][j] = d if (j + k) % 2 == 0 else -d
    return adj


def jacobian_ideal(germ):
    """
    ``J_D`` as an ideal of ``O_D``: monic partials modulo ``h``.

    ``jacobian_ideal(D).pullback()`` is ``<h, dh/dx_1, ..., dh/dx_n>``.
    """
    return Ideal([p.monic() for p in germ.partials if p], germ.context, modulus=[germ.h])


def log_derivations(germ):
    """
    Generators of the logarithmic vector fields, minimal at the origin.

    They are the first ``n`` entries of the relations between the partials
    and ``h``; each one is checked to map ``h`` into ``<h>`` exactly.
    """
    n = germ.n
    rows = [(p,) for p in germ.partials] + [(germ.h,)]
    relations = syzygies(rows, germ.context)
    fields = []
    for rel in relations.gens:
        coeffs = rel[:n]
        if not any(coeffs):
            continue
        image = VectorField(coeffs).apply(germ.h)
        if image != -rel[n] * germ.h:
            raise EngineError("relation does not give a logarithmic field")
        fields.append(coeffs)
    module = ModuleBasis(n, fields, germ.context)
    count, minimal = min_generators_local(module)
    log.debug("log derivations of %s: %d generators, %d minimal", germ, len(fields), count)
    return ModuleBasis(n, minimal, germ.context)


def is_free(germ):
    """
    Saito's criterion.

    Returns:
        (bool, :class:`SaitoMatrix` or None)
    """
    module = germ.derivations
    if len(module.gens) != germ.n:
        return False, None
    rows = [tuple(g) for g in module.gens]
    det = determinant(rows)
    unit = det.exact_div(germ.h)
    if unit is not None:
        matrix = SaitoMatrix(rows, det, unit)
    else:
        # divisible only after inverting a unit
        rem, cert = germ.principal.normal_form(det, local=True, certify=True)
        if rem:
            raise EngineError("determinant of a minimal basis is not a multiple of h")
        quotient = cert.quotients[0] * (cert.basis[0][0].exact_div(germ.h) or Poly.zero(germ.n))
        matrix = SaitoMatrix(rows, det, quotient, cert.unit)
    if not matrix.is_certified(germ.h):
        raise EngineError("Saito determinant is not a unit multiple of h")
    return True, matrix


def is_euler_homogeneous(germ):
    """
    Whether ``h`` lies in the local ideal of its partials.

    Returns:
        (bool, :class:`VectorField` ``chi`` with ``chi(h) == h`` or None)
    """
    partials = Ideal(list(germ.partials), germ.context)
    member = partials.contains(germ.h, local=True)
    rows = [(p,) for p in germ.partials] + [(germ.h,)]
    witness = None
    for rel in sorted(syzygies(rows, germ.context).gens,
                      key=lambda r: (max(c.degree for c in r), str(r[-1]))):
        last = rel[-1]
        if not last.is_unit_local():
            continue
        if last.is_constant():
            witness = VectorField([c * (-1 / last.constant_term) for c in rel[:-1]])
        else:
            witness = VectorField(rel[:-1], -last)
        break
    if member != (witness is not None):
        raise EngineError("Euler membership and relation search disagree")
    if witness is not None and witness.apply(germ.h) != witness.denominator * germ.h:
        raise EngineError("Euler field does not map h to h")
    return member, witness


def log_forms_basis(matrix, germ):
    """
    Dual basis of logarithmic one-forms of a certified Saito matrix.

    ``omega_j`` is column ``j`` of the adjugate divided by the determinant,
    stored as ``(adj[:, j] * unit_den) / (unit_num * h)``.

    Raises:
        UncertifiedMatrixError: missing determinant certificate or failed pairing.
    """
    if matrix is None or not matrix.is_certified(germ.h):
        raise UncertifiedMatrixError("matrix has no verified Saito determinant")
    adj = adjugate(list(matrix.rows))
    size = len(matrix.rows)
    forms = []
    for j in range(size):
        a = [adj[k][j] * matrix.unit_den for k in range(size)]
        forms.append(LogOneForm(a, germ, matrix.unit_num))
    scale = matrix.unit_num * germ.h
    for i, field in enumerate(matrix.fields):
        for j, form in enumerate(forms):
            expected = scale if i == j else Poly.zero(germ.n)
            if form.pair(field) != expected:
                raise UncertifiedMatrixError("pairing of field %d and form %d is not %d" % (
                    i, j, int(i == j)))
    return forms


def singular_locus(germ):
    """``<h, dh/dx_i>`` in the ambient ring; defines ``Z`` inside ``S``."""
    return germ.jacobian.pullback()


def milnor_number(germ):
    """``dim_Q O_S/<dh/dx_i>``, None for a non isolated singularity."""
    return Ideal(list(germ.partials), germ.context).colength()


def tjurina_number(germ):
    return singular_locus(germ).colength()

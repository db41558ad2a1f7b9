# -*-  coding: utf-8 -*-
"""
Ideals and submodules of free modules over ``Q[x_1, ..., x_n]`` and its
localization at the origin.

Global questions (quotients, elimination, syzygies) are answered with
Buchberger bases; local ones (membership in the local ring, dimension and
colength at the origin, minimal generators) with Mora standard bases.
Ideals with homogeneous generators take the global path for local
questions too: every unit is a nonzerodivisor modulo a homogeneous ideal,
so both answers agree.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from itertools import combinations, product

import six

from logres.groebner import vectors as V
from logres.groebner.buchberger import Element, groebner_basis, reduce_vector
from logres.groebner.buchberger import spolys_reduce_to_zero as global_criterion
from logres.groebner.mora import local_standard_basis, mora_normal_form
from logres.groebner.mora import spolys_reduce_to_zero as local_criterion
from logres.lib.exceptions import EngineError
from logres.lib.utils import lazy_property
from logres.log import log
from logres.poly.orders import DEGREVLEX, LOCAL, elimination_order
from logres.poly.parser import parse
from logres.poly.poly import Poly


class PolyContext(object):
    """
    Variable names plus the monomial order questions default to.

    A context with a local order answers membership questions in the local
    ring at the origin unless told otherwise.
    """

    def __init__(self, variables, order=LOCAL):
        self.variables = tuple(variables)
        self.order = order

    @property
    def n(self):
        return len(self.variables)

    @property
    def is_local(self):
        return self.order.is_local

    def parse(self, text):
        return parse(text, self.variables)

    def to_str(self, p):
        return p.to_str(list(self.variables))

    def vector_str(self, vec):
        return '(%s)' % ', '.join(self.to_str(p) for p in vec)

    def __eq__(self, other):
        return (isinstance(other, PolyContext) and self.variables == other.variables and
                self.order == other.order)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return "PolyContext(%s, %r)" % (','.join(self.variables), self.order)


class Certificate(object):
    """
    Division certificate ``unit * f == sum(quotients[i] * basis[i]) + remainder``.

    All entries are vectors (tuples of :class:`Poly`); ideals use length one.
    """

    def __init__(self, element, unit, quotients, basis, remainder):
        self.element = tuple(element)
        self.unit = unit
        self.quotients = quotients
        self.basis = basis
        self.remainder = tuple(remainder)

    def verify(self):
        rank = len(self.element)
        lhs = [self.unit * c for c in self.element]
        rhs = list(self.remainder)
        for q, b in zip(self.quotients, self.basis):
            if q:
                rhs = [r + q * bc for r, bc in zip(rhs, b)]
        if lhs != rhs or not self.unit.is_unit_local():
            raise EngineError("division certificate does not re-multiply (rank %d)" % rank)
        return True


class StandardBasis(object):
    """
    A Groebner basis (global order) or standard basis (local order).

    Args:
        vecs (list): basis as term dicts.
        morder (ModuleOrder): order the basis is standard for.
        n (int): variable count.
        rank (int): rank of the ambient free module.
    """

    def __init__(self, vecs, morder, n, rank):
        self.vecs = vecs
        self.morder = morder
        self.n = n
        self.rank = rank

    @property
    def local(self):
        return self.morder.is_local

    @lazy_property
    def elements(self):
        return [tuple(V.to_polys(v, self.rank, self.n)) for v in self.vecs]

    @lazy_property
    def _reducers(self):
        return [Element(v, self.morder) for v in self.vecs]

    def polys(self):
        """Basis of an ideal as a list of :class:`Poly`."""
        return [e[0] for e in self.elements]

    def leading_terms(self):
        return [V.lead(v, self.morder)[0] for v in self.vecs]

    def __len__(self):
        return len(self.vecs)

    def normal_form(self, element, certify=False):
        """
        Remainder of ``element`` (a vector, or a Poly for ideals).

        Returns:
            (remainder vector, :class:`Certificate` or None)
        """
        if isinstance(element, Poly):
            element = (element,)
        vec = V.from_polys(element)
        cert = None
        if self.local:
            wnf = mora_normal_form(vec, self.vecs, self.morder, self.n, track=certify)
            rem, unit, quotients = wnf.remainder, wnf.unit, wnf.quotients
        else:
            quotients = [dict() for _ in self.vecs] if certify else None
            rem, _ = reduce_vector(vec, self._reducers, self.morder, quotients=quotients)
            if certify:
                unit = Poly.one(self.n)
                quotients = [Poly(self.n, q) for q in quotients]
        remainder = tuple(V.to_polys(rem, self.rank, self.n))
        if certify:
            cert = Certificate(element, unit, quotients, self.elements, remainder)
            cert.verify()
        return remainder, cert

    def contains(self, element):
        return not any(self.normal_form(element)[0])

    def is_standard(self):
        """Every s-vector of the basis reduces to zero."""
        if self.local:
            return local_criterion(self.vecs, self.morder, self.n)
        return global_criterion(self.vecs, self.morder)


def _compute_basis(vecs, order, n, rank, split=None):
    morder = V.ModuleOrder(order, split)
    if order.is_local:
        basis = local_standard_basis(vecs, morder, n)
    else:
        basis = groebner_basis(vecs, morder, rank_one=(rank == 1))
    return StandardBasis(basis, morder, n, rank)


class Ideal(object):
    """
    Ideal generated by ``gens`` plus the ``modulus`` generators.

    An ideal of ``O_D = O_S/<h>`` is an ideal with ``modulus=[h]``; its
    pull back to the ambient ring is generated by both lists.
    """

    def __init__(self, gens, context, modulus=None):
        self.context = context
        self.gens = tuple(g for g in gens if g)
        self.modulus = tuple(m for m in (modulus or ()) if m)

    @property
    def n(self):
        return self.context.n

    @property
    def all_gens(self):
        return self.gens + self.modulus

    def pullback(self):
        return Ideal(self.all_gens, self.context)

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.all_gens)

    def _vecs(self):
        return [V.from_polys([g]) for g in self.all_gens]

    @lazy_property
    def global_basis(self):
        order = self.context.order if self.context.order.is_global else DEGREVLEX
        return _compute_basis(self._vecs(), order, self.n, 1)

    @lazy_property
    def local_basis(self):
        if self.is_homogeneous():
            return self.global_basis
        order = self.context.order if self.context.order.is_local else LOCAL
        return _compute_basis(self._vecs(), order, self.n, 1)

    def standard_basis(self, local=None):
        local = self.context.is_local if local is None else local
        return self.local_basis if local else self.global_basis

    def normal_form(self, f, local=None, certify=False):
        rem, cert = self.standard_basis(local).normal_form(f, certify=certify)
        return rem[0], cert

    def contains(self, f, local=None):
        if not f:
            return True
        return self.standard_basis(local).contains(f)

    def includes(self, other, local=None):
        """``other`` is a subset of this ideal."""
        return all(self.contains(g, local) for g in other.all_gens)

    def equals(self, other, local=None):
        return self.includes(other, local) and other.includes(self, local)

    def is_unit(self, local=None):
        return self.contains(Poly.one(self.n), local)

    def plus(self, gens):
        return Ideal(self.gens + tuple(gens), self.context, self.modulus)

    def times(self, other):
        gens = [a * b for a in self.all_gens for b in other.all_gens]
        return Ideal(gens, self.context, self.modulus)

    def local_dimension(self):
        """Krull dimension of the local ring at the origin, ``-1`` if it is zero."""
        if not self.all_gens:
            return self.n
        return monomial_dimension([t[1] for t in self.local_basis.leading_terms()], self.n)

    def colength(self):
        """``dim_Q`` of the local quotient ring, None when infinite."""
        if self.is_unit(local=True):
            return 0
        return standard_monomial_count([t[1] for t in self.local_basis.leading_terms()], self.n)

    def quotient(self, other):
        return ideal_quotient(self, other)

    def saturation(self, f):
        return saturation(self, f)

    def eliminate(self, drop):
        return eliminate(self, drop)

    def min_generators_local(self):
        return min_generators_local(self)

    def to_strings(self):
        return [self.context.to_str(g) for g in self.gens]

    def __repr__(self):
        mod = ' mod <%s>' % ', '.join(self.context.to_str(m) for m in self.modulus) \
            if self.modulus else ''
        return "<%s>%s" % (', '.join(self.to_strings()), mod)


class ModuleBasis(object):
    """
    Submodule of the free module of rank ``rank`` generated by ``gens``.

    Generators are tuples of :class:`Poly`; zero vectors are dropped.
    """

    def __init__(self, rank, gens, context):
        self.rank = rank
        self.context = context
        self.gens = tuple(tuple(g) for g in gens if any(g))
        for g in self.gens:
            if len(g) != rank:
                raise ValueError("vector of length %d in a module of rank %d" % (len(g), rank))

    @property
    def n(self):
        return self.context.n

    def _vecs(self):
        return [V.from_polys(g) for g in self.gens]

    @lazy_property
    def global_basis(self):
        order = self.context.order if self.context.order.is_global else DEGREVLEX
        return _compute_basis(self._vecs(), order, self.n, self.rank)

    @lazy_property
    def local_basis(self):
        order = self.context.order if self.context.order.is_local else LOCAL
        return _compute_basis(self._vecs(), order, self.n, self.rank)

    def standard_basis(self, local=None):
        local = self.context.is_local if local is None else local
        return self.local_basis if local else self.global_basis

    def contains(self, vec, local=None):
        if not any(vec):
            return True
        return self.standard_basis(local).contains(tuple(vec))

    def includes(self, other, local=None):
        return all(self.contains(g, local) for g in other.gens)

    def equals(self, other, local=None):
        return self.includes(other, local) and other.includes(self, local)

    def min_generators_local(self):
        return min_generators_local(self)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        return "ModuleBasis(%s)" % ', '.join(self.context.vector_str(g) for g in self.gens)


def standard_basis(obj, local=None):
    """Standard basis of an :class:`Ideal` or :class:`ModuleBasis`."""
    return obj.standard_basis(local)


def normal_form(f, basis, certify=False):
    """
    Remainder of ``f`` against a :class:`StandardBasis`.

    Returns the remainder alone, or ``(remainder, certificate)`` when
    ``certify`` is set.
    """
    rem, cert = basis.normal_form(f, certify=certify)
    if isinstance(f, Poly):
        rem = rem[0]
    return (rem, cert) if certify else rem


def syzygies(rows, context):
    """
    Generators of the module of relations ``sum(a_i * rows[i]) == 0``.

    ``rows`` are vectors of equal length ``r``; the result has rank
    ``len(rows)``. Computed from a Groebner basis of ``(rows[i] | e_i)``
    under an order in which the first ``r`` components dominate.
    """
    rows = [tuple(r) for r in rows]
    m = len(rows)
    if not m:
        return ModuleBasis(0, [], context)
    r = len(rows[0])
    n = context.n
    vecs = []
    for i, row in enumerate(rows):
        vec = V.from_polys(row)
        vec[(r + i, (0,) * n)] = 1
        vecs.append(vec)
    basis = _compute_basis(vecs, DEGREVLEX, n, r + m, split=r)
    result = []
    for vec in basis.vecs:
        lt, _ = V.lead(vec, basis.morder)
        if lt[0] < r:
            continue
        syz = V.to_polys(V.shift(vec, -r), m, n)
        total = [Poly.zero(n)] * r
        for a, row in zip(syz, rows):
            total = [t + a * c for t, c in zip(total, row)]
        if any(total):
            raise EngineError("syzygy does not annihilate its row")
        result.append(tuple(syz))
    log.debug("syzygies: %d relations among %d vectors of length %d", len(result), m, r)
    return ModuleBasis(m, result, context)


def ideal_quotient(I, J):
    """
    ``I : J = {g | g * J in I}`` in one syzygy computation.

    ``g`` is the first coordinate of the relations between the vector
    ``(j_1, ..., j_m)`` and the vectors ``f_i * e_l``.
    """
    context = I.context
    n = context.n
    jgens = J.all_gens
    if not jgens:
        return Ideal([Poly.one(n)], context, I.modulus)
    m = len(jgens)
    zero = Poly.zero(n)
    rows = [tuple(jgens)]
    for l in range(m):
        for f in I.all_gens:
            row = [zero] * m
            row[l] = f
            rows.append(tuple(row))
    syz = syzygies(rows, context)
    return Ideal([s[0] for s in syz.gens], context, I.modulus)


def saturation(I, f):
    """``I : f^infinity`` by iterated quotients."""
    if not isinstance(f, Ideal):
        f = Ideal([f], I.context)
    current = I
    steps = 0
    while True:
        nxt = ideal_quotient(current, f)
        steps += 1
        if current.includes(nxt, local=False):
            log.debug("saturation stable after %d quotients", steps)
            return current
        current = nxt


def eliminate(I, drop):
    """``I`` intersected with the subring free of the variables in ``drop``."""
    drop = set(drop)
    order = elimination_order(I.n, drop)
    basis = _compute_basis(I._vecs(), order, I.n, 1)
    kept = [p for p in basis.polys() if not p.variables() & drop]
    return Ideal(kept, I.context)


def min_generators_local(obj):
    """
    Minimal number of generators at the origin and a minimal subset.

    Generators are discarded from the back while they lie in the local
    span of the remaining ones (and of the modulus for ideals of ``O_D``).
    An irredundant generating set over a local ring is minimal by
    Nakayama's lemma.

    Returns:
        (count, tuple of generators)
    """
    gens = list(obj.gens)
    k = len(gens) - 1
    while k >= 0:
        rest = gens[:k] + gens[k + 1:]
        if isinstance(obj, Ideal):
            span = Ideal(rest, obj.context, obj.modulus)
        else:
            span = ModuleBasis(obj.rank, rest, obj.context)
        if span.contains(gens[k], local=True):
            gens = rest
        k -= 1
    return len(gens), tuple(gens)


def monomial_dimension(leads, n):
    """Krull dimension of ``Q[x]/<leads>``: the largest independent variable set."""
    if any(not any(e) for e in leads):
        return -1
    supports = [set(i for i, k in enumerate(e) if k) for e in leads]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if all(not s <= chosen for s in supports):
                return size
    return 0


def standard_monomial_count(leads, n):
    """Number of monomials outside ``<leads>``, None when infinite."""
    if any(not any(e) for e in leads):
        return 0
    bounds = []
    for i in range(n):
        pure = [e[i] for e in leads if e[i] and all(not k for j, k in enumerate(e) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    count = 0
    for exp in product(*[six.moves.range(b) for b in bounds]):
        if not any(all(a >= b for a, b in zip(exp, e)) for e in leads):
            count += 1
    return count

# -*-  coding: utf-8 -*-
"""
Standard bases in the localization at the origin.

Normal forms follow Mora's tangent cone algorithm: the reducer with the
smallest ecart is chosen, and the current remainder joins the reducer set
whenever it has smaller ecart than the chosen reducer. The result is a weak
normal form ``u * f = sum(q_i * b_i) + r`` with ``u(0) != 0``.

Standard bases themselves are dehomogenized Groebner bases of the
homogenized generators (Lazard's method).
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import six
from sympy.polys.monomials import monomial_div, monomial_lcm

from logres.groebner import vectors as V
from logres.groebner.buchberger import groebner_basis
from logres.log import log
from logres.poly.poly import Poly


class _Reducer(object):
    __slots__ = ('vec', 'lt', 'lc', 'ecart', 'unit', 'quot')

    def __init__(self, vec, morder, unit=None, quot=None):
        self.vec = vec
        self.lt, self.lc = V.lead(vec, morder)
        self.ecart = V.ecart(vec, self.lt)
        self.unit = unit
        self.quot = quot


class WeakNormalForm(object):
    """
    Outcome of a Mora reduction.

    Attributes:
        remainder (dict): term dict ``r``.
        unit (Poly): ``u`` with nonzero constant term, or None when untracked.
        quotients (list): ``q_i`` as :class:`Poly`, or None when untracked.
    """

    def __init__(self, remainder, unit=None, quotients=None):
        self.remainder = remainder
        self.unit = unit
        self.quotients = quotients


def mora_normal_form(vec, basis, morder, n, track=False):
    """
    Weak normal form of ``vec`` against ``basis`` (term dicts).

    With ``track`` the unit and the quotients are recorded as well; the
    invariant kept for every reducer ``t`` is ``t = u_t * f - sum(q_t,j * b_j)``.
    """
    zero = Poly.zero(n)
    reducers = []
    for k, b in enumerate(basis):
        quot = None
        if track:
            quot = [zero] * len(basis)
            quot[k] = Poly.constant(n, -1)
        reducers.append(_Reducer(b, morder, zero if track else None, quot))

    h = dict(vec)
    unit = Poly.one(n) if track else None
    quot = [zero] * len(basis) if track else None
    while h:
        lt, lc = V.lead(h, morder)
        best = None
        for t in reducers:
            if V.term_div(lt, t.lt) is not None and (best is None or t.ecart < best.ecart):
                best = t
        if best is None:
            break
        h_ecart = V.ecart(h, lt)
        if best.ecart > h_ecart:
            reducers.append(_Reducer(h, morder, unit, list(quot) if track else None))
        m = V.term_div(lt, best.lt)
        coeff = lc / best.lc
        h = V.sub_multiple(h, best.vec, coeff, m)
        if track:
            unit = unit - best.unit.mul_term(m, coeff)
            quot = [q - qt.mul_term(m, coeff) for q, qt in zip(quot, best.quot)]
    return WeakNormalForm(h, unit, quot)


class HomogenizedOrder(object):
    """
    Global order on vectors over ``K[x, t]`` lifting a local degree order.

    The block decides first, then the total degree in ``x`` and ``t``, then
    the local order on the ``x`` part. On vectors homogeneous in ``x, t``
    the leading term is the one the local order picks after ``t = 1``.
    """

    def __init__(self, morder):
        self.morder = morder

    @property
    def is_local(self):
        return False

    def key(self, term):
        c, exp = term
        block, inner, comp = self.morder.key((c, exp[:-1]))
        return block, sum(exp), inner, comp

    def __repr__(self):
        return "HomogenizedOrder(%r)" % (self.morder,)


def homogenize(vec):
    """Pads every term with a power of ``t`` up to the degree of ``vec``."""
    d = V.degree(vec)
    return dict(((c, exp + (d - sum(exp),)), coeff) for (c, exp), coeff in six.iteritems(vec))


def dehomogenize(vec):
    """Sets ``t = 1``."""
    out = {}
    for (c, exp), coeff in six.iteritems(vec):
        term = (c, exp[:-1])
        s = out.get(term, 0) + coeff
        if s:
            out[term] = s
        else:
            out.pop(term, None)
    return out


def local_standard_basis(vecs, morder, n):
    """
    Standard basis for a local degree order, minimalized and with monic
    leading terms.

    The generators are homogenized with an extra variable ``t``, a
    Groebner basis of their span is computed for :class:`HomogenizedOrder`
    and ``t = 1`` is substituted back.

    Returns:
        list of term dicts sorted by descending leading term.
    """
    hvecs = [homogenize(v) for v in vecs if v]
    if not hvecs:
        return []
    rank_one = len(set(c for v in hvecs for c, _ in v)) == 1 and morder.split is None
    hbasis = groebner_basis(hvecs, HomogenizedOrder(morder), rank_one=rank_one)
    basis = [v for v in (dehomogenize(h) for h in hbasis) if v]
    log.debug("local basis: %d homogeneous elements", len(hbasis))
    return minimalize(basis, morder)


def spoly(a, b, morder):
    (ca, ea), lca = V.lead(a, morder)
    (_, eb), lcb = V.lead(b, morder)
    lcm = monomial_lcm(ea, eb)
    left = V.sub_multiple({}, a, -1 / lca, monomial_div(lcm, ea))
    return V.sub_multiple(left, b, 1 / lcb, monomial_div(lcm, eb))


def minimalize(basis, morder):
    keep = []
    for k, vec in enumerate(basis):
        lt, lc = V.lead(vec, morder)
        redundant = False
        for l, other in enumerate(basis):
            if l == k:
                continue
            olt = V.lead(other, morder)[0]
            if V.term_div(lt, olt) is not None and (olt != lt or l < k):
                redundant = True
                break
        if not redundant:
            keep.append(V.scale(vec, 1 / lc))
    keep.sort(key=lambda v: morder.key(V.lead(v, morder)[0]), reverse=True)
    return keep


def spolys_reduce_to_zero(basis, morder, n):
    """Standard basis criterion: every s-vector has weak normal form zero."""
    for j in range(len(basis)):
        for i in range(j):
            a, b = basis[i], basis[j]
            if V.lead(a, morder)[0][0] != V.lead(b, morder)[0][0]:
                continue
            if mora_normal_form(spoly(a, b, morder), basis, morder, n).remainder:
                return False
    return True

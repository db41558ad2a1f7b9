# -*-  coding: utf-8 -*-
"""
Buchberger's algorithm for submodules of free modules under global orders.

Pairs are selected by the normal strategy (smallest lcm degree) with the
sugar degree as tie-break, then by their indices, so the reduced basis is
a deterministic function of the input and the order.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import heapq

from sympy.polys.monomials import monomial_div, monomial_gcd, monomial_lcm

from logres.groebner import vectors as V
from logres.log import log


class Element(object):
    """Basis vector with its cached leading data."""
    __slots__ = ('vec', 'lt', 'lc', 'sugar')

    def __init__(self, vec, morder, sugar=None):
        self.vec = vec
        self.lt, self.lc = V.lead(vec, morder)
        self.sugar = V.degree(vec) if sugar is None else sugar


def reduce_vector(vec, basis, morder, quotients=None, sugar=0):
    """
    Full reduction of ``vec`` by the elements of ``basis``.

    When ``quotients`` is a list (one dict per basis element) the
    multipliers are accumulated into it as ``{exp: coeff}`` maps so that
    ``vec == sum(q_i * basis_i) + remainder``.

    Returns:
        (remainder, sugar)
    """
    vec = dict(vec)
    remainder = {}
    while vec:
        lt, lc = V.lead(vec, morder)
        for k, b in enumerate(basis):
            m = V.term_div(lt, b.lt)
            if m is None:
                continue
            coeff = lc / b.lc
            vec = V.sub_multiple(vec, b.vec, coeff, m)
            sugar = max(sugar, b.sugar + sum(m))
            if quotients is not None:
                q = quotients[k]
                s = q.get(m, 0) + coeff
                if s:
                    q[m] = s
                else:
                    q.pop(m, None)
            break
        else:
            remainder[lt] = lc
            del vec[lt]
    return remainder, sugar


def _spair(a, b):
    if a.lt[0] != b.lt[0]:
        return None
    lcm = monomial_lcm(a.lt[1], b.lt[1])
    ma = monomial_div(lcm, a.lt[1])
    mb = monomial_div(lcm, b.lt[1])
    sugar = max(a.sugar + sum(ma), b.sugar + sum(mb))
    return lcm, ma, mb, sugar


def groebner_basis(vecs, morder, rank_one=False):
    """
    Reduced Groebner basis of the module generated by ``vecs``.

    Args:
        vecs (list): term dicts, zero vectors are ignored.
        morder (ModuleOrder): a global order.
        rank_one (bool): enables the product criterion, valid for ideals.

    Returns:
        list of monic term dicts, sorted by descending leading term.
    """
    basis = []
    pairs = []

    def add(vec, sugar):
        elem = Element(vec, morder, sugar)
        idx = len(basis)
        basis.append(elem)
        for i in range(idx):
            other = basis[i]
            sp = _spair(other, elem)
            if sp is None:
                continue
            lcm, _, _, pair_sugar = sp
            if rank_one and monomial_gcd(other.lt[1], elem.lt[1]) == (0,) * len(lcm):
                continue
            heapq.heappush(pairs, (sum(lcm), pair_sugar, i, idx))

    for vec in sorted((v for v in vecs if v), key=lambda v: morder.key(V.lead(v, morder)[0])):
        rem, sugar = reduce_vector(dict(vec), basis, morder, sugar=V.degree(vec))
        if rem:
            add(rem, sugar)

    reductions = 0
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        a, b = basis[i], basis[j]
        _, ma, mb, sugar = _spair(a, b)
        svec = V.sub_multiple(V.scale(V.sub_multiple({}, a.vec, -1, ma), 1 / a.lc),
                              b.vec, 1 / b.lc, mb)
        rem, sugar = reduce_vector(svec, basis, morder, sugar=sugar)
        reductions += 1
        if rem:
            add(rem, sugar)
    log.debug("buchberger: %d reductions, %d elements before reduction", reductions, len(basis))
    return reduce_basis(basis, morder)


def reduce_basis(basis, morder):
    """Minimal, monic, tail reduced basis from a Groebner basis."""
    minimal = []
    for k, elem in enumerate(basis):
        redundant = False
        for l, other in enumerate(basis):
            if l == k or V.term_div(elem.lt, other.lt) is None:
                continue
            # equal leading terms: the earlier element stays
            if other.lt != elem.lt or l < k:
                redundant = True
                break
        if not redundant:
            minimal.append(elem)
    reduced = []
    for k, elem in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = dict(elem.vec)
        del tail[elem.lt]
        rem, _ = reduce_vector(tail, others, morder)
        rem[elem.lt] = elem.lc
        reduced.append(V.scale(rem, 1 / elem.lc))
    reduced.sort(key=lambda v: morder.key(V.lead(v, morder)[0]), reverse=True)
    return reduced


def spolys_reduce_to_zero(basis, morder):
    """Checks the Buchberger criterion on ``basis`` (list of term dicts)."""
    elems = [Element(v, morder) for v in basis]
    for j in range(len(elems)):
        for i in range(j):
            sp = _spair(elems[i], elems[j])
            if sp is None:
                continue
            _, ma, mb, _ = sp
            svec = V.sub_multiple(V.scale(V.sub_multiple({}, elems[i].vec, -1, ma),
                                          1 / elems[i].lc),
                                  elems[j].vec, 1 / elems[j].lc, mb)
            if reduce_vector(svec, elems, morder)[0]:
                return False
    return True

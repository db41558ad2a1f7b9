# -*-  coding: utf-8 -*-
"""
Sparse vectors of polynomials.

A vector of the free module ``R^r`` is stored as a dict mapping module
terms ``(component, exponent)`` to nonzero rationals. Ideals are the rank
one case.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import six
from sympy.polys.monomials import monomial_div, monomial_mul

from logres.poly.poly import Poly


class ModuleOrder(object):
    """
    Term order on ``R^r`` built from a monomial order.

    Terms are compared position over term inside two blocks: components
    below ``split`` dominate every component from ``split`` on. Inside a
    block the monomial decides first and the lower component index wins
    ties. Without ``split`` the order is plain term over position.
    """

    def __init__(self, order, split=None):
        self.order = order
        self.split = split

    @property
    def is_local(self):
        return self.order.is_local

    def key(self, term):
        c, exp = term
        block = 1 if self.split is not None and c < self.split else 0
        return block, self.order.key(exp), -c

    def __repr__(self):
        return "ModuleOrder(%r, split=%s)" % (self.order, self.split)


def from_polys(polys):
    """Vector with ``polys[i]`` in component ``i``."""
    vec = {}
    for c, p in enumerate(polys):
        for exp, coeff in six.iteritems(p.terms):
            vec[(c, exp)] = coeff
    return vec


def to_polys(vec, rank, n):
    comps = [dict() for _ in range(rank)]
    for (c, exp), coeff in six.iteritems(vec):
        comps[c][exp] = coeff
    return [Poly(n, terms) for terms in comps]


def shift(vec, offset):
    """Moves every component by ``offset``."""
    return dict(((c + offset, exp), coeff) for (c, exp), coeff in six.iteritems(vec))


def lead(vec, morder):
    term = max(vec, key=morder.key)
    return term, vec[term]


def ecart(vec, lead_term):
    return max(sum(exp) for _, exp in vec) - sum(lead_term[1])


def sub_multiple(vec, other, coeff, mono):
    """``vec - coeff * x^mono * other`` as a new vector."""
    out = dict(vec)
    for (c, exp), a in six.iteritems(other):
        term = (c, monomial_mul(exp, mono))
        s = out.get(term, 0) - coeff * a
        if s:
            out[term] = s
        else:
            out.pop(term, None)
    return out


def scale(vec, coeff):
    return dict((t, a * coeff) for t, a in six.iteritems(vec))


def term_div(t, s):
    """Monomial ``m`` with ``m * s == t`` when the components agree, else None."""
    if t[0] != s[0]:
        return None
    return monomial_div(t[1], s[1])


def degree(vec):
    return max(sum(exp) for _, exp in vec) if vec else -1

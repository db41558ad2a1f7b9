# -*-  coding: utf-8 -*-
"""
Rational Newton-Puiseux expansions of plane curve germs.

Every branch is returned as a parametrization ``x = A(t), y = B(t)`` with
rational coefficients. An edge of a Newton polygon whose characteristic
polynomial has an irreducible factor of degree above one needs an
algebraic extension of the rationals; the whole germ is then reported as
unsupported and branches must be supplied by the caller.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from fractions import Fraction

import six
import sympy
from sympy.core.intfunc import igcdex

from logres.config import settings
from logres.lib.exceptions import EngineError
from logres.log import log
from logres.normalization.branches import BranchParam, curve_variables, plane_equation
from logres.poly.poly import Poly

UNSUPPORTED = 'unsupported'

_R = sympy.Symbol('r')


class _State(object):
    """
    ``x = A(s)``, ``y = B0(s) + coeff * s^E * w`` and ``G(s, w)`` whose
    roots ``w`` belong to the branches still to be separated.
    """

    def __init__(self, G, A, B0, coeff, E, steps=0):
        self.G = G
        self.A = A
        self.B0 = B0
        self.coeff = coeff
        self.E = E
        self.steps = steps


def _w_order_at_zero(G):
    return min(j for (i, j) in G.terms if i == 0)


def _divisible_by_w(G):
    return all(j >= 1 for (_, j) in G.terms)


def _divide_by_w(G):
    return Poly(2, dict(((i, j - 1), c) for (i, j), c in six.iteritems(G.terms)))


def newton_edges(G):
    """
    Edges of the lower Newton polygon between the ``w`` axis and the
    ``s`` axis, each as ``((i1, j1), (i2, j2))`` with ``j1 > j2``.
    """
    m = _w_order_at_zero(G)
    i0 = min(i for (i, j) in G.terms if j == 0)
    points = [p for p in G.terms if p[0] <= i0 and p[1] <= m]
    edges = []
    current = (0, m)
    while current[1] > 0:
        ic, jc = current
        best, best_ratio = None, None
        for (i, j) in points:
            if j >= jc:
                continue
            ratio = Fraction(i - ic, jc - j)
            if best is None or ratio < best_ratio or (ratio == best_ratio and j < best[1]):
                best, best_ratio = (i, j), ratio
        edges.append((current, best))
        current = best
    return edges


def _edge_roots(G, edge):
    """
    Rational roots of the edge polynomial with their multiplicities, or
    None when a factor has no rational root.
    """
    (i1, j1), (i2, j2) = edge
    g = sympy.igcd(j1 - j2, i2 - i1)
    alpha, beta = (j1 - j2) // g, (i2 - i1) // g
    expr = 0
    for k in range(g + 1):
        c = G.terms.get((i2 - k * beta, j2 + k * alpha), 0)
        if c:
            expr += sympy.Rational(c.numerator, c.denominator) * _R ** k
    _, factors = sympy.factor_list(expr, _R)
    roots = []
    for factor, mult in factors:
        poly = sympy.Poly(factor, _R)
        if poly.degree() == 0:
            continue
        if poly.degree() > 1:
            return None, alpha, beta
        a, b = poly.all_coeffs()
        root = -sympy.Rational(b) / sympy.Rational(a)
        if root != 0:
            roots.append((Fraction(int(root.p), int(root.q)), mult))
    return roots, alpha, beta


def _step(state, alpha, beta, r, edge):
    """Substitutes ``s = lam * t^alpha``, ``w = t^beta * (mu + w')`` and divides by ``t^L``."""
    v, u_neg, _ = igcdex(alpha, beta)
    u = -u_neg
    lam = r ** int(u)
    mu = r ** int(v)
    (i1, j1), (i2, j2) = edge
    L = alpha * i2 + beta * j2
    s_val = Poly(2, {(alpha, 0): lam})
    w_val = Poly(2, {(beta, 0): mu, (beta, 1): 1})
    substituted = state.G.substitute([s_val, w_val])
    terms = {}
    for (i, j), c in six.iteritems(substituted.terms):
        if i < L:
            raise EngineError("Newton polygon step left a term below the edge")
        terms[(i - L, j)] = c
    G_new = Poly(2, terms)
    t_val = [Poly(1, {(alpha,): lam})]
    A = state.A.substitute(t_val)
    B0 = state.B0.substitute(t_val)
    coeff = state.coeff * lam ** state.E
    E = alpha * state.E + beta
    B0 = B0 + Poly(1, {(E,): coeff * mu})
    return _State(G_new, A, B0, coeff, E, state.steps + 1)


def puiseux_rational(germ, accuracy=None):
    """
    Branch parametrizations of a plane curve germ (or of the curve factor
    of a suspension), or :data:`UNSUPPORTED`.

    Args:
        germ (DivisorGerm): the germ.
        accuracy (int): order in ``t`` up to which truncated branches are
            expanded.
    """
    from logres.log_derivations import milnor_number

    cx, cy, _ = curve_variables(germ)
    if accuracy is None:
        mu = milnor_number(germ) or 0
        accuracy = 2 * mu + settings.TRUNCATION_MARGIN
    F = plane_equation(germ.h, cx, cy)
    t = Poly.variable(1, 0)
    zero = Poly.zero(1)
    branches = []
    if all(i >= 1 for (i, _) in F.terms):
        branches.append(BranchParam({cx: zero, cy: t}, None))
        F = Poly(2, dict(((i - 1, j), c) for (i, j), c in six.iteritems(F.terms)))
    if _divisible_by_w(F):
        branches.append(BranchParam({cx: t, cy: zero}, None))
        F = _divide_by_w(F)
    if F.constant_term != 0:
        return branches

    stack = [_State(F, t, zero, Fraction(1), 0)]
    while stack:
        state = stack.pop(0)
        if state.steps > settings.PUISEUX_MAX_STEPS:
            log.warning("puiseux: step limit %d reached", settings.PUISEUX_MAX_STEPS)
            return UNSUPPORTED
        for edge in newton_edges(state.G):
            roots, alpha, beta = _edge_roots(state.G, edge)
            if roots is None:
                log.debug("puiseux: edge %s needs an algebraic extension", edge)
                return UNSUPPORTED
            for r, _ in roots:
                nxt = _step(state, alpha, beta, r, edge)
                if _divisible_by_w(nxt.G):
                    branches.append(BranchParam({cx: nxt.A, cy: nxt.B0}, None))
                    rest = _divide_by_w(nxt.G)
                    if rest.constant_term == 0:
                        stack.append(_State(rest, nxt.A, nxt.B0, nxt.coeff, nxt.E, nxt.steps))
                elif _w_order_at_zero(nxt.G) == 1 and nxt.E + 1 >= accuracy:
                    branches.append(BranchParam({cx: nxt.A, cy: nxt.B0}, nxt.E + 1))
                else:
                    stack.append(nxt)
    log.debug("puiseux: %d branches of %s", len(branches), germ)
    return branches

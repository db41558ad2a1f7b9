# -*-  coding: utf-8 -*-
"""
Branches of plane curve germs and the normalization they determine.

A branch is a parametrization ``t -> (x(t), y(t))`` of one irreducible
component of the curve, known either exactly or modulo ``t^N``. Weakly
holomorphic functions are the fractions whose pull back to every branch
has no pole; the ring ``O~_D`` of them is built as ``N_K / l^K`` where
``l`` is a linear form of minimal order on every branch and ``N_K`` are
the functions vanishing to order ``K * ord(l)`` on every branch.

Suspensions (a curve times a smooth factor) are handled through their
curve factor: the passive variables are carried along untouched.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import json
from fractions import Fraction
from functools import reduce

import six
import sympy

from logres.config import settings
from logres.fractional_ideals import FractionalIdeal, dual
from logres.groebner.ideal import Ideal, PolyContext
from logres.lib.exceptions import (EngineError, InvalidBranchError, PrecisionError,
                                   UnsupportedGermError)
from logres.log import log
from logres.poly.orders import LOCAL
from logres.poly.poly import Poly

#: Linear forms ``a*x + b*y`` tried, in order, as the denominator of O~_D.
LINEAR_SCHEDULE = ((0, 1), (1, 0), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1),
                   (1, 3), (3, 1))


def curve_variables(germ):
    """
    ``(x, y, passive)``: the two curve variable indices of the germ and the
    indices of the variables ``h`` does not depend on.

    Raises:
        UnsupportedGermError: ``h`` depends on more than two variables or
            the ambient space is a line.
    """
    if germ.n < 2:
        raise UnsupportedGermError("curve normalization needs at least two variables")
    active = sorted(germ.h.variables())
    if len(active) > 2:
        raise UnsupportedGermError("%s depends on %d variables, not a curve or a suspension"
                                   % (germ.to_str(), len(active)))
    for i in range(germ.n):
        if len(active) == 2:
            break
        if i not in active:
            active.append(i)
    active.sort()
    passive = [i for i in range(germ.n) if i not in active]
    return active[0], active[1], passive


def plane_equation(h, cx, cy):
    """``h`` as a polynomial in the two curve variables."""
    return Poly(2, dict(((e[cx], e[cy]), c) for e, c in six.iteritems(h.terms)))


def plane_milnor(germ):
    cx, cy, _ = curve_variables(germ)
    F = plane_equation(germ.h, cx, cy)
    context = PolyContext(('x', 'y'), LOCAL)
    return Ideal([F.differentiate(0), F.differentiate(1)], context).colength() or 0


class BranchParam(object):
    """
    Parametrization of one branch.

    Args:
        series (dict): curve variable index to a one variable :class:`Poly`
            in ``t``; missing curve variables are zero.
        truncation (int): the series are known modulo ``t^truncation``;
            None for an exact parametrization.
    """

    def __init__(self, series, truncation=None):
        self.truncation = truncation
        self.series = dict((i, p.truncate(0, truncation) if truncation is not None else p)
                           for i, p in six.iteritems(series))

    @property
    def exact(self):
        return self.truncation is None

    def coordinate(self, i):
        return self.series.get(i, Poly.zero(1))

    def order_of(self, p):
        """
        ``ord_t`` of a one variable series, None when it vanishes
        identically on an exact branch.

        Raises:
            PrecisionError: the jet is zero up to the truncation.
        """
        if p:
            return p.order
        if self.exact:
            return None
        raise PrecisionError('> %d' % self.truncation, self.truncation)

    def linear(self, cx, cy, a, b):
        return self.coordinate(cx) * a + self.coordinate(cy) * b

    def multiplicity(self, cx, cy):
        orders = [p.order for p in (self.coordinate(cx), self.coordinate(cy)) if p]
        if not orders:
            raise InvalidBranchError("constant parametrization")
        return min(orders)

    def reparametrized(self):
        """The same branch traced with ``t -> -t``."""
        flip = [Poly(1, {(1,): -1})]
        return BranchParam(dict((i, p.substitute(flip)) for i, p in six.iteritems(self.series)),
                           self.truncation)

    def agrees_with(self, other):
        bound = min(b for b in (self.truncation, other.truncation, float('inf'))
                    if b is not None)
        keys = set(self.series) | set(other.series)
        for i in keys:
            diff = self.coordinate(i) - other.coordinate(i)
            if bound != float('inf'):
                diff = diff.truncate(0, int(bound))
            if diff:
                return False
        return True

    def to_dict(self, names):
        param = {}
        for i, p in sorted(six.iteritems(self.series)):
            param[names[i]] = [[e[0], str(c)] for e, c in sorted(six.iteritems(p.terms))]
        return {'param': param, 'truncation': self.truncation}

    def __repr__(self):
        body = ', '.join('%s' % self.coordinate(i).to_str(['t']) for i in sorted(self.series))
        return "BranchParam(%s%s)" % (body, '' if self.exact else ' + O(t^%d)' % self.truncation)


def branch_from_dict(data, germ):
    """
    Reads ``{"param": {"x": [[3, "1"]], ...}, "truncation": 16}``.

    Raises:
        InvalidBranchError: unknown variable or malformed entry.
    """
    cx, cy, _ = curve_variables(germ)
    names = germ.variables
    series = {}
    try:
        for name, terms in six.iteritems(data['param']):
            if name not in names:
                raise InvalidBranchError("unknown variable %r" % name)
            i = names.index(name)
            if i not in (cx, cy):
                raise InvalidBranchError("%s is not a curve variable of %s" % (
                    name, germ.to_str()))
            poly = {}
            for exponent, coefficient in terms:
                poly[(int(exponent),)] = poly.get((int(exponent),), 0) + Fraction(coefficient)
            series[i] = Poly(1, poly)
        truncation = data.get('truncation')
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidBranchError("malformed branch entry: %s" % exc)
    return BranchParam(series, int(truncation) if truncation is not None else None)


def load_branches(source, germ):
    """Branches from a JSON file path, JSON text or an already parsed list."""
    if isinstance(source, six.string_types):
        text = source
        if not source.lstrip().startswith('['):
            try:
                with open(source) as f:
                    text = f.read()
            except IOError as exc:
                raise InvalidBranchError("cannot read %s: %s" % (source, exc))
        try:
            source = json.loads(text)
        except ValueError as exc:
            raise InvalidBranchError("branch file is not JSON: %s" % exc)
    if not isinstance(source, list) or not source:
        raise InvalidBranchError("branch data must be a non empty list")
    return [branch_from_dict(entry, germ) for entry in source]


def _intersection_numbers(F):
    """``i(F, l)`` for ``l = x, y, x + y``; None where ``l`` divides ``F``."""
    t = Poly.variable(1, 0)
    zero = Poly.zero(1)
    out = {}
    for (a, b), values in (((1, 0), [zero, t]), ((0, 1), [t, zero]), ((1, 1), [t, -t])):
        restricted = F.substitute(values)
        out[(a, b)] = restricted.order if restricted else None
    return out


def certify_branch(F, branch, cx, cy, index, required=None):
    """
    Checks one branch against the plane equation ``F``.

    Raises:
        InvalidBranchError: the branch does not start at the origin, does not
            lie on the curve, is not primitive or is too short.
    """
    x, y = branch.coordinate(cx), branch.coordinate(cy)
    if x.constant_term or y.constant_term:
        raise InvalidBranchError("branch does not pass through the origin", index)
    if not x and not y:
        raise InvalidBranchError("constant parametrization", index)
    if not branch.exact and required is not None and branch.truncation < required:
        raise InvalidBranchError("truncation %d below the certification bound %d" % (
            branch.truncation, required), index)
    image = F.substitute([x, y])
    if not branch.exact:
        image = image.truncate(0, branch.truncation)
    if image:
        raise InvalidBranchError("h does not vanish on the branch (t^%d term %s)" % (
            image.order, image.terms[(image.order,)]), index)
    exponents = [e[0] for p in (x, y) for e in p.terms]
    if reduce(sympy.igcd, exponents, 0) != 1:
        raise InvalidBranchError("parametrization is not primitive", index)


def validate_branches(germ, branches, source='user'):
    """
    Certifies ``branches`` and assembles the normalization data.

    Raises:
        InvalidBranchError: a branch fails certification, two branches
            coincide or some branch of the curve is missing.
        PrecisionError: truncated jets are too short for O~_D, or a
            computed branch is truncated below ``2 * mu + 1``.
        UnsupportedGermError: not a plane curve or a suspension of one.
    """
    cx, cy, passive = curve_variables(germ)
    F = plane_equation(germ.h, cx, cy)
    mu = plane_milnor(germ)
    required = 2 * mu + 1
    for index, branch in enumerate(branches):
        # short computed jets are retried at higher accuracy
        if source != 'user' and not branch.exact and branch.truncation < required:
            raise PrecisionError(required, branch.truncation)
        certify_branch(F, branch, cx, cy, index, required)
    for i in range(len(branches)):
        for j in range(i + 1, len(branches)):
            if branches[i].agrees_with(branches[j]) or \
                    branches[i].reparametrized().agrees_with(branches[j]):
                raise InvalidBranchError("branches %d and %d coincide" % (i, j))
    for (a, b), expected in six.iteritems(_intersection_numbers(F)):
        if expected is None:
            continue
        found = sum(branch.order_of(branch.linear(cx, cy, a, b)) or 0 for branch in branches)
        if found != expected:
            raise InvalidBranchError("branches meet %s*x + %s*y with multiplicity %d, "
                                     "the curve with %d" % (a, b, found, expected))
    tilde, ell, exponent = _weakly_holomorphic_ring(germ, branches, cx, cy, mu)
    conductor_frac = dual(tilde)
    if conductor_frac.den != 1:
        raise EngineError("conductor is not an ideal of O_D")
    conductor_ideal = Ideal(list(conductor_frac.num.gens), germ.context, [germ.h])
    log.debug("normalization of %s: %d branches, l = %s, K = %d", germ, len(branches),
              germ.to_str(ell), exponent)
    return NormalizationData(germ, branches, tilde, conductor_ideal, ell, exponent, mu, source)


def _choose_linear_form(branches, cx, cy):
    for a, b in LINEAR_SCHEDULE:
        if all(branch.order_of(branch.linear(cx, cy, a, b)) == branch.multiplicity(cx, cy)
               for branch in branches):
            return a, b
    raise UnsupportedGermError("no linear form of minimal order on every branch")


def _monomials_below(K):
    return [(i, d - i) for d in range(K) for i in range(d + 1)]


def _vanishing_part(branches, cx, cy, K, mults):
    """
    Polynomials of degree below ``K`` whose pull back to branch ``i`` has
    order at least ``K * mults[i]``.
    """
    monomials = _monomials_below(K)
    rows = []
    for branch, mult in zip(branches, mults):
        bound = K * mult
        if not branch.exact and branch.truncation < bound:
            raise PrecisionError(bound, branch.truncation)
        x, y = branch.coordinate(cx), branch.coordinate(cy)
        images = [((x ** i) * (y ** j)).truncate(0, bound) for i, j in monomials]
        for e in range(bound):
            rows.append([sympy.Rational(str(img.terms.get((e,), 0))) for img in images])
    if not rows:
        return [Poly.monomial(2, m) for m in monomials]
    kernel = sympy.Matrix(rows).nullspace()
    out = []
    for vector in kernel:
        out.append(Poly(2, dict((m, c) for m, c in zip(monomials, vector) if c != 0)))
    return out


def _weakly_holomorphic_ring(germ, branches, cx, cy, mu):
    n = germ.n
    index_map = {0: cx, 1: cy}
    a, b = _choose_linear_form(branches, cx, cy)
    ell = Poly.variable(n, cx) * a + Poly.variable(n, cy) * b
    mults = [branch.multiplicity(cx, cy) for branch in branches]

    def level(K):
        gens = [Poly.monomial(2, (i, K - i)) for i in range(K + 1)]
        gens += _vanishing_part(branches, cx, cy, K, mults)
        return [g.embed(n, index_map) for g in gens]

    bound = mu + len(branches)
    current = level(0)
    for K in range(bound + 1):
        following = level(K + 1)
        shifted = Ideal([g * ell for g in current], germ.context, [germ.h])
        if all(shifted.contains(g, local=True) for g in following):
            den = ell ** K
            tilde = FractionalIdeal(current, den, germ, nzd=den)
            _check_ring(tilde)
            return tilde, ell, K
        current = following
    raise EngineError("O~_D did not stabilize below l^%d" % (bound + 1))


def _check_ring(tilde):
    gens = tilde.num.gens
    for i, p in enumerate(gens):
        for q in gens[i:]:
            if not tilde.contains(p * q, tilde.den * tilde.den):
                raise EngineError("O~_D is not closed under products")


class NormalizationData(object):
    """
    Certified branches, ``O~_D`` as a fractional ideal and the conductor
    ``C_D = dual(O~_D)`` as an ideal of ``O_D``.
    """

    def __init__(self, germ, branches, tilde, conductor, ell, exponent, mu, source):
        self.germ = germ
        self.branches = list(branches)
        self.tilde = tilde
        self.conductor = conductor
        self.ell = ell
        self.exponent = exponent
        self.mu = mu
        self.source = source

    @property
    def truncation(self):
        bounds = [b.truncation for b in self.branches if not b.exact]
        return min(bounds) if bounds else None

    def pullback(self, p, branch):
        """
        ``p`` along ``branch`` as a polynomial in ``t`` and the passive
        variables (``t`` first), truncated where the jet is.
        """
        cx, cy, passive = curve_variables(self.germ)
        m = 1 + len(passive)
        values = []
        for i in range(self.germ.n):
            if i in (cx, cy):
                values.append(branch.coordinate(i).embed(m, {0: 0}))
            else:
                values.append(Poly.variable(m, 1 + passive.index(i)))
        image = p.substitute(values)
        if not branch.exact:
            image = image.truncate(0, branch.truncation)
        return image

    def valuation(self, p, branch):
        """
        ``ord_t`` of ``p`` along ``branch``; None when the pull back is
        known to vanish.
        """
        image = self.pullback(p, branch)
        if not image:
            if branch.exact:
                return None
            raise PrecisionError('> %d' % branch.truncation, branch.truncation)
        return min(e[0] for e in image.terms)

    def is_weakly_holomorphic(self, fraction):
        return is_weakly_holomorphic(fraction, self)

    def to_dict(self):
        names = self.germ.variables
        return {
            'branches': [b.to_dict(names) for b in self.branches],
            'source': self.source,
            'weakly_holomorphic': self.tilde.to_strings(),
            'conductor': self.conductor.to_strings(),
            'denominator': self.germ.to_str(self.ell),
            'exponent': self.exponent,
            'truncation': self.truncation,
        }

    def __repr__(self):
        return "NormalizationData(%s, %d branches)" % (self.germ.to_str(), len(self.branches))


def _lowest_t_coefficient(image):
    low = min(e[0] for e in image.terms)
    m = image.n
    return low, Poly(m, dict(((0,) + e[1:], c) for e, c in six.iteritems(image.terms)
                             if e[0] == low))


def is_weakly_holomorphic(fraction, data):
    """
    ``xi / g`` has no pole on any branch.

    Raises:
        PrecisionError: the denominator is not visible within the jets.
        UnsupportedGermError: on a suspension the leading coefficient of the
            denominator vanishes at the origin.
    """
    for index, branch in enumerate(data.branches):
        den = data.pullback(fraction.g, branch)
        if not den:
            if branch.exact:
                raise EngineError("denominator vanishes on branch %d" % index)
            raise PrecisionError('> %d' % branch.truncation, branch.truncation)
        d, lead = _lowest_t_coefficient(den)
        if not lead.is_unit_local():
            raise UnsupportedGermError("leading coefficient of the denominator vanishes "
                                       "along the passive variables")
        num = data.pullback(fraction.xi, branch)
        if not num:
            continue
        if min(e[0] for e in num.terms) < d:
            return False
    return True


def valuation(p, data, branch):
    return data.valuation(p, branch)


def conductor(data):
    """``C_D`` as an ideal of ``O_D``."""
    return data.conductor


def normalization(germ, branches=None, precision=None):
    """
    Normalization data from user branches, or from rational Puiseux
    expansions redone with doubled precision while the jets are too short.

    Raises:
        UnsupportedGermError: no user branches and the expansion needs
            irrational coefficients.
    """
    from logres.normalization.puiseux import UNSUPPORTED, puiseux_rational

    if branches is not None:
        return validate_branches(germ, branches, source='user')
    accuracy = precision
    if accuracy is None:
        accuracy = 2 * plane_milnor(germ) + settings.TRUNCATION_MARGIN
    for attempt in range(settings.MAX_PRECISION_DOUBLINGS + 1):
        found = puiseux_rational(germ, accuracy)
        if found == UNSUPPORTED:
            raise UnsupportedGermError("branches of %s need irrational coefficients"
                                       % germ.to_str())
        try:
            return validate_branches(germ, found, source='puiseux')
        except PrecisionError as exc:
            log.debug("normalization: %s at accuracy %d, retrying", exc, accuracy)
            accuracy *= 2
    raise PrecisionError(accuracy, accuracy // 2)

# -*-  coding: utf-8 -*-
"""
Fractional ideals of ``O_D = O_S/<h>``.

A fractional ideal is stored as ``num / den`` where ``num`` is an ideal of
``O_D`` containing a nonzerodivisor and ``den`` is a nonzerodivisor.
Every comparison is a membership question in the local ring at the origin
after cross multiplying the denominators.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from logres.config import settings
from logres.groebner.ideal import Ideal, ideal_quotient, min_generators_local
from logres.lib.exceptions import (EngineError, GermMismatchError, NoNonzerodivisorError,
                                   ZeroDivisorError)
from logres.lib.utils import make_rng
from logres.log import log
from logres.poly.poly import Poly, poly_gcd


def zero_divisor_witness(q, germ):
    """
    Nonzero ``w`` in ``O_D`` with ``w * q == 0`` in ``O_D``, or None when
    ``q`` is a nonzerodivisor at the origin.
    """
    annihilator = ideal_quotient(germ.principal, Ideal([q], germ.context))
    for g in annihilator.gens:
        if not germ.principal.contains(g, local=True):
            return g
    return None


def is_nonzerodivisor(q, germ):
    return zero_divisor_witness(q, germ) is None


def _small_combinations(gens, rng, budget):
    n = gens[0].n
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            yield gens[i] + gens[j]
    for _ in range(budget):
        combo = Poly.zero(n)
        for g in gens:
            combo = combo + g * rng.randint(-4, 4)
        if combo:
            yield combo


def find_nonzerodivisor(gens, germ, budget=None, seed=None, context=''):
    """
    A nonzerodivisor of ``O_D`` in the ideal generated by ``gens``.

    Generators are tried in order, then pairwise sums, then seeded random
    small integer combinations until ``budget`` candidates were certified.

    Raises:
        NoNonzerodivisorError: budget exhausted.
    """
    budget = settings.NZD_TRIAL_BUDGET if budget is None else budget
    seed = settings.SEED if seed is None else seed
    gens = [g for g in gens if g]
    if not gens:
        raise NoNonzerodivisorError(0, context)
    rng = make_rng(seed)
    tried = 0
    candidates = list(gens)
    for candidate in candidates + list(_small_combinations(gens, rng, budget)):
        if tried >= budget:
            break
        tried += 1
        if germ.principal.contains(candidate, local=True):
            continue
        if is_nonzerodivisor(candidate, germ):
            log.debug("nonzerodivisor %s found after %d trials", germ.to_str(candidate), tried)
            return candidate
    raise NoNonzerodivisorError(budget, context)


class FractionalIdeal(object):
    """
    The ``O_D``-module ``num / den`` inside the total quotient ring.

    Args:
        num_gens (list): numerator generators, taken modulo ``h``.
        den (Poly): denominator.
        germ (DivisorGerm): the germ.
        nzd (Poly): a known nonzerodivisor inside ``num``; found by search
            when omitted.

    Raises:
        ZeroDivisorError: ``den`` is a zero divisor.
        NoNonzerodivisorError: ``num`` contains no nonzerodivisor.
    """

    def __init__(self, num_gens, den, germ, nzd=None, certify=True):
        self.germ = germ
        self.den = den
        self.num = Ideal(num_gens, germ.context, modulus=[germ.h])
        if certify:
            witness = zero_divisor_witness(den, germ)
            if witness is not None:
                raise ZeroDivisorError(germ.to_str(den), germ.to_str(witness))
            if nzd is None:
                nzd = find_nonzerodivisor(self.num.gens, germ, context="in numerator")
        self.nzd = nzd

    @property
    def gens(self):
        return self.num.gens

    def generators(self):
        """Generators as reduced ``(numerator, denominator)`` pairs."""
        pairs = []
        for g in self.num.gens:
            common = poly_gcd(g, self.den)
            p, q = g.exact_div(common), self.den.exact_div(common)
            lead = q.lead()[1]
            pairs.append((p * (1 / lead), q * (1 / lead)))
        return pairs

    def to_strings(self):
        out = []
        for p, q in self.generators():
            if q == 1:
                out.append(self.germ.to_str(p))
            else:
                out.append('(%s)/(%s)' % (self.germ.to_str(p), self.germ.to_str(q)))
        return out

    def _check(self, other):
        if self.germ != other.germ:
            raise GermMismatchError("%s and %s" % (self.germ, other.germ))

    def contains(self, p, q=None):
        """Whether ``p / q`` lies in this fractional ideal (``q`` a nonzerodivisor)."""
        q = q if q is not None else Poly.one(self.germ.n)
        scaled = Ideal([g * q for g in self.num.gens], self.germ.context, [self.germ.h])
        return scaled.contains(p * self.den, local=True)

    def includes(self, other):
        """``other`` is contained in this fractional ideal."""
        self._check(other)
        scaled = Ideal([g * other.den for g in self.num.gens], self.germ.context,
                       [self.germ.h])
        return all(scaled.contains(g * self.den, local=True) for g in other.num.gens)

    def equals(self, other):
        return self.includes(other) and other.includes(self)

    def product(self, other):
        self._check(other)
        gens = [a * b for a in self.num.gens for b in other.num.gens]
        nzd = self.nzd * other.nzd if self.nzd is not None and other.nzd is not None else None
        return FractionalIdeal(gens, self.den * other.den, self.germ, nzd=nzd)

    def scaled(self, p, q=None):
        """``(p / q) * self`` for nonzerodivisors ``p`` and ``q``."""
        q = q if q is not None else Poly.one(self.germ.n)
        return FractionalIdeal([g * p for g in self.num.gens], self.den * q, self.germ,
                               nzd=self.nzd * p if self.nzd is not None else None)

    def dual(self):
        return dual(self)

    def is_reflexive(self):
        return is_reflexive(self)

    def min_generators_local(self):
        return min_generators_local(self.num)

    def __eq__(self, other):
        return isinstance(other, FractionalIdeal) and self.germ == other.germ and \
            self.equals(other)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return "FractionalIdeal<%s>" % ', '.join(self.to_strings())


def make(gens, germ):
    """
    Fractional ideal generated by the fractions ``p/q`` in ``gens``.

    Raises:
        ZeroDivisorError: some ``q`` is a zero divisor modulo ``h``.
    """
    n = germ.n
    pairs = [(p, q if q is not None else Poly.one(n)) for p, q in gens]
    den = Poly.one(n)
    for _, q in pairs:
        witness = zero_divisor_witness(q, germ)
        if witness is not None:
            raise ZeroDivisorError(germ.to_str(q), germ.to_str(witness))
        common = poly_gcd(den, q)
        den = den * q.exact_div(common)
    num = [p * den.exact_div(q) for p, q in pairs]
    return FractionalIdeal(num, den, germ)


def unit_ideal(germ):
    """``O_D`` itself."""
    one = Poly.one(germ.n)
    return FractionalIdeal([one], one, germ, nzd=one, certify=False)


def from_ideal(ideal, germ):
    """An ideal of ``O_D`` viewed as a fractional ideal with denominator 1."""
    return FractionalIdeal(list(ideal.gens), Poly.one(germ.n), germ)


def dual(frac):
    """
    ``I^v = {f | f * I in O_D}``.

    With ``I = N/d`` and a nonzerodivisor ``a`` of ``N`` the dual is
    ``((a) : N) * d / a``; when ``d`` lies in ``N`` it serves as ``a``
    and the denominators cancel.
    """
    germ = frac.germ
    h = germ.h
    one = Poly.one(germ.n)
    if frac.num.contains(frac.den, local=True):
        a, den_cancels = frac.den, True
    else:
        a = frac.nzd if frac.nzd is not None else find_nonzerodivisor(frac.num.gens, germ)
        den_cancels = False
    quotient = ideal_quotient(Ideal([a], germ.context, [h]), frac.num)
    if den_cancels:
        result = FractionalIdeal(list(quotient.gens), one, germ, nzd=a, certify=False)
    else:
        result = FractionalIdeal([g * frac.den for g in quotient.gens], a, germ,
                                 nzd=a * frac.den, certify=False)
    product_ideal = Ideal([frac.den * result.den], germ.context, [h])
    for p in frac.num.gens:
        for q in result.num.gens:
            if not product_ideal.contains(p * q, local=True):
                raise EngineError("dual pairing leaves O_D")
    return result


def is_reflexive(frac):
    return dual(dual(frac)).equals(frac)

# -*-  coding: utf-8 -*-
"""
Helpers for tests of logres based code.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from fractions import Fraction

from logres.groebner.ideal import Ideal, PolyContext
from logres.log_derivations import DivisorGerm
from logres.poly.orders import LOCAL
from logres.poly.poly import Poly


class BaseTestCase:
    """
    Base test case.

    Subclasses set ``variables``; ``germ`` and ``p`` parse texts over them.
    """
    variables = ('x', 'y')

    def setup_method(self, method):
        self.context = PolyContext(self.variables, LOCAL)

    @classmethod
    def germ(cls, text, variables=None):
        return DivisorGerm.from_text(variables or cls.variables, text)

    def p(self, text):
        return self.context.parse(text)

    def ideal(self, *texts, **kwargs):
        modulus = [self.p(m) for m in kwargs.get('modulus', ())]
        return Ideal([self.p(t) for t in texts], self.context, modulus)

    @staticmethod
    def assert_same_ideal(first, second):
        """Equality of ideals at the origin, both inclusions."""
        assert first.includes(second, local=True), "%s does not contain %s" % (first, second)
        assert second.includes(first, local=True), "%s does not contain %s" % (second, first)

    @staticmethod
    def assert_fraction_equal(germ, p, q, r, s):
        """``p/q == r/s`` in the total quotient ring of the germ."""
        assert germ.principal.contains(p * s - q * r, local=True), \
            "%s/%s != %s/%s" % (germ.to_str(p), germ.to_str(q), germ.to_str(r), germ.to_str(s))


def random_poly(rng, n, degree=4, terms=3, fractions=False):
    """
    Polynomial with up to ``terms`` random terms of degree at most
    ``degree`` and small coefficients, drawn from ``rng``.
    """
    out = Poly.zero(n)
    for _ in range(terms):
        exp = [0] * n
        for _ in range(rng.randint(0, degree)):
            exp[rng.randrange(n)] += 1
        coeff = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3) if fractions else 1)
        out = out + Poly.monomial(n, exp, coeff)
    return out

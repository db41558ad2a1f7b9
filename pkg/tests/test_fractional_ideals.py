# -*-  coding: utf-8 -*-
"""Fractional ideals of O_D: arithmetic, duals and conductors."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import pytest

from logres.fractional_ideals import (dual, find_nonzerodivisor, from_ideal, is_nonzerodivisor,
                                      make, unit_ideal, zero_divisor_witness)
from logres.lib.exceptions import GermMismatchError, NoNonzerodivisorError, ZeroDivisorError
from logres.lib.test_utils import BaseTestCase


class TestNode(BaseTestCase):
    def setup_method(self, method):
        super(TestNode, self).setup_method(method)
        self.node = self.germ('x*y')

    def test_zero_divisors(self):
        x, y = self.p('x'), self.p('y')
        witness = zero_divisor_witness(x, self.node)
        assert witness is not None
        assert self.node.principal.contains(witness * x, local=True)
        assert not self.node.principal.contains(witness, local=True)
        assert is_nonzerodivisor(x + y, self.node)
        assert find_nonzerodivisor([x, y], self.node) == x + y
        with pytest.raises(NoNonzerodivisorError):
            find_nonzerodivisor([x], self.node, budget=4)

    def test_zero_divisor_denominator(self):
        with pytest.raises(ZeroDivisorError):
            make([(self.p('1'), self.p('x'))], self.node)

    def test_dual_of_maximal_ideal(self):
        maximal = from_ideal(self.ideal('x', 'y', modulus=['x*y']), self.node)
        conductor_dual = dual(maximal)
        x, y = self.p('x'), self.p('y')
        assert conductor_dual.contains(x, x + y)
        assert conductor_dual.contains(self.p('1'))
        assert not unit_ideal(self.node).contains(x, x + y)
        assert conductor_dual.is_reflexive()
        assert dual(conductor_dual).equals(maximal)

    def test_products(self):
        maximal = from_ideal(self.ideal('x', 'y'), self.node)
        square = from_ideal(self.ideal('x^2', 'y^2'), self.node)
        assert maximal.product(maximal).equals(square)
        shifted = unit_ideal(self.node).scaled(self.p('x + y'))
        assert shifted.equals(from_ideal(self.ideal('x + y'), self.node))
        assert maximal.includes(square)
        assert not square.includes(maximal)

    def test_generators(self):
        frac = make([(self.p('x'), self.p('x + y')), (self.p('1'), None)], self.node)
        assert frac.contains(self.p('x'), self.p('x + y'))
        assert frac.contains(self.p('y'), self.p('x + y'))
        for p, q in frac.generators():
            assert q.lead()[1] == 1
        assert frac.min_generators_local()[0] == 2

    def test_germ_mismatch(self):
        other = self.germ('x^2 - y^3')
        with pytest.raises(GermMismatchError):
            unit_ideal(self.node).includes(unit_ideal(other))


class TestDuality(BaseTestCase):
    def test_unit_ideal_is_self_dual(self):
        germ = self.germ('x^2 - y^3')
        assert dual(unit_ideal(germ)).equals(unit_ideal(germ))
        assert unit_ideal(germ).is_reflexive()

    def test_cusp_jacobian(self):
        germ = self.germ('x^2 - y^3')
        jacobian = from_ideal(germ.jacobian, germ)
        residues = dual(jacobian)
        assert residues.contains(self.p('1'))
        assert not unit_ideal(germ).includes(residues)
        assert jacobian.is_reflexive()
        # pairing lands in the local ring
        for g in residues.gens:
            for j in jacobian.gens:
                assert unit_ideal(germ).contains(g * j, residues.den)

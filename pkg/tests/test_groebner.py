# -*-  coding: utf-8 -*-
"""Standard bases, membership, syzygies and the radical test."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import pytest

from logres.groebner import (NOT_RADICAL, RADICAL, Ideal, PolyContext, eliminate,
                             ideal_quotient, min_generators_local, normal_form, radical_test,
                             saturation, syzygies)
from logres.lib.test_utils import BaseTestCase, random_poly
from logres.lib.utils import make_rng
from logres.poly import DEGREVLEX, LOCAL, Poly


class TestLocalMembership(BaseTestCase):
    def test_unit_multiples(self):
        ideal = self.ideal('x - x^2')
        # x * (1 - x): a unit multiple of x at the origin only
        assert ideal.contains(self.p('x'), local=True)
        assert not ideal.contains(self.p('x'), local=False)
        assert self.ideal('1 + x').is_unit(local=True)
        assert not self.ideal('x*(1 + x)').is_unit(local=True)

    def test_certificate(self):
        ideal = self.ideal('x - x^2', 'y^2')
        rem, cert = ideal.normal_form(self.p('x + y^3'), local=True, certify=True)
        assert rem == 0
        assert cert.unit.is_unit_local()
        assert cert.verify()

    def test_global_normal_form(self):
        ideal = Ideal([self.p('x^2 - y'), self.p('x*y')], PolyContext(('x', 'y'), DEGREVLEX))
        basis = ideal.standard_basis()
        assert not basis.local
        assert basis.is_standard()
        assert normal_form(self.p('y^2'), basis) == 0
        assert normal_form(self.p('x'), basis) == self.p('x')

    def test_dimension_and_colength(self):
        assert self.ideal('x^2', 'y^3').colength() == 6
        assert self.ideal('x', 'y').colength() == 1
        assert self.ideal('x*y').colength() is None
        assert self.ideal('x*y').local_dimension() == 1
        assert self.ideal('x', 'y').local_dimension() == 0
        assert self.ideal('1 + y').local_dimension() == -1
        # Milnor algebra of the cusp
        assert self.ideal('2*x', '3*y^2').colength() == 2

    def test_modulus(self):
        ideal = self.ideal('y', modulus=['x^2 - y^3'])
        assert ideal.contains(self.p('x^2'), local=True)
        assert not ideal.pullback().contains(self.p('x'), local=True)
        assert len(ideal.pullback().all_gens) == 2


class TestConstructions(BaseTestCase):
    def test_syzygies(self):
        rows = [(self.p('x'),), (self.p('y'),)]
        relations = syzygies(rows, self.context)
        assert relations.rank == 2
        assert relations.gens
        for a, b in relations.gens:
            assert a * self.p('x') + b * self.p('y') == 0
        assert relations.contains((self.p('y'), self.p('-x')), local=False)

    def test_quotient_and_saturation(self):
        quotient = ideal_quotient(self.ideal('x*y'), self.ideal('x'))
        self.assert_same_ideal(quotient, self.ideal('y'))
        assert quotient.equals(self.ideal('y'), local=False)
        saturated = saturation(self.ideal('x^2*y', 'x^3'), self.p('x'))
        assert saturated.is_unit(local=False)
        assert saturation(self.ideal('x^2*y'), self.p('x')).equals(self.ideal('y'), local=False)

    def test_eliminate(self):
        context = PolyContext(('t', 'x', 'y'))
        t, x, y = [Poly.variable(3, i) for i in range(3)]
        curve = Ideal([x - t ** 2, y - t ** 3], context)
        image = eliminate(curve, [0])
        assert image.gens
        assert all(0 not in g.variables() for g in image.gens)
        assert image.contains(x ** 3 - y ** 2, local=False)

    def test_minimal_generators(self):
        count, gens = min_generators_local(self.ideal('x', 'y', 'x + y'))
        assert count == 2
        assert len(gens) == 2
        assert self.ideal('x', 'x + x^2').min_generators_local()[0] == 1
        count, _ = self.ideal('x^2', 'y', modulus=['x^2 - y']).min_generators_local()
        assert count == 1


class TestRadical(BaseTestCase):
    def test_maximal_ideal(self):
        result = radical_test(self.ideal('x', 'y'))
        assert result.status == RADICAL

    def test_squarefree_leading_ideal(self):
        assert radical_test(self.ideal('x*y')).status == RADICAL

    def test_nilpotent_witness(self):
        ideal = self.ideal('x^2', 'y')
        result = radical_test(ideal, seed=3)
        assert result.status == NOT_RADICAL
        assert result.seed == 3
        w = result.witness
        assert not ideal.contains(w, local=True)
        assert ideal.contains(w * w, local=True)
        assert result.certificate.verify()

    def test_cusp_jacobian(self):
        germ = self.germ('x^2 - y^3')
        result = radical_test(germ.jacobian.pullback())
        assert result.status == NOT_RADICAL
        assert germ.jacobian.pullback().contains(result.witness ** 2, local=True)

    @pytest.mark.parametrize('order', [LOCAL, DEGREVLEX])
    def test_plane_cusp(self, order):
        context = PolyContext(['x', 'y'], order)
        result = radical_test(Ideal([context.parse('x^2 - y^3')], context), seed=5)
        assert result.status == RADICAL
        assert result.seed == 5
        assert 'seed 5' in result.reason

    @pytest.mark.parametrize('order', [LOCAL, DEGREVLEX])
    def test_cusp_in_a_plane(self, order):
        context = PolyContext(['x', 'y', 'z'], order)
        ideal = Ideal([context.parse('x^2 - y^3'), context.parse('z')], context)
        result = radical_test(ideal, seed=11)
        assert result.status == RADICAL
        assert result.seed == 11

    def test_double_line(self):
        ideal = self.ideal('x^2 - 2*x*y + y^2')
        result = radical_test(ideal)
        assert result.status == NOT_RADICAL
        assert not ideal.contains(result.witness, local=True)
        assert result.certificate.verify()


def _random_ideal(seed):
    rng = make_rng(seed, 3)
    n = rng.randint(2, 4)
    context = PolyContext(['x%d' % i for i in range(n)], LOCAL if seed % 2 else DEGREVLEX)
    gens = [random_poly(rng, n, degree=4, terms=rng.randint(2, 3))
            for _ in range(rng.randint(2, 3))]
    combination = Poly.zero(n)
    for g in gens:
        combination = combination + random_poly(rng, n, degree=1, terms=2) * g
    return context, gens, combination


@pytest.mark.parametrize('seed', range(200))
def test_engine_oracles(seed):
    context, gens, combination = _random_ideal(seed)
    ideal = Ideal(gens, context)
    local = context.is_local
    basis = ideal.standard_basis()
    assert basis.local == local
    assert basis.is_standard()
    rem, cert = ideal.normal_form(combination, local=local, certify=True)
    assert rem == 0
    assert cert.verify()
    for relation in syzygies([(g,) for g in gens], context).gens:
        assert sum((a * g for a, g in zip(relation, gens)), Poly.zero(context.n)) == 0


def test_unit_multiple_among_generators():
    context = PolyContext(['x0', 'x1', 'x2', 'x3'], LOCAL)
    x0, x1, x2, x3 = [Poly.variable(4, i) for i in range(4)]
    gens = [3 * x0 * x1 ** 3 + 2 * x2 ** 2 * x3 + x1 * x3,
            3 * x1 * x2 * x3 ** 2 - 3 * x1 * x3 + 3 * x3,
            x0 * x2 ** 2 * x3 + 2 * x1]
    ideal = Ideal(gens, context)
    basis = ideal.standard_basis()
    assert sorted(exp for _, exp in basis.leading_terms()) == [(0, 0, 0, 1), (0, 1, 0, 0)]
    assert ideal.contains(x1, local=True)
    assert ideal.contains(x3, local=True)
    assert not ideal.contains(x0, local=True)
    assert ideal.local_dimension() == 2

# -*-  coding: utf-8 -*-
"""Freeness, the conditions C, G, D, B, F and their crosschecks."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import json

import pytest

from logres.criteria import (NOT_APPLICABLE, SUSPENSION, analyze, check_condition_B,
                             check_condition_C, check_condition_D, check_condition_G,
                             check_normal_crossing_at_origin, classify_gorenstein_locus,
                             free_equivalence_crosscheck, normal_crossing_verdict)
from logres.lib.exceptions import ConsistencyError, InvalidFactorizationError
from logres.lib.test_utils import BaseTestCase
from logres.log_residues import MeroFraction, residue_module
from logres.normalization import normalization
from logres.poly import Poly
from logres.report import FALSE, TRUE, UNDECIDED, DivisorReport, Verdict


class TestNormalCrossing(BaseTestCase):
    def test_factored(self):
        node = self.germ('x*y')
        assert check_normal_crossing_at_origin(node, [self.p('x'), self.p('y')])
        tangent = self.germ('x*(x + y^2)')
        assert not check_normal_crossing_at_origin(tangent, [self.p('x'), self.p('x + y^2')])
        triple = self.germ('x*y*(x + y)')
        assert not check_normal_crossing_at_origin(
            triple, [self.p('x'), self.p('y'), self.p('x + y')])
        with pytest.raises(InvalidFactorizationError):
            check_normal_crossing_at_origin(node, [self.p('x')])

    def test_unfactored(self):
        assert normal_crossing_verdict(self.germ('x*y')).is_true
        assert normal_crossing_verdict(self.germ('x + y^2')).is_true
        cusp = normal_crossing_verdict(self.germ('x^2 - y^3'))
        assert cusp.is_false
        assert cusp.witness

    def test_verdict_with_factors(self):
        verdict = normal_crossing_verdict(self.germ('x*(x + y^2)'),
                                          [self.p('x'), self.p('x + y^2')])
        assert verdict.is_false
        assert 'rank 1' in verdict.witness


class TestConditions(BaseTestCase):
    def test_radical_jacobian(self):
        assert check_condition_D(self.germ('x*y')).is_true
        cusp = check_condition_D(self.germ('x^2 - y^3'))
        assert cusp.is_false
        assert cusp.witness

    def test_weakly_holomorphic_residues(self):
        node = self.germ('x*y')
        assert check_condition_C(node).is_true
        data = normalization(node)
        assert check_condition_C(node, data).is_true
        cusp = self.germ('x^2 - y^3')
        assert check_condition_C(cusp, normalization(cusp)).is_false

    def test_conductor(self):
        node = self.germ('x*y')
        assert check_condition_G(node, normalization(node)).is_true
        cusp = self.germ('x^2 - y^3')
        verdict = check_condition_G(cusp, normalization(cusp))
        assert verdict.is_false
        assert verdict.witness
        assert check_condition_G(cusp).value == UNDECIDED

    def test_conductor_from_residues(self):
        node = self.germ('x*y')
        verdict = check_condition_G(node, None, None, Verdict(TRUE))
        assert verdict.is_true

    def test_codimension_one(self):
        assert check_condition_B(self.germ('x*y')).is_true
        assert check_condition_B(self.germ('x*y*(x + y)')).is_false
        assert check_condition_B(self.germ('x - y^2')).is_true

    def test_crosscheck(self):
        germ = self.germ('x*y')
        record = free_equivalence_crosscheck(germ, Verdict(TRUE), Verdict.undecided(),
                                             Verdict(TRUE))
        assert record.holds
        with pytest.raises(ConsistencyError):
            free_equivalence_crosscheck(germ, Verdict(TRUE), Verdict(FALSE), Verdict(TRUE))

    def test_crosscheck_on_triple_point(self):
        triple = self.germ('x*y*(x + y)')
        factors = [self.p('x'), self.p('y'), self.p('x + y')]
        b = check_condition_B(triple, factors)
        d = check_condition_D(triple)
        g = check_condition_G(triple, normalization(triple))
        assert (b.value, d.value, g.value) == (FALSE, FALSE, FALSE)
        record = free_equivalence_crosscheck(triple, b, d, g)
        assert record.holds
        assert record.detail == 'B, D, G = false, false, false'


class TestPoles(BaseTestCase):
    def test_three_lines(self):
        germ = self.germ('x*y*(x - y)')
        data = normalization(germ)
        verdict = check_condition_C(germ, data)
        assert verdict.is_false
        poles = [MeroFraction(p, q, germ) for p, q in residue_module(germ).generators()]
        poles = [f for f in poles if not data.is_weakly_holomorphic(f)]
        assert verdict.witness == '(%s)/(%s)' % (germ.to_str(poles[0].xi),
                                                 germ.to_str(poles[0].g))
        on_line = poles[0].restrict(self.p('x'))
        assert any(on_line.equals(self.p(sign), self.p('y')) for sign in ('1', '-1'))

    @pytest.mark.parametrize('m', [1, 2, 3])
    def test_tangent_lines(self, m):
        germ = self.germ('x*(x + y^%d)' % m)
        line = [Poly.zero(1), Poly.variable(1, 0)]
        orders = []
        for p, q in residue_module(germ).generators():
            order = MeroFraction(p, q, germ).restrict(self.p('x')).valuation(line)
            if order is not None:
                orders.append(order)
        assert min(orders) == 1 - m
        assert check_condition_C(germ, normalization(germ)).is_true == (m == 1)


class TestSurfaces(BaseTestCase):
    variables = ('x', 'y', 'z')

    def test_arrangements(self):
        assert check_condition_B(self.germ('x*y*z')).is_true
        assert check_condition_B(self.germ('x*y*(x + y)*(x + y*z)')).is_false
        assert normal_crossing_verdict(self.germ('x^2 - y^2*z')).is_false

    def test_classification(self):
        node = classify_gorenstein_locus(self.germ('x*y'))
        assert node.kind == SUSPENSION
        assert node.passive == [['0', '0', '1']]
        assert classify_gorenstein_locus(self.germ('x*y*z')).kind == NOT_APPLICABLE

    def test_plane_classification(self):
        cusp = classify_gorenstein_locus(self.germ('x^2 - y^3', variables=('x', 'y')))
        assert cusp.kind == SUSPENSION
        assert cusp.passive == []
        assert cusp.to_dict()['curve'] == '-y^3 + x^2'


class TestAnalyze(BaseTestCase):
    def test_node(self):
        germ = self.germ('x*y')
        report = analyze(germ, factors=[self.p('x'), self.p('y')], seed=5)
        for field in ('free', 'euler_homogeneous', 'jacobian_radical', 'jacobian_eq_conductor',
                      'residues_weakly_holomorphic', 'normal_crossing_at_origin',
                      'normal_crossing_codim1'):
            assert report.verdict(field).is_true, field
        assert report.verdict('gorenstein_singular_locus').value == 'gorenstein'
        names = [r.name for r in report.consistency]
        assert 'free-normal-crossing-radical-conductor' in names
        assert 'closed-forms-iff-direct-sum' in names
        assert report.data['direct_sum'] is True
        assert report.provenance['seed'] == 5
        assert report.provenance['branch_source'] == 'puiseux'
        assert 'timings' not in report.provenance

    def test_cusp(self):
        report = analyze(self.germ('x^2 - y^3'))
        assert report.verdict('free').is_true
        assert report.verdict('euler_homogeneous').is_true
        for field in ('jacobian_radical', 'jacobian_eq_conductor', 'residues_weakly_holomorphic',
                      'normal_crossing_at_origin', 'normal_crossing_codim1'):
            assert report.verdict(field).is_false, field
        assert report.data['milnor_number'] == 2
        assert report.data['classification']['kind'] == SUSPENSION

    def test_report_round_trip(self):
        report = analyze(self.germ('x*y'), config={'vars': 'x,y', 'poly': 'x*y'})
        again = DivisorReport.from_dict(json.loads(report.to_json()))
        assert again == report
        assert report.provenance['config']['poly'] == 'x*y'
        assert 'free' in report.to_text()

    def test_invalid_factors(self):
        with pytest.raises(InvalidFactorizationError):
            analyze(self.germ('x*y'), factors=[self.p('x')])

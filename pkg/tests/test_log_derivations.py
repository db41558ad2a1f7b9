# -*-  coding: utf-8 -*-
"""Logarithmic vector fields, Saito matrices and freeness."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import pytest

from logres.lib.exceptions import InvalidGermError, UncertifiedMatrixError
from logres.log_derivations import (DivisorGerm, SaitoMatrix, VectorField, determinant,
                                    log_forms_basis, milnor_number, singular_locus,
                                    tjurina_number)
from logres.lib.test_utils import BaseTestCase
from logres.poly import parse


@pytest.mark.parametrize('text', ['0', 'x^2', '1 + x', 'x*(x - y)^2'])
def test_invalid_germs(text):
    with pytest.raises(InvalidGermError):
        DivisorGerm.from_text(['x', 'y'], text)


def test_variable_count_mismatch():
    with pytest.raises(InvalidGermError):
        DivisorGerm(['x'], parse('x*y', ['x', 'y']))


def test_determinant():
    rows = [[parse(t, ['x', 'y']) for t in row] for row in (('x', 'y'), ('1', 'x'))]
    assert determinant(rows) == parse('x^2 - y', ['x', 'y'])


class TestPlaneCurves(BaseTestCase):
    def test_cusp_is_free(self):
        germ = self.germ('x^2 - y^3')
        assert len(germ.derivations) == 2
        for field in germ.derivations:
            assert VectorField(field).is_logarithmic(germ)
        free, matrix = germ.freeness
        assert free
        assert matrix.is_certified(germ.h)
        forms = log_forms_basis(matrix, germ)
        assert len(forms) == 2
        scale = matrix.unit_num * germ.h
        assert forms[0].pair(matrix.fields[0]) == scale
        assert forms[1].pair(matrix.fields[0]) == 0

    def test_uncertified_matrix(self):
        germ = self.germ('x*y')
        bogus = SaitoMatrix([[self.p('x'), self.p('0')], [self.p('0'), self.p('x')]],
                            self.p('x^2'), self.p('1'))
        with pytest.raises(UncertifiedMatrixError):
            log_forms_basis(bogus, germ)
        with pytest.raises(UncertifiedMatrixError):
            log_forms_basis(None, germ)

    def test_euler_homogeneity(self):
        germ = self.germ('x^2 - y^3')
        euler, chi = germ.euler
        assert euler
        assert chi.apply(germ.h) == chi.denominator * germ.h
        euler, chi = self.germ('x^4 + y^5 + x^2*y^3').euler
        assert not euler
        assert chi is None

    def test_numbers(self):
        cusp = self.germ('x^2 - y^3')
        assert milnor_number(cusp) == 2
        assert tjurina_number(cusp) == 2
        assert milnor_number(self.germ('x*y')) == 1
        assert milnor_number(self.germ('x*y*(x + y)')) == 4
        germ = self.germ('x^4 + y^5 + x^2*y^3')
        assert milnor_number(germ) == 12
        assert tjurina_number(germ) == 11

    def test_smooth(self):
        germ = self.germ('x + y^2')
        assert germ.is_smooth()
        assert germ.freeness[0]
        assert not self.germ('x*y').is_smooth()

    def test_singular_locus(self):
        germ = self.germ('x*y')
        self.assert_same_ideal(singular_locus(germ), self.ideal('x', 'y'))


class TestSurfaces(BaseTestCase):
    variables = ('x', 'y', 'z')

    def test_normal_crossing_is_free(self):
        germ = self.germ('x*y*z')
        assert len(germ.derivations) == 3
        assert germ.freeness[0]
        assert milnor_number(germ) is None

    def test_umbrella_is_not_free(self):
        germ = self.germ('x^2 - y^2*z')
        assert len(germ.derivations) > 3
        assert germ.freeness == (False, None)
        assert germ.euler[0]

    def test_logarithmic_fields(self):
        germ = self.germ('x*y*z')
        euler = VectorField([self.p('x'), self.p('y'), self.p('z')])
        assert euler.is_logarithmic(germ)
        assert not VectorField([self.p('1'), self.p('0'), self.p('0')]).is_logarithmic(germ)

    def test_four_planes_saito_determinant(self):
        germ = self.germ('x*y*(x + y)*(x + y*z)')
        free, matrix = germ.freeness
        assert free
        assert len(matrix.rows) == 3
        assert matrix.is_certified(germ.h)
        assert determinant(list(matrix.rows)) == matrix.det
        assert matrix.det * matrix.unit_den == matrix.unit_num * germ.h
        for field in matrix.fields:
            assert field.is_logarithmic(germ)

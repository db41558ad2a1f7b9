# -*-  coding: utf-8 -*-
"""Polynomial input grammar."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import pytest

from logres.lib.exceptions import PolySyntaxError, UnknownVariableError
from logres.poly import parse, parse_variables

XYZ = ['x', 'y', 'z']


def test_precedence():
    assert parse('x + y*z', XYZ) == parse('(y*z) + x', XYZ)
    assert parse('-x^2', XYZ) == parse('0 - x*x', XYZ)
    assert parse('(x + y)^2', XYZ) == parse('x^2 + 2*x*y + y^2', XYZ)
    assert parse('2*x^3*y', XYZ) == parse('x*x*2*y*x', XYZ)


def test_rational_coefficients():
    f = parse('3/2*x - 1/2', XYZ)
    assert f == parse('1/2*(3*x - 1)', XYZ)
    assert f.constant_term * 2 == -1


def test_render_round_trip():
    text = parse('x*y - y^3', ['x', 'y']).to_str(['x', 'y'])
    assert text == '-y^3 + x*y'
    assert parse(text, ['x', 'y']) == parse('x*y - y^3', ['x', 'y'])


def test_syntax_errors():
    with pytest.raises(PolySyntaxError) as err:
        parse('x*(', XYZ)
    assert err.value.position == 3
    with pytest.raises(PolySyntaxError):
        parse('x + # y', XYZ)
    with pytest.raises(PolySyntaxError):
        parse('x/0', XYZ)
    with pytest.raises(PolySyntaxError):
        parse('1/0 + x', XYZ)
    with pytest.raises(PolySyntaxError):
        parse('x^(1/2)', XYZ)
    with pytest.raises(PolySyntaxError):
        parse('x y', XYZ)
    with pytest.raises(PolySyntaxError):
        parse('', XYZ)


def test_unknown_variable():
    with pytest.raises(UnknownVariableError) as err:
        parse('x + w', XYZ)
    assert err.value.name == 'w'
    assert err.value.position == 4


def test_parse_variables():
    assert parse_variables('x, y,z') == ['x', 'y', 'z']
    with pytest.raises(PolySyntaxError):
        parse_variables('x,x')
    with pytest.raises(PolySyntaxError):
        parse_variables('x,2y')


def test_expansion():
    f = parse('x*y*(x + y)*(x + y*z)', XYZ)
    assert f == parse('x^3*y + x^2*y^2 + x^2*y^2*z + x*y^3*z', XYZ)
    assert len(f) == 4

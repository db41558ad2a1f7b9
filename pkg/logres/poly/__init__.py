# -*-  coding: utf-8 -*-
"""
Polynomial core: exact polynomials over the rationals, monomial orders and
the input grammar.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from .orders import DEGREVLEX, LEX, LOCAL, MonomialOrder, elimination_order
from .parser import parse, parse_variables
from .poly import (Poly, determinant, poly_gcd, rational_factors, squarefree_check,
                   squarefree_part)

# -*-  coding: utf-8 -*-
"""
Groebner and standard basis engine.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from .ideal import (Certificate, Ideal, ModuleBasis, PolyContext, StandardBasis, eliminate,
                    ideal_quotient, min_generators_local, normal_form, saturation,
                    standard_basis, syzygies)
from .radical import NOT_RADICAL, RADICAL, UNDECIDED, RadicalResult, radical_test

# -*-  coding: utf-8 -*-
"""
Normalization of plane curve germs and their suspensions.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
from .branches import (BranchParam, NormalizationData, conductor, curve_variables,
                       is_weakly_holomorphic, load_branches, normalization, plane_equation,
                       plane_milnor, validate_branches, valuation)
from .puiseux import UNSUPPORTED, newton_edges, puiseux_rational

# -*-  coding: utf-8 -*-
"""
Logarithmic residues, freeness and normal crossing tests for hypersurface
germs.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
__version__ = '0.1.0'

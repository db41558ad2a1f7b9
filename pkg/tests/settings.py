# -*-  coding: utf-8 -*-
"""test settings"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.


from logres.settings import *

BASE_DIR = os.path.dirname(os.path.realpath(__file__))

LOG_HANDLER = ''

LOG_LEVEL = 'WARNING'

SEED = 0

CORPUS_WORKERS = 2

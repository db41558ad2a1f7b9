# -*-  coding: utf-8 -*-
"""
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import sys
from os import environ

environ.setdefault('LOGRES_SETTINGS', 'example.settings')

from logres.management_commands import main

if __name__ == '__main__':
    sys.exit(main())

# -*-  coding: utf-8 -*-
"""configuration"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import importlib
import os

import lazy_object_proxy

SETTINGS_ENV_VAR = 'LOGRES_SETTINGS'


def load_settings():
    """
    Imports the settings module named by ``LOGRES_SETTINGS``.

    Falls back to :mod:`logres.settings`.
    """
    return importlib.import_module(os.getenv(SETTINGS_ENV_VAR, 'logres.settings'))


settings = lazy_object_proxy.Proxy(load_settings)

# -*-  coding: utf-8 -*-
"""Package logger configured from the settings module."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import lazy_object_proxy

from logres.config import settings
from logres.lib.get_logger import get_logger

log = lazy_object_proxy.Proxy(lambda: get_logger(settings))

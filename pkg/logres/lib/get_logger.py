# -*-  coding: utf-8 -*-
"""
Logger factory driven by the settings module.
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import logging
import os

DEBUG_FORMAT = '%(asctime)s - %(filename)s:%(lineno)d %(module)s.%(funcName)s \n> %(message)s\n'
PRODUCTION_FORMAT = ('%(asctime)s - %(process)d - %(threadName)s - %(module)s.%(funcName)s'
                     ' - %(name)s - %(levelname)s - %(message)s')


def get_logger(settings):
    """
    Creates the package logger.

    The logger is named after the basename of ``settings.LOG_FILE`` so
    several projects sharing a process keep separate logs. Calling this
    twice with the same settings returns the already configured logger.

    Args:
        settings: settings module or proxy.

    Returns:
        :class:`logging.Logger`
    """
    name = os.path.basename(settings.LOG_FILE).split('.')[0] or 'logres'
    logger = logging.getLogger(name)
    if getattr(logger, '_logres_configured', False):
        return logger
    logger.setLevel(getattr(logging, settings.LOG_LEVEL))
    logger.propagate = False
    if settings.LOG_HANDLER == 'file':
        handler = logging.FileHandler(filename=settings.LOG_FILE, mode="a")
    else:
        handler = logging.StreamHandler()

    # debug records span several lines
    handler.setFormatter(logging.Formatter(DEBUG_FORMAT if settings.DEBUG else PRODUCTION_FORMAT))
    logger.addHandler(handler)
    logger._logres_configured = True
    return logger

# -*-  coding: utf-8 -*-
"""
Logres Default Project Settings
"""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.

import os.path

#: Project base
BASE_DIR = os.path.dirname(os.path.realpath(__file__))

#: Debug mode makes log records multi-line and verbose.
DEBUG = bool(int(os.environ.get('DEBUG', '0')))

#: Logging Settings
#:
#: Left blank to use StreamHandler aka stderr
#:
#: Set to 'file' for logging 'LOG_FILE'
LOG_HANDLER = os.environ.get('LOG_HANDLER', '')

#: Logging Level. Can be one of INFO, WARNING or DEBUG.
LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')

#: Log file path.
LOG_FILE = os.environ.get('LOG_FILE', './logres.log')

#: Seed of every pseudo random choice (nonzerodivisor combinations,
#: radical test candidates). Reports echo it.
SEED = int(os.environ.get('LOGRES_SEED', '0'))

#: How many candidates are certified before a nonzerodivisor search gives up.
NZD_TRIAL_BUDGET = int(os.environ.get('LOGRES_NZD_TRIAL_BUDGET', '32'))

#: Candidate count of the non-radical witness search.
RADICAL_TRIAL_BUDGET = int(os.environ.get('LOGRES_RADICAL_TRIAL_BUDGET', '24'))

#: Offset added to SEED for the radical test so its stream differs from
#: the nonzerodivisor stream.
RADICAL_SEED_OFFSET = 7919

#: Extra orders of t kept on every branch jet beyond the computed bound.
TRUNCATION_MARGIN = int(os.environ.get('LOGRES_TRUNCATION_MARGIN', '8'))

#: How often an automatic Puiseux expansion is redone with doubled precision.
MAX_PRECISION_DOUBLINGS = int(os.environ.get('LOGRES_MAX_PRECISION_DOUBLINGS', '3'))

#: Largest k tried when certifying integrality of a residue (f^k relation).
INTEGRALITY_DEGREE_BOUND = int(os.environ.get('LOGRES_INTEGRALITY_DEGREE_BOUND', '4'))

#: Newton-Puiseux steps allowed before a branch is declared unseparable.
PUISEUX_MAX_STEPS = int(os.environ.get('LOGRES_PUISEUX_MAX_STEPS', '200'))

#: Number of residue certificates compared for well-definedness.
RESIDUE_CERTIFICATES = 2

#: Worker threads for the corpus command.
CORPUS_WORKERS = int(os.environ.get('LOGRES_CORPUS_WORKERS', '1'))

#: Include wall clock timings in reports. Off by default so that JSON
#: reports of identical runs are byte-identical.
REPORT_TIMINGS = bool(int(os.environ.get('LOGRES_REPORT_TIMINGS', '0')))

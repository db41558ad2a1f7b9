# -*-  coding: utf-8 -*-
"""Settings, logger, JSON and small utilities."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import json
import threading
from fractions import Fraction

from logres.config import settings
from logres.lib.json_interface import dumps
from logres.lib.utils import lazy_property, make_rng, merge_truthy
from logres.log import log
from logres.poly import parse


def test_settings_module():
    assert settings.LOG_LEVEL == 'WARNING'
    assert settings.CORPUS_WORKERS == 2
    assert log.name == 'logres'


def test_merge_truthy():
    assert merge_truthy({'seed': 3, 'format': 'text'}, {'seed': 0, 'format': None}) == \
        {'seed': 0, 'format': 'text'}
    assert merge_truthy({'a': 1}, {'a': False}) == {'a': 1}
    assert merge_truthy({}, {'b': None}) == {'b': None}


def test_make_rng():
    first = [make_rng(7).randint(0, 100) for _ in range(3)]
    assert first == [make_rng(7).randint(0, 100) for _ in range(3)]
    assert make_rng(7, 1).random() != make_rng(7).random()


def test_lazy_property_computes_once():
    calls = []

    class Holder(object):
        @lazy_property
        def value(self):
            calls.append(1)
            return 42

    holder = Holder()
    threads = [threading.Thread(target=lambda: holder.value) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert holder.value == 42
    assert len(calls) == 1


def test_json_encoding():
    text = dumps({'b': Fraction(3, 2), 'a': parse('x*y', ['x', 'y']), 'c': {2, 1}})
    assert json.loads(text) == {'a': 'x0*x1', 'b': '3/2', 'c': [1, 2]}
    assert text.index('"a"') < text.index('"b"')

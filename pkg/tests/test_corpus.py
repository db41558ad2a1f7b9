# -*-  coding: utf-8 -*-
"""Reference germs checked against their expected verdicts."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import pytest

from logres.corpus import CORPUS, CorpusItem, run_corpus, run_item, select
from logres.lib.exceptions import CorpusError


def test_select():
    assert [item.name for item in select(['cusp', 'node'])] == ['node', 'cusp']
    assert len(select()) == len(CORPUS)
    with pytest.raises(CorpusError):
        select(['no_such_item'])


def test_corpus_passes():
    results = run_corpus(workers=2)
    assert [r.item.name for r in results] == [item.name for item in CORPUS]
    assert [r.describe() for r in results if not r.passed] == []


def test_wrong_expectation_fails():
    item = CorpusItem('wrong_node', 'x,y', 'x*y', {'free': 'false'})
    result = run_item(item)
    assert not result.passed
    assert result.failures == [('free', 'false', 'true')]
    assert 'expected false, got true' in result.describe()


def test_broken_item():
    results = run_corpus(items=[CorpusItem('broken', 'x,y', 'x^2', {})])
    assert not results[0].passed
    assert results[0].error is not None

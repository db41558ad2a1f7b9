# -*-  coding: utf-8 -*-
"""Verdicts, consistency records and report serialization."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import json

import pytest

from logres.lib.exceptions import ConsistencyError
from logres.report import (FALSE, TRUE, UNDECIDED, ConsistencyRecord, DivisorReport, Verdict,
                           check)


def test_verdicts():
    assert Verdict.from_bool(True).is_true
    assert Verdict.from_bool(False, witness='x').is_false
    assert not Verdict.undecided('budget').decided
    assert Verdict(TRUE, certificate=['x', 'y']).certificate == ['x', 'y']
    verdict = Verdict(FALSE, witness='y', note='along a branch')
    assert Verdict.from_dict(verdict.to_dict()) == verdict


def test_check():
    record = check('always', True, 'detail', h='x*y')
    assert record.inputs == {'h': 'x*y'}
    with pytest.raises(ConsistencyError) as err:
        check('never', False, 'B, D, G = true, false, true')
    assert err.value.record.name == 'never'
    assert 'never' in str(err.value)


def test_report():
    report = DivisorReport({'variables': ['x', 'y'], 'h': 'x*y'},
                           {'free': Verdict(TRUE, certificate='det'),
                            'jacobian_radical': Verdict(UNDECIDED)},
                           {'milnor_number': 1}, provenance={'seed': 0})
    report.add(ConsistencyRecord('ok', True))
    with pytest.raises(ConsistencyError):
        report.add(ConsistencyRecord('bad', False))
    assert [r.name for r in report.consistency] == ['ok']
    data = json.loads(report.to_json())
    assert data['schema'] == 1
    assert DivisorReport.from_dict(data) == report
    text = report.to_text()
    assert text.startswith('germ: x*y = 0 in (x, y)')
    assert '[ok] ok' in text
    data['schema'] = 99
    with pytest.raises(ValueError):
        DivisorReport.from_dict(data)

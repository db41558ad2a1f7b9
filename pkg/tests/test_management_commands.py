# -*-  coding: utf-8 -*-
"""Command line interface."""

# Copyright (C) 2015 ZetaOps Inc.
#
# This file is licensed under the GNU General Public License v3
# (GPLv3).  See LICENSE.txt for details.
import json
import os

import pytest
from six import StringIO

from logres.lib.exceptions import ConfigurationError, ConsistencyError
from logres.lib.manage import ManagementCommands
from logres.management_commands import AnalyzeDivisor, RunConfig, main
from logres.report import ConsistencyRecord

BRANCHES = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'example', 'branches')


def run(*args):
    out = StringIO()
    manager = ManagementCommands(args=list(args), stdout=out)
    return manager.exit_code, out.getvalue()


def test_analyze_text():
    code, out = run('analyze', '--vars', 'x,y', '--poly', 'x^2 - y^3')
    assert code == 0
    assert out.startswith('germ: -y^3 + x^2 = 0 in (x, y)')
    assert 'jacobian_radical' in out


def test_analyze_json_with_branches():
    code, out = run('analyze', '--vars', 'x,y', '--poly', 'x*y', '--factors', 'x;y',
                    '--branches', os.path.join(BRANCHES, 'node.json'), '--format', 'json',
                    '--seed', '4')
    assert code == 0
    report = json.loads(out)
    assert report['verdicts']['normal_crossing_at_origin']['value'] == 'true'
    assert report['provenance']['branch_source'] == 'user'
    assert report['provenance']['seed'] == 4


@pytest.mark.parametrize('args', [
    ['--vars', 'x,y', '--poly', 'x^2 -'],
    ['--vars', 'x,y', '--poly', 'x^2'],
    ['--vars', 'x,y', '--poly', 'x*w'],
    ['--vars', 'x,x', '--poly', 'x'],
    ['--vars', 'x,y', '--poly', 'x*y', '--format', 'xml'],
    ['--vars', 'x,y', '--poly', 'x*y', '--factors', 'x'],
    ['--vars', 'x,y', '--poly', 'x*y', '--branches', '[{"param": {"x": [[2, "1"]]}}]'],
    ['--vars', 'x,y', '--poly', 'x*y', '--precision', '0'],
])
def test_invalid_input(args):
    code, out = run('analyze', *args)
    assert code == 2
    assert out.startswith('error')


def test_consistency_failure(monkeypatch):
    def broken(config):
        raise ConsistencyError(ConsistencyRecord('broken-relation', False))

    monkeypatch.setattr(AnalyzeDivisor, 'analyze', staticmethod(broken))
    code, out = run('analyze', '--vars', 'x,y', '--poly', 'x*y')
    assert code == 3
    assert 'broken-relation' in out


def test_corpus_command():
    code, out = run('corpus', '--only', 'node,cusp', '--workers', '2')
    assert code == 0
    assert out.splitlines()[0].startswith('PASS node')
    assert '2 items passed' in out
    code, out = run('corpus', '--only', 'nothing')
    assert code == 2


def test_no_command():
    code, _ = run()
    assert code == 2


def test_main():
    assert main(['corpus', '--only', 'node']) == 0


def test_run_config():
    config = RunConfig(vars='x,y', poly='x*y', seed=0, format=None)
    assert config.format == 'text'
    assert config.seed == 0
    assert config.to_dict()['poly'] == 'x*y'
    with pytest.raises(ConfigurationError):
        RunConfig(vars='x', poly='x', format='yaml')

# -*- coding: utf-8 -*-
"""tests for the qkdleak command line front end"""
import csv

import pytest

from qkdleak import core
from qkdleak.cli import main
from qkdleak.sweep import COLUMNS, FIG3_COLUMNS

SCENARIO = """
sidechannel.delta = 0.01
sweep.stop = 60
sweep.step = 10
"""


def read_rows(path):
    with open(path, newline='') as f:
        return list(csv.reader(f))


@pytest.fixture
def scenario(tmp_path):
    path = tmp_path / 'scenario.cfg'
    path.write_text(SCENARIO)
    return str(path)


def test_sweep(tmp_path, scenario, capsys):
    out = tmp_path / 'rates.csv'
    assert main(['sweep', '--config', scenario, '--out', str(out)]) == 0
    rows = read_rows(out)
    assert rows[0] == list(COLUMNS)
    assert len(rows) == 8
    printed = capsys.readouterr().out
    assert 'rate_gllp: ' in printed
    assert 'rate_reference: none' in printed


def test_sweep_method_override(tmp_path, scenario):
    out = tmp_path / 'rates.csv'
    assert main(['sweep', '--config', scenario, '--out', str(out),
                 '--method', 'efer']) == 0
    assert all(row[3] == '' for row in read_rows(out)[1:])


def test_sweep_reads_default_scenario_file(tmp_path, monkeypatch):
    path = tmp_path / 'home.cfg'
    path.write_text(SCENARIO + f'output = {tmp_path / "home.csv"}\n')
    monkeypatch.setattr(core, 'CONFIG_PATH', str(path))
    assert main(['sweep']) == 0
    assert len(read_rows(tmp_path / 'home.csv')) == 8


def test_sweep_without_output(capsys):
    assert main(['sweep']) == 10
    assert capsys.readouterr().err.startswith('error: Invalid configuration [output]')


def test_bad_config(tmp_path, capsys):
    path = tmp_path / 'bad.cfg'
    path.write_text('sweep.step = 0\n')
    assert main(['sweep', '--config', str(path), '--out', str(tmp_path / 'x.csv')]) == 10
    assert 'sweep.step' in capsys.readouterr().err


def test_unwritable_output(tmp_path, scenario):
    out = tmp_path / 'missing' / 'rates.csv'
    assert main(['sweep', '--config', scenario, '--out', str(out)]) == 13


def test_fig1(tmp_path, capsys):
    assert main(['fig1', '--out', str(tmp_path / 'fig1.csv')]) == 0
    for delta in core.DELTA_GRID:
        rows = read_rows(tmp_path / f'fig1_delta{delta:g}.csv')
        assert len(rows) == 202
    assert 'delta0.05 rate_effective_error' in capsys.readouterr().out


def test_fig3(tmp_path):
    out = tmp_path / 'fig3.csv'
    assert main(['fig3', '--out', str(out), '--points', '5']) == 0
    rows = read_rows(out)
    assert rows[0] == list(FIG3_COLUMNS)
    assert [row[0] for row in rows[1:]] == ['0', '0.125', '0.25', '0.375', '0.5']
    assert rows[1][1] == '0.5'
    assert rows[-1][1] == '0'


def test_fig3_rejects_bad_arguments(tmp_path):
    out = str(tmp_path / 'fig3.csv')
    assert main(['fig3', '--out', out, '--points', '1']) == 2
    assert main(['fig3', '--out', out, '--mu', '0']) == 2


def test_zero_distance(tmp_path, scenario, capsys):
    out = tmp_path / 'rates.csv'
    main(['sweep', '--config', scenario, '--out', str(out)])
    capsys.readouterr()

    assert main(['zero-distance', '--csv', str(out), '--column', 'rate_gllp']) == 0
    printed = capsys.readouterr().out.strip()
    assert printed.startswith('rate_gllp: ')
    assert printed.endswith(' km')

    assert main(['zero-distance', '--config', scenario]) == 0
    assert 'rate_reference: none' in capsys.readouterr().out


def test_zero_distance_unknown_column(tmp_path, scenario, capsys):
    assert main(['zero-distance', '--config', scenario, '--column', 'rate_foo']) == 12
    assert 'Unknown column: rate_foo' in capsys.readouterr().err


def test_usage_errors():
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit):
        main(['sweep', '--method', 'guess'])

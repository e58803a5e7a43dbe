import json
import math
from io import StringIO

import pandas as pd
import pytest

from main import run
from src.cli import build_spec, parse_number, parse_range, preset_spec, render_table
from src.cli.sweep_spec import SweepSpec
from src.utils.exceptions import InvalidSweepSpec

SMALL_SIGNAL = ['signal', '--r', '0.8', '--delta', 'pi/5', '--phi-min', '0', '--phi-max', 'pi/4',
                '--phi-steps', '33', '--workers', '1']


@pytest.mark.parametrize("text, expected", [
    ('pi/2', math.pi / 2),
    ('3*pi/20', 3 * math.pi / 20),
    ('-pi', -math.pi),
    ('2pi', 2 * math.pi),
    ('0.5', 0.5),
    ('1/4', 0.25),
    (' 1e-3 ', 1e-3),
])
def test_parse_number(text, expected):
    assert math.isclose(parse_number(text, 'x'), expected, rel_tol=1e-15)


@pytest.mark.parametrize("text", ['abc', 'inf', '1/0', 'pi/x'])
def test_parse_number_rejects(text):
    with pytest.raises(InvalidSweepSpec) as excinfo:
        parse_number(text, 'delta')
    assert excinfo.value.field == 'delta'


def test_parse_range():
    lo, hi, steps = parse_range('0:pi/2:21', 'delta')
    assert lo == 0.0 and math.isclose(hi, math.pi / 2) and steps == 21
    assert parse_range('0.5', 'r') == (0.5, 0.5, 1)
    for bad in ('0:1', '0:1:2.5', '0:1:x'):
        with pytest.raises(InvalidSweepSpec):
            parse_range(bad, 'r')


@pytest.mark.parametrize("kwargs, field", [
    (dict(phi_range=(0.0, 1.0, 0)), 'phi'),
    (dict(phi_range=(0.0, 1.0, 1)), 'phi'),
    (dict(phi_range=(1.0, 1.0, 5)), 'phi'),
    (dict(r_range=(-0.5, 1.0, 3)), 'r'),
    (dict(delta_range=(0.0, 2.0, 3)), 'delta'),
    (dict(delta_values=(0.1, 3.0)), 'delta_values'),
    (dict(ell=-1), 'ell'),
    (dict(output_format='xml'), 'format'),
    (dict(sources=('linear',), quantity='sensitivity'), 'quantity'),
    (dict(workers=0), 'workers'),
])
def test_sweep_spec_validation(kwargs, field):
    with pytest.raises(InvalidSweepSpec) as excinfo:
        SweepSpec(**kwargs)
    assert excinfo.value.field == field


def test_config_file_and_flag_precedence(tmp_path):
    config = tmp_path / "sweep.env"
    config.write_text("r=0.5:1:3\ndelta=pi/4\nell=2\nformat=json\n", encoding='utf-8')
    spec = build_spec({'ell': '3', 'format': None}, str(config))
    assert spec.r_range == (0.5, 1.0, 3)
    assert math.isclose(spec.delta_range[0], math.pi / 4) and spec.delta_range[2] == 1
    assert spec.ell == 3
    assert spec.output_format == 'json'


@pytest.mark.parametrize("content", ["foo=1\n", "r\n"])
def test_config_file_rejects_bad_keys(tmp_path, content):
    config = tmp_path / "bad.env"
    config.write_text(content, encoding='utf-8')
    with pytest.raises(InvalidSweepSpec) as excinfo:
        build_spec({}, str(config))
    assert excinfo.value.field == 'config'


def test_missing_config_file(tmp_path):
    with pytest.raises(InvalidSweepSpec):
        build_spec({}, str(tmp_path / "missing.env"))


@pytest.mark.parametrize("argv", [
    ['signal', '--phi-steps', '0'],
    ['signal', '--phi-min', '1', '--phi-max', '1', '--phi-steps', '10'],
    ['signal', '--delta', '2'],
    ['signal', '--r', '1:0.5:3'],
    ['signal', '--ell', '1.5'],
    ['sensitivity-surface', '--r', '1', '--delta', '0'],
    ['tmsn', '--r', '1'],
    ['figure', '6'],
    ['bogus'],
    ['oracle-check', '--tolerance', '0'],
])
def test_invalid_input_exit_code(argv):
    assert run(argv) == 2


def test_signal_csv_is_deterministic(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(SMALL_SIGNAL + ['--out', str(first)]) == 0
    assert run(SMALL_SIGNAL + ['--out', str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()

    df = pd.read_csv(first)
    assert list(df.columns) == ['source', 'r', 'delta_rad', 'ell', 'nc', 'phi_rad', 'signal']
    assert len(df) == 33
    assert df['signal'].between(-1.0, 1.0).all()
    # φ = π/8 为 ℓ=1 的信号峰
    assert math.isclose(df['signal'].iloc[16], 1.0, abs_tol=1e-12)


def test_signal_to_stdout(capsys):
    assert run(SMALL_SIGNAL) == 0
    df = pd.read_csv(StringIO(capsys.readouterr().out))
    assert len(df) == 33


def test_sensitivity_json(tmp_path):
    out = tmp_path / "sens.json"
    argv = SMALL_SIGNAL + ['--quantity', 'sensitivity', '--format', 'json', '--out', str(out)]
    assert run(argv) == 0
    payload = json.loads(out.read_text(encoding='utf-8'))
    assert payload['command'] == 'signal'
    assert payload['metadata']['quantity'] == 'sensitivity'
    records = payload['records']
    assert len(records) == 33
    assert records[0]['delta_phi_rad'] == 'inf'
    assert records[0]['nc'] is None
    assert all(r['delta_phi_rad'] == 'inf' or r['delta_phi_rad'] > 0 for r in records)


def test_coherent_sources(tmp_path):
    out = tmp_path / "coherent.csv"
    argv = ['signal', '--source', 'linear,circular', '--nc', '3', '--phi-steps', '17', '--workers', '1',
            '--out', str(out)]
    assert run(argv) == 0
    df = pd.read_csv(out)
    assert set(df['source']) == {'linear', 'circular'}
    assert len(df) == 34
    assert df['r'].isna().all()


def test_sensitivity_surface(tmp_path):
    out = tmp_path / "surface.csv"
    argv = ['sensitivity-surface', '--r', '0.5:1:2', '--delta', '0:pi/2:2', '--workers', '1', '--out', str(out)]
    assert run(argv) == 0
    df = pd.read_csv(out)
    assert len(df) == 4
    assert (df['ell'] == 1).all()
    diff = df['hl_rad'] - df['delta_phi_opt_rad']
    assert ((df['hl_minus_delta_phi_rad'] - diff).abs() < 1e-15).all()
    tmsv = df[df['delta_rad'] == 0.0]
    assert (tmsv['hl_minus_delta_phi_rad'] > 0).all()


def test_tmsn_table(tmp_path):
    out = tmp_path / "tmsn.csv"
    assert run(['tmsn', '--r', '0.5:1.5:3', '--workers', '1', '--out', str(out)]) == 0
    df = pd.read_csv(out)
    assert len(df) == 3
    assert df['fwhm_rad'].is_monotonic_decreasing
    assert (df['peak_count'] == 8).all()
    assert df['delta_phi_opt_over_hl'].between(1.0 / 1.2, 1.2).all()


def test_figure_preset_with_gnuplot(tmp_path):
    out = tmp_path / "figure2.csv"
    assert run(['figure', '2', '--workers', '1', '--out', str(out), '--gnuplot']) == 0
    df = pd.read_csv(out)
    assert set(df['source']) == {'linear', 'circular'}
    assert len(df) == 2 * 1025
    script = (tmp_path / "figure2.csv.gp").read_text(encoding='utf-8')
    assert "set datafile separator ','" in script
    assert "'figure2.csv' using 6:7 with lines" in script


def test_preset_ignores_physics_overrides():
    spec = preset_spec('4', {'ell': '5', 'workers': '1'})
    assert spec.ell == 1
    assert spec.workers == 1
    assert spec.quantity == 'sensitivity'
    assert len(spec.delta_grid) == 6
    with pytest.raises(InvalidSweepSpec):
        preset_spec('6')


def test_render_table_json_encodes_special_floats():
    df = pd.DataFrame({'phi_rad': [0.0, 0.1], 'delta_phi_rad': [math.inf, 0.25], 'nc': [math.nan, 1.0]})
    payload = json.loads(render_table(df, 'json', 'signal', {'ell': 1}))
    assert payload['records'][0] == {'phi_rad': 0.0, 'delta_phi_rad': 'inf', 'nc': None}
    assert payload['metadata'] == {'ell': 1}


def test_log_file_option(tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    assert run(SMALL_SIGNAL + ['--out', str(tmp_path / "x.csv"), '--log-file', str(log_file)]) == 0
    assert "信号扫描" in log_file.read_text(encoding='utf-8')


def test_oracle_check_pass_and_fail(tmp_path, capsys):
    out = tmp_path / "oracle.csv"
    assert run(['oracle-check', '--out', str(out)]) == 0
    report = pd.read_csv(out)
    assert report['passed'].all()
    assert (report['max_abs_deviation'] < 1e-8).all()
    capsys.readouterr()

    assert run(['oracle-check', '--tolerance', '1e-300']) == 1
    assert 'False' in capsys.readouterr().out


def test_oversized_squeezing_is_invalid_input(capsys):
    argv = ['signal', '--r', '20', '--phi-steps', '5', '--workers', '1']
    assert run(argv) == 2
    assert '[r]' in capsys.readouterr().err


def test_internal_errors_are_not_reported_as_invalid_input(monkeypatch):
    def broken(spec):
        raise ValueError("shape mismatch")

    monkeypatch.setattr('main.cmd_signal', broken)
    with pytest.raises(ValueError):
        run(SMALL_SIGNAL)


def test_figure_8_writes_signal_curves(tmp_path):
    out = tmp_path / "figure8.csv"
    assert run(['figure', '8', '--workers', '1', '--out', str(out), '--gnuplot']) == 0
    table = pd.read_csv(out)
    assert len(table) == 21
    assert list(table.columns) == ['r', 'ell', 'visibility', 'fwhm_rad', 'peak_count']

    curves = pd.read_csv(tmp_path / "figure8_curves.csv")
    assert list(curves.columns) == ['r', 'ell', 'phi_rad', 'signal']
    assert sorted(set(curves['r'])) == [0.5, 1.5]
    for r, group in curves.groupby('r'):
        assert len(group) == 1025
        # φ = π/8 为 ℓ=1 的信号峰
        assert math.isclose(group['signal'].iloc[256], 1.0, abs_tol=1e-12)
        row = table[(table['r'] - r).abs() < 1e-12].iloc[0]
        lowest = group['signal'].min()
        assert math.isclose(row['visibility'], (1.0 - lowest) / (1.0 + lowest), abs_tol=1e-4)
    assert (tmp_path / "figure8_curves.csv.gp").exists()

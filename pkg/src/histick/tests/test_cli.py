import csv
import io
import json
import logging

import pytest

from click.testing import CliRunner

from histick.cli import histick_cli

FAST = ['--prime-bound', '800', '--y-bound', '200']

@pytest.fixture
def runner(tmp_path, monkeypatch):
    """
    CliRunner with the data directory redirected to ``tmp_path``.
    """

    monkeypatch.setenv('HISTICK_OUTPUT_DIR', str(tmp_path / 'histick_data'))

    return CliRunner()

def test_commands_are_registered():
    """
    Test that every cmd_<name> module became a subcommand.
    """

    assert set(histick_cli.commands) == {'analyze', 'verify', 'search', 'emit',
                                         'config', 'init', 'clean'}

def test_analyze_writes_report(runner, tmp_path):
    """
    Test ``histick analyze`` with --out and --csv on Q(sqrt(5)).
    """

    out = tmp_path / 'q5.json'
    table = tmp_path / 'q5.csv'

    result = runner.invoke(histick_cli, ['analyze', '--field', '5', '--s', '5',
                                         '--out', str(out), '--csv', str(table)] + FAST)

    assert result.exit_code == 0

    report = json.loads(out.read_text())

    assert report['status'] == 'verified'
    assert report['indices']['R:Stick'] == 16
    assert len(list(csv.DictReader(io.StringIO(table.read_text())))) == 2

def test_analyze_completes_s(runner, tmp_path):
    """
    Test that missing ramified primes are added and recorded.
    """

    out = tmp_path / 'q2q5.json'

    result = runner.invoke(histick_cli, ['analyze', '--field', '2,5', '--out', str(out)] + FAST)

    report = json.loads(out.read_text())

    assert result.exit_code == 2
    assert report['header']['s_added'] == [2, 5]
    assert report['header']['s_spec'] == '2,5'

def test_analyze_invalid_field(runner):
    """
    Test that dependent generators exit with code 1.
    """

    result = runner.invoke(histick_cli, ['analyze', '--field', '2,8'] + FAST)

    assert result.exit_code == 1

def test_analyze_error_closes_run_log(runner, tmp_path):
    """
    Test that the run log gets its end banner and is released when analyze exits on an error.
    """

    logs = tmp_path / 'histick_data' / 'logs'
    logs.mkdir(parents=True)

    result = runner.invoke(histick_cli, ['analyze', '--field', '2,8'] + FAST)

    log_files = list(logs.iterdir())

    assert result.exit_code == 1
    assert len(log_files) == 1
    assert 'Total runtime' in log_files[0].read_text()
    assert logging.getLogger('histick.analyze').handlers == []

def test_analyze_unstable_exit_code(runner, tmp_path):
    """
    Test that a failed claim exits with code 1 and still writes the report.
    """

    out = tmp_path / 'unstable.json'

    result = runner.invoke(histick_cli, ['analyze', '--field', '3,7', '--s', '2,3,7',
                                         '--prime-bound', '30', '--out', str(out)])

    assert result.exit_code == 1
    assert json.loads(out.read_text())['status'] == 'failed'

@pytest.mark.parametrize('fmt', ['json', 'csv', 'markdown'])
def test_emit(runner, tmp_path, fmt):
    """
    Test converting a stored report.
    """

    report = tmp_path / 'q2.json'
    out = tmp_path / f'q2.{fmt}'

    runner.invoke(histick_cli, ['analyze', '--field', '2', '--s', '2', '--out', str(report)] + FAST)

    result = runner.invoke(histick_cli, ['emit', str(report), '--format', fmt, '--out', str(out)])
    text = out.read_text()

    assert result.exit_code == 0

    match fmt:

        case 'json':
            assert text == report.read_text()

        case 'csv':
            assert text.startswith('chi,d,disc,raw_L')

        case 'markdown':
            assert text.startswith('# histick report for Q(2)')

def test_emit_rejects_non_json(runner, tmp_path):
    """
    Test that a non-JSON input exits with code 1.
    """

    bad = tmp_path / 'bad.json'
    bad.write_text('not json')

    result = runner.invoke(histick_cli, ['emit', str(bad)])

    assert result.exit_code == 1

def test_search(runner, tmp_path):
    """
    Test ``histick search`` for r <= 30.
    """

    out = tmp_path / 'search.json'

    result = runner.invoke(histick_cli, ['search', '--r-max', '30', '--workers', '2',
                                         '--show-rejected', '--out', str(out)] + FAST)

    data = json.loads(out.read_text())

    assert result.exit_code == 2
    assert [row['r'] for row in data['rows']] == [7, 14, 23]
    assert data['rows'][0]['norm_witness'] == {'d': 2, 'r': 7, 'x': 3, 'y': 1}
    assert len(data['rejected']) == 26

def test_search_rejects_small_r_max(runner):
    """
    Test that r_max < 7 exits with code 1.
    """

    result = runner.invoke(histick_cli, ['search', '--r-max', '5'] + FAST)

    assert result.exit_code == 1

def test_verify_bad_battery(runner, bad_battery_path):
    """
    Test that an invalid battery exits with code 1.
    """

    result = runner.invoke(histick_cli, ['verify', '--battery', str(bad_battery_path)] + FAST)

    assert result.exit_code == 1

def test_verify_battery(runner, battery_path, tmp_path):
    """
    Test ``histick verify`` on the sample battery.
    """

    out = tmp_path / 'verify.json'

    result = runner.invoke(histick_cli, ['verify', '--battery', str(battery_path),
                                         '--trials', '5', '--workers', '2',
                                         '--out', str(out)] + FAST)

    data = json.loads(out.read_text())

    assert result.exit_code == 0
    assert len(data['reports']) == 3
    assert len(data['property_verdicts']) == 9

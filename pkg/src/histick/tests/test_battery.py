import pytest

from histick.algebra import lattice as lat
from histick.analysis import battery
from histick.analysis import suites
from histick.analysis import analysis_reports
from histick.analysis.pipeline import AnalysisSettings
from histick.analysis.verdicts import FAILED, VERIFIED
from histick.general.config import DEFAULT_ANALYSIS

def test_load_battery(battery_path):
    """
    Test reading entries from ``battery.cfg``.
    """

    entries = battery.load_battery(battery_path)

    assert [e.label for e in entries] == ['q2q5', 'q3q7', 'q5']
    assert entries[1].field.generators == (3, 7)
    assert entries[1].s.finite_primes == (2, 3, 7)
    assert entries[2].to_dict() == {'label': 'q5', 'field': '5', 's': '5,7'}

def test_load_bad_battery(bad_battery_path):
    """
    Test that an entry whose S misses a ramified prime is rejected.
    """

    with pytest.raises(ValueError, match='q3q5'):
        battery.load_battery(bad_battery_path)

def test_load_missing_battery(tmp_path):
    """
    Test missing and empty battery files.
    """

    with pytest.raises(FileNotFoundError):
        battery.load_battery(tmp_path / 'missing.cfg')

    empty = tmp_path / 'empty.cfg'
    empty.write_text('')

    with pytest.raises(ValueError):
        battery.load_battery(empty)

    keyless = tmp_path / 'keyless.cfg'
    keyless.write_text('[q7]\ns = 7\n')

    with pytest.raises(ValueError, match='"field"'):
        battery.load_battery(keyless)

def test_default_battery():
    """
    Test the size of the default battery and the extra primes in S.
    """

    entries = battery.default_battery()
    labels = [e.label for e in entries]

    assert len(entries) == 3 * len(battery.DEFAULT_BIQUADRATIC) + 4 + 2
    assert len(set(labels)) == len(labels)

    q3q7 = [e.s.finite_primes for e in entries if e.field.generators == (3, 7)]

    assert q3q7 == [(2, 3, 7), (2, 3, 5, 7), (2, 3, 5, 7, 11)]

def test_run_battery(battery_path):
    """
    Test that the sample battery has no failed claims.
    """

    entries = battery.load_battery(battery_path)
    reports = battery.run_battery(entries, AnalysisSettings(prime_bound=800, y_bound=200), workers=2)

    assert [r.header['field_spec'] for r in reports] == ['2,5', '3,7', '5']
    assert all(r.status != FAILED for r in reports)

    summary = analysis_reports.battery_summary([r.to_dict() for r in reports], [], 0)

    assert 'VERIFICATION BATTERY' in summary
    assert 'Failed claims' not in summary

@pytest.mark.parametrize('seed', [0, 1, 2024])
def test_property_suites(seed):
    """
    Test that every randomized property holds.
    """

    verdicts = suites.run_suites(seed, trials=10)

    assert len(verdicts) == 9
    assert all(v.status == VERIFIED for v in verdicts)
    assert all(v.s == f'seed={seed}' for v in verdicts)

def test_property_suites_default_seed():
    """
    Test that the configured default seed verifies every property with the default trial count.
    """

    verdicts = suites.run_suites(DEFAULT_ANALYSIS['seed'])

    assert [v.claim for v in verdicts if v.status != VERIFIED] == []

def test_row_operations_keep_the_lattice():
    """
    Test that adding a multiple of one generator to another leaves the lattice unchanged.
    """

    rows = [[1, 2], [0, 3]]
    first = lat.from_generators(rows, ambient_dim=2)

    for k in range(-3, 4):
        changed = [[x + k * y for x, y in zip(rows[1], rows[0])], rows[0]]
        assert lat.from_generators(changed, ambient_dim=2) == first

def test_property_suites_are_reproducible():
    """
    Test that a seed fixes the verdicts.
    """

    first = [v.to_dict() for v in suites.run_suites(7, trials=5)]
    second = [v.to_dict() for v in suites.run_suites(7, trials=5)]

    assert first == second

def test_battery_summary_lists_failures():
    """
    Test that failed claims are listed below the table.
    """

    report = {'header': {'field_spec': '2,5', 's_spec': '2,5'},
              'verdicts': [{'claim': 'stick-diagonal', 'status': FAILED, 'field': '2,5', 's': '2,5'}]}

    summary = analysis_reports.battery_summary([report], [], 3)

    assert 'Failed claims' in summary
    assert 'stick-diagonal [2,5|2,5]' in summary
    assert 'FAIL' in summary

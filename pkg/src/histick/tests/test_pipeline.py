import csv
import io
import json

import pytest

from histick.arith import fields
from histick.analysis import pipeline
from histick.analysis import reports
from histick.analysis.verdicts import CONDITIONAL, FAILED, VERIFIED

FAST = pipeline.AnalysisSettings(prime_bound=800, y_bound=200)

def _analyze(generators, primes, settings=FAST):

    return pipeline.analyze(fields.build_field(list(generators)), fields.PlaceSet(primes), settings)

def _claims(report, status=None):

    return {v.claim for v in report.verdicts if status is None or v.status == status}

def test_analyze_rationals():
    """
    Test that E = Q with S = {inf} verifies every claim.
    """

    report = _analyze((), ())

    assert report.status == VERIFIED
    assert report.indices['R:Stick'] == 2
    assert report.checks == {'projections': [], 'base_changes': []}

def test_analyze_q_sqrt5():
    """
    Test the quadratic field Q(sqrt(5)) with S = {inf, 5}.
    """

    report = _analyze((5,), (5,))
    data = report.to_dict()

    assert report.status == VERIFIED
    assert 'quadratic-structure' in _claims(report)
    assert data['bt']['k2_E'] == 16
    assert data['indices']['R:Stick'] == 16
    assert data['indices']['StickS:Stick'] == 1

def test_analyze_q_sqrt2():
    """
    Test the quadratic field Q(sqrt(2)) with S = {inf, 2}.
    """

    report = _analyze((2,), (2,))

    assert report.status == VERIFIED
    assert report.indices['StickS:Stick'] == 2
    assert report.indices['R:Stick'] == 4

def test_analyze_q2q5():
    """
    Test Q(sqrt(2), sqrt(5)): no failures and a conditional Fit position.
    """

    report = _analyze((2, 5), (2, 5))

    assert _claims(report, FAILED) == set()
    assert report.status == CONDITIONAL
    assert _claims(report, CONDITIONAL) == {'fit-position'}
    assert report.indices['S:R'] == 16
    assert {'ann-closed-form', 'stick-closed-form', 'candidate-b-equals-stick',
            'projection', 'base-change', 'theta-sign-law'} <= _claims(report, VERIFIED)

def test_report_is_plain_json():
    """
    Test that every exact value in a report is a plain int, str or list, so json can write it.
    """

    data = _analyze((2, 5), (2, 5)).to_dict()

    text = json.dumps(data, sort_keys=True)

    assert json.loads(text)['characters'][0]['adjusted_L'] == '-1/3'
    assert type(data['bt']['k2_E']) is int
    assert data['checks']['comparison']['consistent'] == ['a', 'b', 'c']

def test_analyze_q2q7_hypothesis():
    """
    Test that the norm conditions add the conditional Stick in Fit claim.
    """

    report = _analyze((2, 7), (2, 7))

    assert _claims(report, FAILED) == set()
    assert 'stick-in-fit' in _claims(report, CONDITIONAL)
    assert report.checks['comparison']['hypothesis']['r'] == 7

def test_analyze_q3q7():
    """
    Test the intersection claims for a field without sqrt(2).
    """

    report = _analyze((3, 7), (2, 3, 7))

    assert _claims(report, FAILED) == set()
    assert {'stick-meets-theta-R', 'ann-meets-R'} <= _claims(report, VERIFIED)
    assert report.checks['comparison']['hyperplanes'] == 15

def test_analyze_unstable_annihilator():
    """
    Test that a tiny prime bound gives a failed partial report.
    """

    report = _analyze((3, 7), (2, 3, 7), pipeline.AnalysisSettings(prime_bound=30))

    assert report.status == FAILED
    assert report.lattices is None
    assert report.indices is None
    assert report.bt is not None
    assert 'stick-ideal' in _claims(report, FAILED)

def test_analyze_rejects_incomplete_s():
    """
    Test that an S missing a ramified prime raises instead of producing a report.
    """

    with pytest.raises(fields.FieldError):
        _analyze((5,), ())

def test_report_is_deterministic():
    """
    Test that two runs give identical JSON and that timing is off by default.
    """

    first = reports.to_json(_analyze((5,), (5,)).to_dict())
    second = reports.to_json(_analyze((5,), (5,)).to_dict())

    assert first == second
    assert json.loads(first)['timing'] is None

def test_timing():
    """
    Test that timing records every stage.
    """

    settings = pipeline.AnalysisSettings(prime_bound=800, timing=True)
    report = _analyze((5,), (5,), settings)

    assert set(report.timing) == {'lvalues', 'orders', 'ideals', 'indices', 'checks'}

def test_header():
    """
    Test that the header records the inputs and the added primes.
    """

    report = pipeline.analyze(fields.build_field([5]), fields.PlaceSet((5,)), FAST, s_added=[5])
    header = report.to_dict()['header']

    assert header['field_spec'] == '5'
    assert header['s_spec'] == '5'
    assert header['s_added'] == [5]
    assert header['settings']['prime_bound'] == 800
    assert 'sympy' in header['versions']

def test_csv_rows():
    """
    Test the CSV columns and the values of Q(sqrt(2)).
    """

    text = reports.to_csv(_analyze((2,), (2,)).to_dict())
    rows = list(csv.DictReader(io.StringIO(text)))

    assert tuple(rows[0]) == reports.CSV_COLUMNS
    assert len(rows) == 2

    assert rows[0]['adjusted_L'] == '1/12'
    assert rows[0]['w2_minus'] == ''
    assert rows[0]['k2_Echi'] == '2'

    assert rows[1]['d'] == '2'
    assert rows[1]['w2'] == '48'
    assert rows[1]['w2_minus'] == '2'
    assert rows[1]['places'] == '3'
    assert rows[1]['k2_minus'] == '2'
    assert rows[1]['theta_component'] == '-1/1'

def test_markdown():
    """
    Test the Markdown report sections.
    """

    text = reports.to_markdown(_analyze((5,), (5,)).to_dict())

    assert text.startswith('# histick report for Q(5)')
    assert '## Indices' in text
    assert '## Verdicts' in text
    assert '| quadratic-structure | verified |' in text

def test_render_rejects_unknown_format():
    """
    Test the format check.
    """

    with pytest.raises(ValueError):
        reports.render({}, 'xml')

    assert reports.render({'characters': []}, 'csv') == ','.join(reports.CSV_COLUMNS) + '\n'

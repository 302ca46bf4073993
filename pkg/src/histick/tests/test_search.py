import pytest

from histick.analysis import search
from histick.analysis.verdicts import CONDITIONAL, FAILED

QUALIFYING_UP_TO_100 = [7, 14, 23, 31, 46, 47, 62, 71, 79, 94]

def _settings(**kwargs):

    settings = {'s_policy': 'minimal',
                'extra_primes': (),
                'y_bound': 100,
                'prime_bound': 800,
                'stabilization_window': 25}
    settings.update(kwargs)

    return settings

@pytest.mark.parametrize('r, reason', [(7, None),
                                       (14, None),
                                       (28, 'not squarefree'),
                                       (15, 'has a prime divisor congruent to 1 mod 4'),
                                       (3, 'has a prime divisor not congruent to 7 mod 8'),
                                       (21, 'has a prime divisor not congruent to 7 mod 8'),
                                       (2, 'has no odd prime divisor')])
def test_qualify_r(r, reason):
    """
    Test the rejection reasons in the order they are checked.
    """

    ok, why = search.qualify_r(r)

    assert ok == (reason is None)
    assert why == reason

def test_qualifying_r_up_to_100():
    """
    Test the list of qualifying r <= 100.
    """

    assert [r for r in range(2, 101) if search.qualify_r(r)[0]] == QUALIFYING_UP_TO_100

def test_family_place_set():
    """
    Test S under the minimal and extended policies.
    """

    s, violation = search.family_place_set(14)

    assert s.finite_primes == (2, 7)
    assert violation == []

    s, violation = search.family_place_set(7, 'extended', (5, 3))

    assert s.finite_primes == (2, 3, 5, 7)
    assert violation == [5]

    with pytest.raises(ValueError):
        search.family_place_set(7, 'maximal')

def test_analyse_member():
    """
    Test the row of r = 7: witness (3, 1), conditional status and (R:Stick) = k_2.
    """

    row = search.analyse_member(7, _settings())

    assert (row.norm_witness.x, row.norm_witness.y) == (3, 1)
    assert row.s_used.finite_primes == (2, 7)
    assert row.annotation == search.CONDITIONAL_ANNOTATION
    assert row.status == CONDITIONAL
    assert row.index_data['R:Stick'] == row.index_data['k2_E_predicted']
    assert row.to_dict()['s_spec'] == '2,7'

def test_analyse_member_with_violation():
    """
    Test that a prime 5 in S removes the annotation.
    """

    row = search.analyse_member(23, _settings(s_policy='extended', extra_primes=(5,)))

    assert (row.norm_witness.x, row.norm_witness.y) == (5, 1)
    assert row.s_policy_violation == [5]
    assert row.annotation is None
    assert row.status != FAILED

def test_analyse_member_unstable():
    """
    Test that an unstable annihilator gives a failed row instead of raising.
    """

    row = search.analyse_member(7, _settings(prime_bound=20))

    assert row.status == FAILED
    assert row.index_data is None
    assert 'did not stabilize' in row.error

def test_search_rejects_small_r_max():
    """
    Test the lower bound on r_max.
    """

    with pytest.raises(ValueError):
        search.search(6, _settings())

def test_search_up_to_30():
    """
    Test the rows and rejected values for r <= 30.
    """

    result = search.search(30, _settings(), workers=2)
    data = result.to_dict(show_rejected=True)

    assert [row.r for row in result.rows] == [7, 14, 23]
    assert result.status == CONDITIONAL
    assert len(data['rejected']) == 29 - 3
    assert 'rejected' not in result.to_dict()

@pytest.mark.slow
def test_search_up_to_100():
    """
    Test the full family search for r <= 100.
    """

    result = search.search(100, _settings(y_bound=10000), workers=4)

    assert [row.r for row in result.rows] == QUALIFYING_UP_TO_100
    assert all(row.status != FAILED for row in result.rows)
    assert all(row.index_data['S:R'] == 16 for row in result.rows)

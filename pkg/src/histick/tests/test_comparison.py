import pytest

from histick.algebra import lattice as lat
from histick.arith import fields
from histick.ideals import comparison

Y_BOUND = 200

def test_hypothesis_holds_for_q2q7():
    """
    Test that Q(sqrt(2), sqrt(7)) with S = {inf, 2, 7} satisfies the norm conditions.
    """

    hypothesis = comparison.norm_hypothesis_flag(fields.build_field([2, 7]),
                                                 fields.PlaceSet((2, 7)), Y_BOUND)

    assert hypothesis.holds
    assert hypothesis.r == 7
    assert (hypothesis.witness.x, hypothesis.witness.y) == (3, 1)
    assert hypothesis.to_dict()['witness']['y'] == 1

def test_hypothesis_fails_for_q2q5():
    """
    Test that every candidate r of Q(sqrt(2), sqrt(5)) has a prime divisor 1 mod 4.
    """

    hypothesis = comparison.norm_hypothesis_flag(fields.build_field([2, 5]),
                                                 fields.PlaceSet((2, 5)), Y_BOUND)

    assert not hypothesis.holds
    assert set(hypothesis.reasons) == {5, 10}
    assert hypothesis.reasons[5] == 'a prime divisor is 1 mod 4'

def test_hypothesis_needs_sqrt2():
    """
    Test that fields without sqrt(2) never satisfy the conditions.
    """

    hypothesis = comparison.norm_hypothesis_flag(fields.build_field([3, 7]),
                                                 fields.PlaceSet((2, 3, 7)), Y_BOUND)

    assert not hypothesis.holds
    assert 'field' in hypothesis.reasons

def test_hypothesis_rejects_s_with_primes_1_mod_4():
    """
    Test that a prime 5 in S blocks the conditions for Q(sqrt(2), sqrt(7)).
    """

    hypothesis = comparison.norm_hypothesis_flag(fields.build_field([2, 7]),
                                                 fields.PlaceSet((2, 5, 7)), Y_BOUND)

    assert not hypothesis.holds
    assert 'S contains [5]' in hypothesis.reasons[7]

def test_comparison_with_sqrt2(stick_bundle):
    """
    Test the three candidates for Q(sqrt(2), sqrt(7)): b equals Stick and c is excluded.
    """

    b = stick_bundle((2, 7), (2, 7))
    cases = comparison.comparison_cases(b, Y_BOUND)
    candidates = {c.label: c for c in cases.candidates}

    assert cases.has_first_layer
    assert cases.stick_index_in_stick_S == 4
    assert set(candidates) == {'a', 'b', 'c'}

    assert candidates['b'].stick_relation.relation == 'equal'
    assert candidates['b'].index_in_fit_S == 4
    assert candidates['c'].excluded
    assert not candidates['c'].consistent
    assert cases.consistent_labels() == ['a', 'b']

def test_first_candidate_contains_stick_with_index_2(stick_bundle):
    """
    Test that Stick lies in the first candidate with index 2, so that position stays possible.
    """

    b = stick_bundle((2, 5), (2, 5))
    cases = comparison.comparison_cases(b, Y_BOUND)
    candidates = {c.label: c for c in cases.candidates}

    assert candidates['a'].stick_relation.to_dict() == {'relation': 'subset', 'index': 2}
    assert candidates['a'].consistent
    assert candidates['c'].same_index_in_R
    assert cases.consistent_labels() == ['a', 'b', 'c']

def test_case_holds():
    """
    Test the relation each case asserts between Fit and Stick.
    """

    subset_2 = lat.LatticeComparison('subset', 2)
    equal = lat.LatticeComparison('equal', 1)

    assert comparison.case_holds('a', True, subset_2, False)
    assert not comparison.case_holds('a', True, equal, True)
    assert comparison.case_holds('b', True, equal, True)
    assert not comparison.case_holds('b', True, subset_2, True)
    assert comparison.case_holds('c', True, subset_2, True)
    assert not comparison.case_holds('a', False, subset_2, False)
    assert comparison.case_holds('b', False, subset_2, True)

def test_comparison_without_sqrt2(stick_bundle):
    """
    Test the hyperplane count and the two intersection identities for Q(sqrt(3), sqrt(7)).
    """

    b = stick_bundle((3, 7), (2, 3, 7))
    cases = comparison.comparison_cases(b, Y_BOUND)

    assert not cases.has_first_layer
    assert cases.stick_index_in_stick_S == 2
    assert [c.label for c in cases.candidates] == ['a', 'b']
    assert cases.hyperplanes == 15
    assert 0 <= cases.integral_hyperplanes <= 15
    assert cases.stick_meets_theta_R
    assert cases.ann_meets_R
    assert cases.consistent_labels() == ['b']
    assert not cases.candidates[0].same_index_in_R

def test_candidate_indices(stick_bundle):
    """
    Test that the candidates have index 1 and 2 in Fit S.
    """

    b = stick_bundle((3, 7), (2, 3, 7))
    cases = comparison.comparison_cases(b, Y_BOUND)
    candidates = {c.label: c for c in cases.candidates}

    assert candidates['a'].index_in_fit_S == 1
    assert candidates['a'].lattice == b.fit_S_predicted
    assert candidates['b'].index_in_fit_S == 2
    assert lat.is_sublattice(lat.scale(b.fit_S_predicted, 2), candidates['b'].lattice)

def test_fit_basis_is_diagonal(stick_bundle):
    """
    Test that the f_i span the predicted Fit S.
    """

    b = stick_bundle((2, 5), (2, 5))

    basis = comparison.fit_basis(b)

    assert lat.from_generators(list(basis), ambient_dim=4) == b.fit_S_predicted
    assert comparison.comparison_cases(b, Y_BOUND).to_dict()['hypothesis']['holds'] is False

def test_comparison_rejects_quadratic_fields(stick_bundle):
    """
    Test that the comparison needs a biquadratic field.
    """

    with pytest.raises(fields.FieldError):
        comparison.comparison_cases(stick_bundle((5,), (5,)), Y_BOUND)

def _hyperplane(f, functional):
    """The index-2 lattice {sum a_i f_i : sum of a_i over the bits of functional is even}"""

    bits = [i for i in range(4) if (functional >> i) & 1]
    generators = [f[i] for i in range(4) if i not in bits]
    generators += [f[i] * 2 for i in bits]
    generators += [f[i] + f[bits[0]] for i in bits[1:]]

    return lat.from_generators(generators, ambient_dim=4)

def test_count_hyperplanes(stick_bundle):
    """
    Test the hyperplane counts for Q(sqrt(3), sqrt(7)) against a direct enumeration.
    """

    b = stick_bundle((3, 7), (2, 3, 7))
    f = comparison.fit_basis(b)

    hyperplanes = [_hyperplane(f, functional) for functional in range(1, 16)]

    assert len(set(hyperplanes)) == 15
    assert all(lat.index(b.fit_S_predicted, h) == 2 for h in hyperplanes)

    integral = sum(lat.is_sublattice(h, b.R) for h in hyperplanes)

    assert comparison.count_hyperplanes(b) == (15, integral)

    cases = comparison.comparison_cases(b, Y_BOUND)

    assert (cases.hyperplanes, cases.integral_hyperplanes) == (15, integral)

"""Where Stick can sit relative to the predicted Fitting ideal (biquadratic E)

Fit itself is not computed. Its S-extension is predicted to be
Fit S = Z f_0 + Z f_1 + Z f_2 + Z f_3 with f_0 = k_2^S(Q) e_0 and
f_chi = k_2^S(E_chi)^- e_chi, and Fit lies between Fit S and 2 Fit S.
Candidates are therefore F_2-subspaces of Fit S / 2 Fit S.

"""

import math

from dataclasses import dataclass, field as dataclass_field

import sympy

from histick.algebra import lattice as lat
from histick.algebra.groupring import idempotent
from histick.arith import fields
from histick.ideals.closed_forms import biquadratic_labels


@dataclass(frozen=True)
class NormHypothesis:
    """
    Arithmetic sufficient conditions for excluding the third position

    ``r`` is the subfield Q(sqrt(r)) satisfying the conditions, ``reasons``
    lists why each candidate r failed when none does.

    """

    holds: bool
    r: int | None = None
    witness: fields.NormWitness | None = None
    reasons: dict = dataclass_field(default_factory=dict)

    def to_dict(self):
        """Serializable form"""

        return {'holds': self.holds,
                'r': self.r,
                'witness': self.witness.to_dict() if self.witness else None,
                'reasons': {str(k): v for k, v in self.reasons.items()}}


def norm_hypothesis_flag(field, s, y_bound):
    """
    Decide the arithmetic sufficient conditions for E = Q(sqrt(2), sqrt(r))

    They hold when sqrt(2) lies in E and one of the other quadratic
    subfields Q(sqrt(r)) has: no prime divisor of r congruent to 1 mod 4,
    r = x^2 - 2y^2 solvable (bounded search), 2r not a square, and S
    contains no finite prime congruent to 1 mod 4.

    """

    if field.rank != 2 or field.first_layer_chi is None:
        return NormHypothesis(False, reasons={'field': 'sqrt(2) is not in a biquadratic E'})

    bad_s = [p for p in s.finite_primes if p % 4 == 1]
    reasons = {}

    for chi in biquadratic_labels(field)[1:]:

        r = field.subfield_d(chi)

        if any(p % 4 == 1 for p in sympy.primefactors(r)):
            reasons[r] = 'a prime divisor is 1 mod 4'
            continue

        if math.isqrt(2 * r) ** 2 == 2 * r:
            reasons[r] = '2r is a square'
            continue

        if bad_s:
            reasons[r] = f'S contains {bad_s}, congruent to 1 mod 4'
            continue

        witness = fields.norm_form_solve(2, r, y_bound)

        if witness is None:
            reasons[r] = f'no norm witness with y <= {y_bound}'
            continue

        return NormHypothesis(True, r=r, witness=witness)

    return NormHypothesis(False, reasons=reasons)


@dataclass(frozen=True)
class Candidate:
    """
    One candidate position of Fit between Fit S and 2 Fit S

    ``same_index_in_R`` compares the covolumes of the candidate and Stick;
    ``consistent`` applies the relation its case asserts between Fit and
    Stick.

    """

    label: str
    lattice: lat.IntegerLattice
    index_in_fit_S: int
    stick_relation: lat.LatticeComparison
    same_index_in_R: bool
    consistent: bool
    excluded: bool = False

    def to_dict(self):
        """Serializable form"""

        return {'label': self.label,
                'lattice': self.lattice.to_dict(),
                'index_in_fit_S': self.index_in_fit_S,
                'stick_relation': self.stick_relation.to_dict(),
                'same_index_in_R': self.same_index_in_R,
                'consistent': self.consistent,
                'excluded': self.excluded}


@dataclass(frozen=True)
class ComparisonCases:
    """Candidate positions of Fit together with global facts about Stick"""

    has_first_layer: bool
    candidates: tuple
    stick_index_in_stick_S: int
    hypothesis: NormHypothesis
    hyperplanes: int = 0
    integral_hyperplanes: int = 0
    stick_meets_theta_R: bool | None = None
    ann_meets_R: bool | None = None

    def consistent_labels(self):
        """Labels of the candidates consistent with Stick's position"""

        return [c.label for c in self.candidates if c.consistent]

    def to_dict(self):
        """Serializable form"""

        return {'has_first_layer': self.has_first_layer,
                'candidates': [c.to_dict() for c in self.candidates],
                'consistent': self.consistent_labels(),
                'stick_index_in_stick_S': self.stick_index_in_stick_S,
                'hypothesis': self.hypothesis.to_dict(),
                'hyperplanes': self.hyperplanes,
                'integral_hyperplanes': self.integral_hyperplanes,
                'stick_meets_theta_R': self.stick_meets_theta_R,
                'ann_meets_R': self.ann_meets_R}


def fit_basis(stick_bundle):
    """(f_0, f_1, f_2, f_3) in the labelling of ``biquadratic_labels``"""

    field, group, orders = stick_bundle.field, stick_bundle.group, stick_bundle.orders
    chi1, chi2, chi3 = biquadratic_labels(field)

    return (idempotent(group, 0) * orders.k2_F,
            idempotent(group, chi1) * orders.k2_minus[chi1],
            idempotent(group, chi2) * orders.k2_minus[chi2],
            idempotent(group, chi3) * orders.k2_minus[chi3])


def case_holds(label, has_first_layer, relation, same_index_in_R):
    """
    Whether Stick's position agrees with what case ``label`` asserts

    Without sqrt(2) both cases put Fit at the index of Stick in R. With
    sqrt(2): in (a) Stick lies in Fit with index 2, in (b) Fit equals
    Stick, in (c) they have the same index in R.

    """

    if not has_first_layer:
        return same_index_in_R

    match label:
        case 'a':
            return relation.relation == 'subset' and relation.index == 2
        case 'b':
            return relation.relation == 'equal'
        case _:
            return same_index_in_R


def _candidate(label, generators, stick_bundle, has_first_layer, excluded=False):

    fit_S = stick_bundle.fit_S_predicted
    twice = lat.scale(fit_S, 2)
    lattice = lat.lattice_sum(lat.from_generators(generators, ambient_dim=fit_S.ambient_dim), twice)
    relation = lat.compare(stick_bundle.stick, lattice)
    same_index = lat.index(stick_bundle.R, lattice) == lat.index(stick_bundle.R, stick_bundle.stick)

    return Candidate(label=label,
                     lattice=lattice,
                     index_in_fit_S=lat.index(fit_S, lattice),
                     stick_relation=relation,
                     same_index_in_R=same_index,
                     consistent=case_holds(label, has_first_layer, relation, same_index) and not excluded,
                     excluded=excluded)


def count_hyperplanes(stick_bundle):
    """
    Number of index-2 lattices between Fit S and 2 Fit S, and how many of
    them lie in Z[G]

    """

    f = fit_basis(stick_bundle)
    fit_S = stick_bundle.fit_S_predicted
    twice = lat.scale(fit_S, 2)

    total, integral = 0, 0

    for functional in range(1, 16):

        kernel = [v for v in range(16) if (v & functional).bit_count() % 2 == 0]
        generators = [sum((f[i] for i in range(4) if (v >> i) & 1), f[0] * 0) for v in kernel]

        candidate = lat.lattice_sum(lat.from_generators(generators, ambient_dim=fit_S.ambient_dim), twice)

        total += 1
        if lat.is_sublattice(candidate, stick_bundle.R):
            integral += 1

    return total, integral


def comparison_cases(stick_bundle, y_bound):
    """
    Classify the candidate positions of Fit for a biquadratic field

    Parameters
    ----------
    stick_bundle : IdealBundle
        Bundle of a biquadratic E
    y_bound : int
        Bound for the norm-form search

    Returns
    -------
    ComparisonCases
        Candidates with their index in Fit S, Stick's relation to each, and
        which are consistent with the relation their case asserts

    """

    field = stick_bundle.field

    f0, f1, f2, f3 = fit_basis(stick_bundle)
    target = lat.index(stick_bundle.stick_S, stick_bundle.stick)
    hypothesis = norm_hypothesis_flag(field, stick_bundle.s, y_bound)

    if field.first_layer_chi is not None:

        candidates = (
                _candidate('a', [f0 + f1, f2, f3], stick_bundle, True),
                _candidate('b', [f0 + f1 + f2, f2 + f3], stick_bundle, True),
                _candidate('c', [f0 + f1, f2 + f3], stick_bundle, True,
                           excluded=hypothesis.holds))

        return ComparisonCases(has_first_layer=True, candidates=candidates,
                               stick_index_in_stick_S=target, hypothesis=hypothesis)

    candidates = (
            _candidate('a', [f0, f1, f2, f3], stick_bundle, False),
            _candidate('b', [f0, f1 + f2, f2 + f3], stick_bundle, False))

    total, integral = count_hyperplanes(stick_bundle)

    theta_R = lat.mul_by_ring_element(stick_bundle.R, stick_bundle.theta)
    stick_meets = lat.intersect(stick_bundle.stick_S, theta_R) == stick_bundle.stick
    ann_meets = lat.intersect(stick_bundle.ann_S, stick_bundle.R) == stick_bundle.ann

    return ComparisonCases(has_first_layer=False, candidates=candidates,
                           stick_index_in_stick_S=target, hypothesis=hypothesis,
                           hyperplanes=total, integral_hyperplanes=integral,
                           stick_meets_theta_R=stick_meets, ann_meets_R=ann_meets)


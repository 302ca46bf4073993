"""Randomized property suites run by ``histick verify``

Every suite draws its inputs from ``random.Random(seed)`` and records one
verdict whose sides are the number of failing trials and zero.

"""

import random

from fractions import Fraction

from histick.algebra import lattice as lat
from histick.algebra.groupring import (ExpTwoGroup, GroupRingElem, character_transform,
                                       idempotent, inverse_character_transform, mul,
                                       project_quotient)
from histick.arith import fields
from histick.arith import lvalues
from histick.analysis.verdicts import VerdictBook

SUITE_FIELD = 'random'


def random_element(rng, group, bound=6, denominator=1):
    """A random element of (1/denominator) Z[G] with small coefficients"""

    return GroupRingElem(group, [Fraction(rng.randint(-bound, bound), denominator)
                                 for _ in range(group.order)])


def random_lattice(rng, group, bound=6):
    """A random full-rank sublattice of Z[G]"""

    while True:

        lattice = lat.from_generators([random_element(rng, group, bound)
                                       for _ in range(group.order + 1)],
                                      ambient_dim=group.order)

        if lattice.is_full_rank:
            return lattice


def group_ring_suite(book, rng, trials):
    """Transform multiplicativity, idempotents, projection and round trips"""

    failures = {'multiplicativity': 0, 'idempotents': 0, 'projection': 0, 'round-trip': 0}

    for _ in range(trials):

        group = ExpTwoGroup(rng.randint(1, 3))
        a = random_element(rng, group, denominator=rng.randint(1, 4))
        b = random_element(rng, group)

        product = character_transform(mul(a, b))
        pointwise = [x * y for x, y in zip(character_transform(a), character_transform(b))]
        failures['multiplicativity'] += product != pointwise

        chi = rng.randrange(group.order)
        other = rng.randrange(group.order)
        e = idempotent(group, chi)
        cross = mul(e, idempotent(group, other))
        failures['idempotents'] += mul(e, e) != e or (chi != other and not cross.is_zero)

        kernel = [rng.randrange(group.order)]
        lhs = project_quotient(mul(a, b), kernel)
        rhs = mul(project_quotient(a, kernel), project_quotient(b, kernel))
        failures['projection'] += lhs != rhs

        failures['round-trip'] += inverse_character_transform(group, character_transform(a)) != a

    for name, count in failures.items():
        book.equal(f'property-group-ring-{name}', count, 0,
                   f'Group ring {name.replace("-", " ")} holds on {trials} random trials.')


def lattice_suite(book, rng, trials):
    """HNF uniqueness, index multiplicativity, second isomorphism, distributivity"""

    failures = {'hnf-uniqueness': 0, 'index-multiplicativity': 0,
                'second-isomorphism': 0, 'distributivity': 0}

    for _ in range(trials):

        group = ExpTwoGroup(rng.randint(1, 2))
        first = random_lattice(rng, group)
        second = random_lattice(rng, group)

        vectors = first.vectors()
        rng.shuffle(vectors)
        i, j = rng.sample(range(len(vectors)), 2) if len(vectors) > 1 else (0, 0)
        if i != j:
            k = rng.randint(-3, 3)
            vectors[i] = [x + k * y for x, y in zip(vectors[i], vectors[j])]
        failures['hnf-uniqueness'] += lat.from_generators(vectors, ambient_dim=group.order) != first

        middle = lat.lattice_sum(first, second)
        outer = lat.standard_lattice(group.order)
        failures['index-multiplicativity'] += (
                lat.index(outer, first) != lat.index(outer, middle) * lat.index(middle, first))

        meet = lat.intersect(first, second)
        failures['second-isomorphism'] += lat.index(middle, first) != lat.index(second, meet)

        a = random_element(rng, group)
        if not a.is_zero:
            lhs = lat.mul_by_ring_element(middle, a)
            rhs = lat.lattice_sum(lat.mul_by_ring_element(first, a), lat.mul_by_ring_element(second, a))
            failures['distributivity'] += lhs != rhs

    for name, count in failures.items():
        book.equal(f'property-lattice-{name}', count, 0,
                   f'Lattice {name.replace("-", " ")} holds on {trials} random trials.')


def lvalue_suite(book, rng, trials):
    """Enlarging S multiplies L^S(-1, chi) by the Euler factor of the new prime"""

    discs = [1, 5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 40, 41, 44]
    primes = fields.primes_up_to(60)
    failures = 0

    for _ in range(trials):

        disc = rng.choice(discs)
        s = fields.PlaceSet(tuple(rng.sample(primes, rng.randint(0, 3))))
        p = rng.choice([q for q in primes if q not in s.finite_primes])

        small = lvalues.l_value_record(disc, s).adjusted_L
        large = lvalues.l_value_record(disc, s.with_primes([p])).adjusted_L

        failures += large != small * lvalues.euler_multiplier(disc, p)

    book.equal('property-lvalue-enlargement', failures, 0,
               f'L^(S+p)(-1, chi) = (1 - chi(p) p) L^S(-1, chi) on {trials} random trials.')


def run_suites(seed, trials=25):
    """
    Run every property suite

    Parameters
    ----------
    seed : int
        Seed of ``random.Random``
    trials : int
        Trials per suite

    Returns
    -------
    list of Verdict
        One verdict per property

    """

    rng = random.Random(seed)
    book = VerdictBook(SUITE_FIELD, f'seed={seed}')

    group_ring_suite(book, rng, trials)
    lattice_suite(book, rng, trials)
    lvalue_suite(book, rng, trials)

    return book.verdicts

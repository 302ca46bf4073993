"""Exact arithmetic in Q[G] and Z[G] for an elementary abelian 2-group G

Group elements are bitmasks: bit ``i`` of ``sigma`` is set when ``sigma``
moves the ``i``-th generator of the field description. The character with
mask ``b`` takes the value (-1)^popcount(b & sigma).

"""

from dataclasses import dataclass
from fractions import Fraction

from histick.general import utils

MAX_RANK = 6


class GroupMismatchError(ValueError):
    """Raised when elements over different groups are combined"""


def character_value(chi, sigma):
    """
    Value of the character ``chi`` on the group element ``sigma``

    Parameters
    ----------
    chi : int
        Character mask
    sigma : int
        Group element bitmask

    Returns
    -------
    int
        1 or -1

    """

    return -1 if (chi & sigma).bit_count() % 2 else 1


def tau_chi(chi):
    """
    The lowest generator not in ker(chi), or None for the trivial character

    Parameters
    ----------
    chi : int
        Character mask

    Returns
    -------
    int | None
        Group element bitmask of the chosen generator

    """

    if chi == 0:
        return None

    return chi & -chi


def f2_reduced_basis(vectors):
    """
    Reduced row echelon basis over the field with two elements

    Parameters
    ----------
    vectors : iterable of int
        Bitmask vectors

    Returns
    -------
    basis : list of int
        Canonical basis of the span, sorted increasingly

    """

    pivots = {}

    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            if lead in pivots:
                v ^= pivots[lead]
            else:
                pivots[lead] = v
                break

    for lead in sorted(pivots):
        v = pivots[lead]
        for low in sorted(pivots):
            if low < lead and (v >> low) & 1:
                v ^= pivots[low]
        pivots[lead] = v

    return sorted(pivots.values())


@dataclass(frozen=True)
class ExpTwoGroup:
    """
    The group (Z/2)^rank with bitmask elements and XOR as the group law

    """

    rank: int

    def __post_init__(self):

        if not isinstance(self.rank, int) or not 0 <= self.rank <= MAX_RANK:
            raise ValueError(f'Group rank must be an integer between 0 and {MAX_RANK}.')

    @property
    def order(self):
        """Number of elements"""

        return 1 << self.rank

    def elements(self):
        """All group elements in bitmask order"""

        return range(self.order)

    def characters(self):
        """All character masks, the trivial character first"""

        return range(self.order)

    def contains(self, sigma):
        """True if ``sigma`` is an element of the group"""

        return isinstance(sigma, int) and 0 <= sigma < self.order

    def subgroup(self, generators):
        """
        Elements of the subgroup generated by ``generators``

        Parameters
        ----------
        generators : list of int
            Group elements

        Returns
        -------
        list of int
            Sorted subgroup elements

        """

        for g in generators:
            if not self.contains(g):
                raise ValueError(f'{g} is not an element of a group of rank {self.rank}.')

        elements = {0}
        for g in generators:
            elements |= {x ^ g for x in elements}

        return sorted(elements)


@dataclass(frozen=True)
class GroupRingElem:
    """
    An element of Q[G], stored as exact rational coefficients in bitmask order

    """

    group: ExpTwoGroup
    coeffs: tuple

    def __post_init__(self):

        coeffs = tuple(Fraction(c) for c in self.coeffs)

        if len(coeffs) != self.group.order:
            raise ValueError(f'Expected {self.group.order} coefficients, got {len(coeffs)}.')

        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def zero(cls, group):
        """The zero element"""

        return cls(group, (0,) * group.order)

    @classmethod
    def scalar(cls, group, value):
        """``value`` times the identity"""

        coeffs = [0] * group.order
        coeffs[0] = value

        return cls(group, coeffs)

    @classmethod
    def one(cls, group):
        """The identity element of the ring"""

        return cls.scalar(group, 1)

    @classmethod
    def basis(cls, group, sigma):
        """The group element ``sigma`` viewed inside the group ring"""

        if not group.contains(sigma):
            raise ValueError(f'{sigma} is not an element of a group of rank {group.rank}.')

        coeffs = [0] * group.order
        coeffs[sigma] = 1

        return cls(group, coeffs)

    def _check_group(self, other):

        if self.group != other.group:
            raise GroupMismatchError(
                    f'Cannot combine elements over groups of rank {self.group.rank} and {other.group.rank}.')

    def __add__(self, other):

        if not isinstance(other, GroupRingElem):
            return NotImplemented

        self._check_group(other)

        return GroupRingElem(self.group,
                tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):

        if not isinstance(other, GroupRingElem):
            return NotImplemented

        return self + (-other)

    def __neg__(self):

        return GroupRingElem(self.group, tuple(-a for a in self.coeffs))

    def __mul__(self, other):

        if isinstance(other, GroupRingElem):
            return mul(self, other)

        if isinstance(other, (int, Fraction)):
            return GroupRingElem(self.group, tuple(other * a for a in self.coeffs))

        return NotImplemented

    def __rmul__(self, other):

        if isinstance(other, (int, Fraction)):
            return self * other

        return NotImplemented

    @property
    def is_integral(self):
        """True if every coefficient is an integer"""

        return all(c.denominator == 1 for c in self.coeffs)

    @property
    def is_zero(self):
        """True for the zero element"""

        return not any(self.coeffs)

    def augmentation(self):
        """Sum of the coefficients"""

        return sum(self.coeffs, Fraction(0))

    def to_dict(self):
        """Serializable form with ``"num/den"`` coefficients"""

        return {'coeffs': [utils.rational_str(c) for c in self.coeffs]}

    def __str__(self):

        terms = []
        for sigma, c in enumerate(self.coeffs):
            if c:
                terms.append(f'({c})*[{sigma}]')

        return ' + '.join(terms) if terms else '0'


def mul(a, b):
    """
    Product in Q[G] (XOR convolution of the coefficient vectors)

    Parameters
    ----------
    a : GroupRingElem
        Left factor
    b : GroupRingElem
        Right factor

    Returns
    -------
    GroupRingElem
        The product ``a*b``

    """

    a._check_group(b) #pylint:disable=protected-access

    n = a.group.order
    out = [Fraction(0)] * n

    for x, ax in enumerate(a.coeffs):
        if not ax:
            continue
        for y, by in enumerate(b.coeffs):
            if by:
                out[x ^ y] += ax * by

    return GroupRingElem(a.group, out)


def _walsh_hadamard(values):
    """Unnormalized Walsh-Hadamard butterflies on a list of rationals"""

    v = list(values)
    n = len(v)
    h = 1

    while h < n:
        for start in range(0, n, 2 * h):
            for j in range(start, start + h):
                x, y = v[j], v[j + h]
                v[j], v[j + h] = x + y, x - y
        h *= 2

    return v


def character_transform(a):
    """
    Character coordinates of ``a``: entry ``chi`` is sum_sigma chi(sigma) a_sigma

    Parameters
    ----------
    a : GroupRingElem
        Group ring element

    Returns
    -------
    list of Fraction
        Values indexed by character mask

    """

    return _walsh_hadamard(a.coeffs)


def inverse_character_transform(group, values):
    """
    The element sum_chi values[chi] e_chi

    Parameters
    ----------
    group : ExpTwoGroup
        Underlying group
    values : sequence of rationals
        Character coordinates, indexed by character mask

    Returns
    -------
    GroupRingElem
        Element with the given character coordinates

    """

    if len(values) != group.order:
        raise ValueError(f'Expected {group.order} character values, got {len(values)}.')

    raw = _walsh_hadamard([Fraction(v) for v in values])

    return GroupRingElem(group, [c / group.order for c in raw])


def idempotent(group, chi):
    """
    The idempotent e_chi = (1/|G|) sum_sigma chi(sigma) sigma

    Parameters
    ----------
    group : ExpTwoGroup
        Underlying group
    chi : int
        Character mask

    Returns
    -------
    GroupRingElem
        The idempotent attached to ``chi``

    """

    if not group.contains(chi):
        raise ValueError(f'{chi} is not a character of a group of rank {group.rank}.')

    n = group.order

    return GroupRingElem(group,
            [Fraction(character_value(chi, sigma), n) for sigma in group.elements()])


def quotient_characters(group, kernel_generators):
    """
    Canonical basis of the characters trivial on the subgroup H

    Bit ``j`` of the image of ``sigma`` in G/H is chi_j(sigma) for the
    ``j``-th basis character.

    Parameters
    ----------
    group : ExpTwoGroup
        Ambient group
    kernel_generators : list of int
        Generators of H

    Returns
    -------
    list of int
        Character masks

    """

    subgroup = group.subgroup(kernel_generators)

    trivial_on_h = [chi for chi in group.characters()
                    if all(character_value(chi, h) == 1 for h in subgroup)]

    return f2_reduced_basis(trivial_on_h)


def quotient_map(group, kernel_generators):
    """
    The projection G -> G/H as a dict together with the quotient group

    """

    basis = quotient_characters(group, kernel_generators)
    quotient = ExpTwoGroup(len(basis))

    images = {}
    for sigma in group.elements():
        image = 0
        for j, chi in enumerate(basis):
            if character_value(chi, sigma) == -1:
                image |= 1 << j
        images[sigma] = image

    return images, quotient


def project_quotient(a, kernel_generators):
    """
    Image of ``a`` under Z[G] -> Z[G/H], summing coefficients over cosets of H

    Parameters
    ----------
    a : GroupRingElem
        Element of Q[G]
    kernel_generators : list of int
        Generators of H

    Returns
    -------
    GroupRingElem
        Element over the quotient group

    """

    images, quotient = quotient_map(a.group, kernel_generators)

    out = [Fraction(0)] * quotient.order
    for sigma, c in enumerate(a.coeffs):
        out[images[sigma]] += c

    return GroupRingElem(quotient, out)


def embed_subring(a, ambient, subgroup_generators):
    """
    Inclusion Z[H] -> Z[G], where bit ``j`` of H is ``subgroup_generators[j]``

    Parameters
    ----------
    a : GroupRingElem
        Element over H
    ambient : ExpTwoGroup
        The group G
    subgroup_generators : list of int
        Independent elements of G generating H

    Returns
    -------
    GroupRingElem
        The same element viewed in Q[G]

    """

    generators = list(subgroup_generators)

    if len(generators) != a.group.rank:
        raise ValueError(f'Expected {a.group.rank} subgroup generators, got {len(generators)}.')

    if len(ambient.subgroup(generators)) != a.group.order:
        raise ValueError('The subgroup generators are not independent; H is not a subgroup of that rank.')

    out = [Fraction(0)] * ambient.order
    for h, c in enumerate(a.coeffs):
        image = 0
        for j, g in enumerate(generators):
            if (h >> j) & 1:
                image ^= g
        out[image] += c

    return GroupRingElem(ambient, out)

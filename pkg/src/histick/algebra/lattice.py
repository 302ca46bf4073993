"""Exact Z-lattices inside Q^n kept in Hermite normal form

A lattice is (1/D) times the row span over Z of an integer matrix in
row-style Hermite normal form: upper echelon, positive pivots, entries
above each pivot reduced into [0, pivot).

"""

import math

from dataclasses import dataclass
from fractions import Fraction

import sympy

from sympy.matrices.normalforms import hermite_normal_form as column_hnf

from histick.algebra.groupring import GroupRingElem


class LatticeError(ValueError):
    """Raised on dimension mismatches and undefined indices"""


def _pivot(row):

    for j, a in enumerate(row):
        if a:
            return j

    raise LatticeError('Zero row in a Hermite normal form basis.')


def _canonical_rows(echelon):
    """Sort an echelon basis by pivot, make pivots positive, reduce above them"""

    rows = sorted((list(r) if r[_pivot(r)] > 0 else [-a for a in r] for r in echelon if any(r)),
                  key=_pivot)

    for i, row in enumerate(rows):

        p = _pivot(row)

        for h in range(i):
            q = rows[h][p] // row[p]
            if q:
                rows[h] = [a - q * b for a, b in zip(rows[h], row)]

    return [tuple(r) for r in rows]


def hermite_normal_form(rows, ncols):
    """
    Row-style Hermite normal form of an integer matrix

    sympy returns the column-style form with pivots found from the last
    row upwards, so the coordinates are mirrored on the way in and out.

    Parameters
    ----------
    rows : list of sequences of int
        Integer row vectors of length ``ncols``
    ncols : int
        Number of columns

    Returns
    -------
    hnf : list of tuple of int
        Nonzero rows of the canonical form

    """

    rows = [list(r) for r in rows if any(r)]

    if not rows:
        return []

    hnf = column_hnf(sympy.Matrix([r[::-1] for r in rows]).T)

    echelon = [[int(hnf[i, c]) for i in range(ncols - 1, -1, -1)]
               for c in range(hnf.cols - 1, -1, -1)]

    return _canonical_rows(echelon)


def integer_kernel(rows):
    """
    Basis of the left kernel {x in Z^k : x M = 0} of an integer matrix

    Parameters
    ----------
    rows : list of sequences of int
        The ``k`` rows of M

    Returns
    -------
    list of tuple of int
        Kernel basis vectors of length ``k``

    """

    if not rows:
        return []

    k = len(rows)
    n = len(rows[0])

    augmented = [list(r) + [1 if j == i else 0 for j in range(k)]
                 for i, r in enumerate(rows)]

    hnf = hermite_normal_form(augmented, n + k)

    return [row[n:] for row in hnf if not any(row[:n])]


@dataclass(frozen=True)
class LatticeComparison:
    """
    Outcome of ``compare(L1, L2)``

    ``relation`` is one of ``equal``, ``subset`` (L1 inside L2),
    ``superset`` (L2 inside L1) or ``incomparable``; ``index`` is the index
    of the smaller lattice in the larger one, or None when it is infinite
    or undefined.

    """

    relation: str
    index: int | None

    def to_dict(self):
        """Serializable form"""

        return {'relation': self.relation, 'index': self.index}


@dataclass(frozen=True)
class IntegerLattice:
    """
    The lattice (1/denominator) * rowspan_Z(basis) inside Q^ambient_dim

    Build instances with ``from_generators`` so that the stored form is
    canonical; two lattices are equal iff their dataclass fields are equal.

    """

    ambient_dim: int
    denominator: int
    basis: tuple

    @classmethod
    def canonical(cls, ambient_dim, denominator, rows):
        """
        Canonical lattice from integer rows and a common denominator

        """

        hnf = hermite_normal_form(rows, ambient_dim)

        if not hnf:
            return cls(ambient_dim, 1, ())

        content = 0
        for row in hnf:
            for a in row:
                content = math.gcd(content, a)

        g = math.gcd(denominator, content)

        return cls(ambient_dim, denominator // g,
                   tuple(tuple(a // g for a in row) for row in hnf))

    @property
    def rank(self):
        """Rank over Z"""

        return len(self.basis)

    @property
    def is_full_rank(self):
        """True if the rank equals the ambient dimension"""

        return self.rank == self.ambient_dim

    def vectors(self):
        """Basis vectors as tuples of Fractions"""

        return [tuple(Fraction(a, self.denominator) for a in row) for row in self.basis]

    def elements(self, group):
        """Basis vectors as group ring elements over ``group``"""

        if group.order != self.ambient_dim:
            raise LatticeError(f'A group of order {group.order} does not match ambient dimension {self.ambient_dim}.')

        return [GroupRingElem(group, v) for v in self.vectors()]

    def volume(self):
        """
        Covolume of a full-rank lattice (|det| of a basis)

        """

        if not self.is_full_rank:
            raise LatticeError('The covolume is only defined for full-rank lattices.')

        det = math.prod(row[_pivot(row)] for row in self.basis)

        return Fraction(det, self.denominator ** self.ambient_dim)

    def to_dict(self):
        """Serializable form ``{"denominator", "hnf", "rank"}``"""

        return {'denominator': self.denominator,
                'hnf': [list(row) for row in self.basis],
                'rank': self.rank}


def _as_vector(v):

    if isinstance(v, GroupRingElem):
        return v.coeffs

    return tuple(Fraction(x) for x in v)


def _check_dims(first, second):

    if first.ambient_dim != second.ambient_dim:
        raise LatticeError(f'Ambient dimensions differ: {first.ambient_dim} and {second.ambient_dim}.')


def _scaled_rows(lattice, denominator):

    factor = denominator // lattice.denominator

    return [[a * factor for a in row] for row in lattice.basis]


def from_generators(vectors, ambient_dim=None):
    """
    The Z-span of rational vectors (or group ring elements)

    Parameters
    ----------
    vectors : list of GroupRingElem | list of sequences of rationals
        Generators
    ambient_dim : int | None
        Required when ``vectors`` is empty

    Returns
    -------
    IntegerLattice
        Canonical lattice spanned by ``vectors``

    """

    vecs = [_as_vector(v) for v in vectors]

    if ambient_dim is None:

        if not vecs:
            raise LatticeError('Cannot infer the ambient dimension of an empty generator list.')

        ambient_dim = len(vecs[0])

    for v in vecs:
        if len(v) != ambient_dim:
            raise LatticeError(f'Generator of length {len(v)} in ambient dimension {ambient_dim}.')

    denominator = 1
    for v in vecs:
        for x in v:
            denominator = math.lcm(denominator, x.denominator)

    rows = [[int(x * denominator) for x in v] for v in vecs]

    return IntegerLattice.canonical(ambient_dim, denominator, rows)


def zero_lattice(ambient_dim):
    """The zero lattice"""

    return IntegerLattice(ambient_dim, 1, ())


def standard_lattice(ambient_dim):
    """Z^ambient_dim"""

    rows = [[1 if i == j else 0 for j in range(ambient_dim)] for i in range(ambient_dim)]

    return IntegerLattice.canonical(ambient_dim, 1, rows)


def lattice_sum(first, second):
    """
    Smallest lattice containing both arguments

    """

    _check_dims(first, second)

    denominator = math.lcm(first.denominator, second.denominator)
    rows = _scaled_rows(first, denominator) + _scaled_rows(second, denominator)

    return IntegerLattice.canonical(first.ambient_dim, denominator, rows)


def intersect(first, second):
    """
    Largest lattice contained in both arguments

    Computed from the integer left kernel of the stacked bases: if
    x A = y B then x A lies in both lattices.

    """

    _check_dims(first, second)

    if first.rank == 0 or second.rank == 0:
        return zero_lattice(first.ambient_dim)

    denominator = math.lcm(first.denominator, second.denominator)
    a_rows = _scaled_rows(first, denominator)
    b_rows = _scaled_rows(second, denominator)

    kernel = integer_kernel(a_rows + b_rows)

    n = first.ambient_dim
    generators = []
    for x in kernel:
        generators.append([sum(x[i] * a_rows[i][c] for i in range(len(a_rows)))
                           for c in range(n)])

    return IntegerLattice.canonical(n, denominator, generators)


def mul_by_ring_element(lattice, a):
    """
    The lattice generated by {v*a : v in basis}

    Parameters
    ----------
    lattice : IntegerLattice
        Lattice in Q[G]
    a : GroupRingElem
        Multiplier

    Returns
    -------
    IntegerLattice
        Product lattice

    """

    if a.group.order != lattice.ambient_dim:
        raise LatticeError(f'A group of order {a.group.order} does not match ambient dimension {lattice.ambient_dim}.')

    products = [v * a for v in lattice.elements(a.group)]

    return from_generators(products, ambient_dim=lattice.ambient_dim)


def scale(lattice, factor):
    """The lattice ``factor * lattice`` for a rational ``factor``"""

    factor = Fraction(factor)

    return from_generators([[factor * x for x in v] for v in lattice.vectors()],
                           ambient_dim=lattice.ambient_dim)


def coordinates(lattice, vector):
    """
    Integer coordinates of ``vector`` in the lattice basis

    Parameters
    ----------
    lattice : IntegerLattice
        Lattice
    vector : GroupRingElem | sequence of rationals
        Candidate element

    Returns
    -------
    list of int | None
        Coordinates, or None if ``vector`` is not in the lattice

    """

    v = _as_vector(vector)

    if len(v) != lattice.ambient_dim:
        raise LatticeError(f'Vector of length {len(v)} in ambient dimension {lattice.ambient_dim}.')

    scaled = [x * lattice.denominator for x in v]

    if any(s.denominator != 1 for s in scaled):
        return None

    w = [int(s) for s in scaled]
    coords = []

    for row in lattice.basis:

        p = _pivot(row)

        if any(w[:p]):
            return None

        c, r = divmod(w[p], row[p])

        if r:
            return None

        coords.append(c)

        if c:
            w = [a - c * b for a, b in zip(w, row)]

    if any(w):
        return None

    return coords


def contains_element(lattice, a):
    """
    Exact membership test

    """

    return coordinates(lattice, a) is not None


def is_sublattice(inner, outer):
    """True if every basis vector of ``inner`` lies in ``outer``"""

    _check_dims(inner, outer)

    return all(contains_element(outer, v) for v in inner.vectors())


def _containment_index(outer, inner):

    if inner.rank != outer.rank:
        return None

    if inner.rank == 0:
        return 1

    matrix = [coordinates(outer, v) for v in inner.vectors()]

    return abs(int(sympy.Matrix(matrix).det()))


def compare(first, second):
    """
    Decide containment between two lattices and report the index

    Parameters
    ----------
    first : IntegerLattice
        L1
    second : IntegerLattice
        L2

    Returns
    -------
    LatticeComparison
        ``subset`` means L1 is a proper sublattice of L2

    """

    _check_dims(first, second)

    below = is_sublattice(first, second)
    above = is_sublattice(second, first)

    if below and above:
        return LatticeComparison('equal', 1)

    if below:
        return LatticeComparison('subset', _containment_index(second, first))

    if above:
        return LatticeComparison('superset', _containment_index(first, second))

    return LatticeComparison('incomparable', None)


def index(outer, inner):
    """
    The index (outer : inner)

    Defined when ``inner`` is an equal-rank sublattice of ``outer`` (an
    integer), or when both are full rank (the ratio of covolumes, a
    rational number that need not be an integer).

    """

    comparison = compare(inner, outer)

    if comparison.relation in ('equal', 'subset') and comparison.index is not None:
        return comparison.index

    if outer.is_full_rank and inner.is_full_rank:
        return inner.volume() / outer.volume()

    raise LatticeError('The index is only defined for equal-rank containments or full-rank pairs.')


def rational_gcd(values):
    """
    Nonnegative generator of the Z-module spanned by rationals

    """

    values = [Fraction(v) for v in values]

    denominator = 1
    for v in values:
        denominator = math.lcm(denominator, v.denominator)

    g = 0
    for v in values:
        g = math.gcd(g, int(v * denominator))

    return Fraction(g, denominator)

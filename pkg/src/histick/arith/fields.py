"""Arithmetic of real multi-quadratic fields Q(sqrt(d_1), ..., sqrt(d_m))

The field is described by its generator list; bit ``i`` of a group element
records whether it moves sqrt(d_i). The character with mask ``b`` is the
one whose fixed field is Q(sqrt(d_b)), d_b being the squarefree kernel of
the product of the d_i with ``i`` in ``b``.

"""

import math
import functools

from dataclasses import dataclass
from fractions import Fraction

import sympy

from histick.algebra.groupring import ExpTwoGroup, MAX_RANK, character_value
from histick.general import utils

W2_RATIONALS = 24


class FieldError(ValueError):
    """Raised on invalid field descriptions, ramified primes and invalid S"""


def squarefree_kernel(n):
    """
    Squarefree integer in the square class of a nonzero rational

    Parameters
    ----------
    n : int | Fraction
        Nonzero rational number

    Returns
    -------
    int
        The signed squarefree kernel

    """

    n = Fraction(n)

    if n == 0:
        raise ValueError('The squarefree kernel of 0 is undefined.')

    value = abs(n.numerator * n.denominator)
    kernel = math.prod(p for p, e in sympy.factorint(value).items() if e % 2)

    return kernel if n > 0 else -kernel


def fundamental_discriminant(d):
    """Discriminant of Q(sqrt(d)) for squarefree ``d``: d or 4d"""

    return d if d % 4 == 1 else 4 * d


def kronecker(a, n):
    """
    The Kronecker symbol (a|n)

    Parameters
    ----------
    a : int
        Numerator
    n : int
        Denominator

    Returns
    -------
    int
        -1, 0 or 1

    """

    if n == 0:
        return 1 if a in (1, -1) else 0

    result = 1

    if n < 0:
        n = -n
        if a < 0:
            result = -result

    while n % 2 == 0:

        n //= 2

        if a % 2 == 0:
            return 0

        if a % 8 in (3, 5):
            result = -result

    if n == 1:
        return result

    return result * int(sympy.jacobi_symbol(a % n, n))


@functools.lru_cache(maxsize=16)
def primes_up_to(bound):
    """Tuple of the primes p <= bound, shared between callers"""

    return tuple(int(p) for p in sympy.primerange(2, bound + 1))


@dataclass(frozen=True)
class PlaceSet:
    """
    A finite set S of rational primes; the infinite place is implicit

    """

    finite_primes: tuple = ()

    def __post_init__(self):

        primes = tuple(sorted(set(int(p) for p in self.finite_primes)))

        for p in primes:
            if not sympy.isprime(p):
                raise FieldError(f'{p} is not a prime and cannot be a place of S.')

        object.__setattr__(self, 'finite_primes', primes)

    @classmethod
    def from_spec(cls, spec):
        """
        Parse an S spec string such as ``"2,5"`` (empty for S = {inf})

        """

        return cls(tuple(utils.parse_int_list(spec)) if spec else ())

    @property
    def size(self):
        """|S|, counting the infinite place"""

        return 1 + len(self.finite_primes)

    @property
    def spec(self):
        """The spec string"""

        return utils.format_int_list(self.finite_primes)

    def with_primes(self, primes):
        """A larger place set containing ``primes``"""

        return PlaceSet(self.finite_primes + tuple(primes))

    def to_dict(self):
        """Serializable form"""

        return {'finite_primes': list(self.finite_primes), 'size': self.size}


@dataclass(frozen=True)
class QuadraticSubfieldData:
    """
    The quadratic subfield E_chi = Q(sqrt(d)) attached to a character

    ``w2_minus`` is the order of the minus part of W_2(E_chi), and
    ``delta`` is 1 exactly when E_chi = Q(sqrt(2)).

    """

    chi: int
    d: int
    disc: int
    is_first_layer: bool
    w2: int
    w2_minus: int
    delta: int

    def to_dict(self):
        """Serializable form"""

        return {'chi': self.chi, 'd': self.d, 'disc': self.disc,
                'is_first_layer': self.is_first_layer, 'w2': self.w2,
                'w2_minus': self.w2_minus, 'delta': self.delta}


@dataclass(frozen=True)
class MultiQuadField:
    """
    Validated description of E = Q(sqrt(d_1), ..., sqrt(d_m))

    Build instances with ``build_field``.

    """

    generators: tuple

    @functools.cached_property
    def group(self):
        """Gal(E/Q) as an ExpTwoGroup"""

        return ExpTwoGroup(len(self.generators))

    @property
    def rank(self):
        """m = number of generators"""

        return len(self.generators)

    @functools.cached_property
    def subfield_ds(self):
        """Map from nonzero character mask b to the squarefree d_b"""

        ds = {}
        for b in range(1, self.group.order):
            product = math.prod(d for i, d in enumerate(self.generators) if (b >> i) & 1)
            ds[b] = squarefree_kernel(product)

        return ds

    def subfield_d(self, chi):
        """d_b for the character ``chi``; 1 for the trivial character"""

        if chi == 0:
            return 1

        if not self.group.contains(chi):
            raise FieldError(f'{chi} is not a character of a field of rank {self.rank}.')

        return self.subfield_ds[chi]

    def subfield_disc(self, chi):
        """Fundamental discriminant of E_chi (1 for the trivial character)"""

        return fundamental_discriminant(self.subfield_d(chi))

    def chi_of_subfield(self, d):
        """The character whose fixed field is Q(sqrt(d)), or None"""

        for chi, d_chi in self.subfield_ds.items():
            if d_chi == d:
                return chi

        return None

    @property
    def first_layer_chi(self):
        """The character of Q(sqrt(2)) when it lies in E, else None"""

        return self.chi_of_subfield(2)

    @functools.cached_property
    def ramified_primes(self):
        """Sorted tuple of the rational primes ramified in E"""

        primes = set()
        for d in self.subfield_ds.values():
            primes.update(int(p) for p in sympy.primefactors(fundamental_discriminant(d)))

        return tuple(sorted(primes))

    @property
    def spec(self):
        """The field spec string"""

        return utils.format_int_list(self.generators)

    def to_dict(self):
        """Serializable form"""

        return {'generators': list(self.generators),
                'rank': self.rank,
                'subfields': {str(chi): d for chi, d in self.subfield_ds.items()},
                'ramified_primes': list(self.ramified_primes)}


def build_field(generators):
    """
    Validate a generator list and build the field

    Parameters
    ----------
    generators : list of int | str
        The d_i, or a spec string such as ``"2,5"``

    Returns
    -------
    MultiQuadField
        The validated field

    """

    if isinstance(generators, str):
        generators = utils.parse_int_list(generators) if generators.strip() else []

    generators = [int(d) for d in generators]

    if len(generators) > MAX_RANK:
        raise FieldError(f'At most {MAX_RANK} generators are supported.')

    kernels = []
    for d in generators:

        if d <= 0:
            raise FieldError(f'Q(sqrt({d})) is not totally real.')

        kernel = squarefree_kernel(d)

        if kernel == 1:
            raise FieldError(f'{d} is a square and does not generate a quadratic field.')

        kernels.append(kernel)

    field = MultiQuadField(tuple(kernels))

    for b, d_b in field.subfield_ds.items():
        if d_b == 1:
            used = [generators[i] for i in range(len(generators)) if (b >> i) & 1]
            raise FieldError(f'The generators {used} are dependent: their product is a square.')

    return field


def w2_from_subfields(ds):
    """w_2 of a multi-quadratic field with the given quadratic subfields"""

    ds = set(ds)

    return W2_RATIONALS * (2 if 2 in ds else 1) * (5 if 5 in ds else 1)


def w2(field):
    """
    The order w_2(E) of W_2(E)

    For multi-quadratic E this is 24, doubled when sqrt(2) lies in E and
    multiplied by 5 when sqrt(5) does.

    """

    return w2_from_subfields(field.subfield_ds.values())


def w2_minus(d):
    """
    (w_2(E_chi)^-, delta) for the quadratic field Q(sqrt(d))

    """

    delta = 1 if d == 2 else 2
    value, remainder = divmod(w2_from_subfields([d]) * delta, W2_RATIONALS)

    if remainder or value % 4 != 2:
        raise ArithmeticError(f'w2 minus part {value} of Q(sqrt({d})) is not 2 mod 4.')

    return value, delta


def subfield_data(field, chi):
    """
    Data of the quadratic subfield fixed by ker(chi)

    Parameters
    ----------
    field : MultiQuadField
        The field E
    chi : int
        Nontrivial character mask

    Returns
    -------
    QuadraticSubfieldData
        Invariants of E_chi

    """

    if chi == 0:
        raise FieldError('The trivial character has no quadratic subfield.')

    d = field.subfield_d(chi)
    minus, delta = w2_minus(d)

    return QuadraticSubfieldData(
            chi=chi,
            d=d,
            disc=fundamental_discriminant(d),
            is_first_layer=d == 2,
            w2=w2_from_subfields([d]),
            w2_minus=minus,
            delta=delta)


def artin_symbol(field, q):
    """
    Frobenius sigma_q as a group element bitmask

    Bit ``i`` is set iff (disc(d_i)|q) = -1.

    """

    if q in field.ramified_primes:
        raise FieldError(f'{q} is ramified in Q({field.spec}).')

    sigma = 0
    for i, d in enumerate(field.generators):
        if kronecker(fundamental_discriminant(d), q) == -1:
            sigma |= 1 << i

    return sigma


def frobenius_consistent(field, q):
    """Check chi(sigma_q) = (disc(E_chi)|q) for every nontrivial chi"""

    sigma = artin_symbol(field, q)

    return all(character_value(chi, sigma) == kronecker(field.subfield_disc(chi), q)
               for chi in field.subfield_ds)


def validate_place_set(field, s):
    """
    Raise FieldError if S misses a ramified prime of E

    """

    missing = [p for p in field.ramified_primes if p not in s.finite_primes]

    if missing:
        raise FieldError(f'S = {{inf,{s.spec}}} misses the ramified primes {missing} of Q({field.spec}).')


def complete_place_set(field, s):
    """
    Add the missing ramified primes of E to S

    Returns
    -------
    completed : PlaceSet
        S together with the ramified primes
    added : list of int
        Primes that had to be added

    """

    added = [p for p in field.ramified_primes if p not in s.finite_primes]

    return s.with_primes(added), added


def places_above(field, s):
    """
    Number of places of E above S

    The real places contribute 2^m. Above a finite p the number of primes
    equals the number of characters trivial on the decomposition group,
    which is 1 + #{b != 0 : (disc(d_b)|p) = 1}. For a quadratic field this
    gives 2 + sum (2 if split else 1) and for Q it gives |S|.

    """

    validate_place_set(field, s)

    count = field.group.order

    for p in s.finite_primes:
        count += 1 + sum(1 for chi in field.subfield_ds
                         if kronecker(field.subfield_disc(chi), p) == 1)

    return count


@dataclass(frozen=True)
class SquareClass:
    """Outcome of ``square_class_test``"""

    value: Fraction
    kernel: int
    is_square: bool
    chi: int | None

    def to_dict(self):
        """Serializable form"""

        return {'value': utils.rational_str(self.value), 'kernel': self.kernel,
                'is_square': self.is_square, 'chi': self.chi}


def square_class_test(field, a):
    """
    Decide whether a nonzero rational is a square in E

    ``a`` is a square in E iff its squarefree kernel is 1 or one of the d_b;
    ``chi`` names the subfield Q(sqrt(d_b)) in the second case.

    """

    a = Fraction(a)

    if a == 0:
        raise FieldError('0 has no square class.')

    kernel = squarefree_kernel(a)

    if kernel == 1:
        return SquareClass(a, kernel, True, 0)

    chi = field.chi_of_subfield(kernel)

    return SquareClass(a, kernel, chi is not None, chi)


@dataclass(frozen=True)
class NormWitness:
    """x + y sqrt(d) with x^2 - d y^2 = r"""

    d: int
    r: int
    x: int
    y: int

    @property
    def norm(self):
        """x^2 - d y^2"""

        return self.x * self.x - self.d * self.y * self.y

    def is_valid(self):
        """Recompute the norm"""

        return self.norm == self.r

    def to_dict(self):
        """Serializable form"""

        return {'d': self.d, 'r': self.r, 'x': self.x, 'y': self.y}


def norm_form_solve(d, r, bound):
    """
    Bounded search for x^2 - d y^2 = r with 0 <= y <= bound

    Parameters
    ----------
    d : int
        Squarefree d > 1
    r : int
        Target norm
    bound : int
        Largest y tried

    Returns
    -------
    NormWitness | None
        The witness with the smallest y, or None if none is found

    """

    if d <= 1 or squarefree_kernel(d) != d:
        raise FieldError(f'{d} is not a squarefree integer greater than 1.')

    for y in range(bound + 1):

        t = r + d * y * y

        if t < 0:
            continue

        x = math.isqrt(t)

        if x * x == t:
            return NormWitness(d, r, x, y)

    return None

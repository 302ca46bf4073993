"""Exact values at s = -1 and the tame kernel orders predicted from them

Dirichlet L-values come from generalized Bernoulli numbers,
L(-1, chi_D) = -B_{2,chi}/2 with B_{2,chi} = f sum_{a=1}^{f} chi(a) B_2(a/f).
Predicted orders follow the Birch-Tate formula
zeta_L^S(-1) = (-1)^{|S_L|} k_2^S(L) / w_2(L); a sign or integrality
violation is raised as a FalsificationError, never corrected.

"""

import math
import functools

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from histick.algebra.groupring import ExpTwoGroup, inverse_character_transform
from histick.arith import fields
from histick.general import utils


class FalsificationError(ArithmeticError):
    """A predicted order has the wrong sign or is not an integer"""


def bernoulli_B2_poly(x):
    """B_2(x) = x^2 - x + 1/6"""

    x = Fraction(x)

    return x * x - x + Fraction(1, 6)


def is_fundamental_discriminant(disc):
    """True for 1 and the discriminants of real quadratic fields"""

    if disc == 1:
        return True

    if disc <= 1:
        return False

    if disc % 4 == 1:
        return fields.squarefree_kernel(disc) == disc

    if disc % 4 == 0:
        d = disc // 4
        return d % 4 in (2, 3) and fields.squarefree_kernel(d) == d

    return False


@functools.lru_cache(maxsize=None)
def dirichlet_L_minus1(disc):
    """
    L(-1, chi_disc) for the even quadratic character of conductor ``disc``

    Parameters
    ----------
    disc : int
        1 or a positive fundamental discriminant

    Returns
    -------
    Fraction
        Exact value; -1/12 for ``disc = 1``

    """

    if not is_fundamental_discriminant(disc):
        raise ValueError(f'{disc} is not 1 or a positive fundamental discriminant.')

    f = disc
    b2_chi = f * sum(fields.kronecker(disc, a) * bernoulli_B2_poly(Fraction(a, f))
                     for a in range(1, f + 1))

    return -b2_chi / 2


def euler_multiplier(disc, p):
    """The factor 1 - chi(p) p removed at p; chi(p) = 0 when p ramifies"""

    return 1 - fields.kronecker(disc, p) * p


@dataclass(frozen=True)
class LValueRecord:
    """L(-1, chi) with and without the Euler factors at S"""

    chi: int
    disc: int
    raw_L: Fraction
    euler_factors: tuple
    adjusted_L: Fraction

    def to_dict(self):
        """Serializable form"""

        return {'chi': self.chi,
                'disc': self.disc,
                'raw_L': utils.rational_str(self.raw_L),
                'euler_factors': [[p, m] for p, m in self.euler_factors],
                'adjusted_L': utils.rational_str(self.adjusted_L)}


def l_value_record(disc, s, chi=0):
    """LValueRecord for one character of conductor ``disc``"""

    raw = dirichlet_L_minus1(disc)
    factors = tuple((p, euler_multiplier(disc, p)) for p in s.finite_primes)

    return LValueRecord(chi=chi, disc=disc, raw_L=raw, euler_factors=factors,
                        adjusted_L=raw * math.prod(m for _, m in factors))


def l_value_records(field, s):
    """
    L^S(-1, chi) for every character of Gal(E/Q), trivial one first

    """

    fields.validate_place_set(field, s)

    return [l_value_record(field.subfield_disc(chi), s, chi)
            for chi in field.group.characters()]


def zeta_S_minus1(field, s):
    """
    zeta_E^S(-1) as the product of the L^S(-1, chi)

    """

    return math.prod((rec.adjusted_L for rec in l_value_records(field, s)), start=Fraction(1))


def theta_minus1(field, s):
    """
    The Stickelberger element theta^S(-1) = sum_chi L^S(-1, chi) e_chi

    Parameters
    ----------
    field : MultiQuadField
        The field E
    s : PlaceSet
        S, containing the ramified primes of E

    Returns
    -------
    GroupRingElem
        theta^S(-1) in Q[G]

    """

    records = l_value_records(field, s)

    return inverse_character_transform(field.group, [rec.adjusted_L for rec in records])


def predicted_k2(w2_value, zeta, places, label):
    """
    k_2^S(L) = w_2(L) |zeta_L^S(-1)| with the sign and integrality checked

    Parameters
    ----------
    w2_value : int
        w_2(L)
    zeta : Fraction
        zeta_L^S(-1)
    places : int
        |S_L|
    label : str
        Name of L used in error messages

    Returns
    -------
    int
        The predicted order

    """

    expected_sign = -1 if places % 2 else 1

    if zeta == 0 or (1 if zeta > 0 else -1) != expected_sign:
        raise FalsificationError(f'zeta^S(-1) = {zeta} of {label} does not have sign (-1)^{places}.')

    order = w2_value * abs(zeta)

    if order.denominator != 1:
        raise FalsificationError(f'Predicted order {order} of K_2 for {label} is not an integer.')

    return int(order)


@dataclass(frozen=True)
class BTOrders:
    """
    Birch-Tate predicted orders for Q, for E and for each E_chi

    ``k2_minus[chi] = delta_chi k2_Echi[chi] / k2_F``.

    """

    k2_F: int
    k2_E: int
    zeta_F: Fraction
    zeta_E: Fraction
    k2_Echi: dict = dataclass_field(default_factory=dict)
    k2_minus: dict = dataclass_field(default_factory=dict)
    zeta_Echi: dict = dataclass_field(default_factory=dict)
    places: dict = dataclass_field(default_factory=dict)
    theta: object = None

    def to_dict(self):
        """Serializable form; every value is labelled as a prediction"""

        return {'predicted': True,
                'k2_F': self.k2_F,
                'k2_E': self.k2_E,
                'zeta_F': utils.rational_str(self.zeta_F),
                'zeta_E': utils.rational_str(self.zeta_E),
                'k2_Echi': {str(k): v for k, v in self.k2_Echi.items()},
                'k2_minus': {str(k): v for k, v in self.k2_minus.items()},
                'zeta_Echi': {str(k): utils.rational_str(v) for k, v in self.zeta_Echi.items()},
                'places': {str(k): v for k, v in self.places.items()},
                'theta': self.theta.to_dict() if self.theta is not None else None}


def bt_orders(field, s):
    """
    Predicted orders of K_2 of the S-integers of Q, E and every E_chi

    Raises
    ------
    FalsificationError
        If a zeta value has the wrong sign or an order is not integral

    """

    records = l_value_records(field, s)

    zeta_F = records[0].adjusted_L
    k2_F = predicted_k2(fields.W2_RATIONALS, zeta_F, s.size, 'Q')

    k2_Echi, k2_minus, zeta_Echi, places = {}, {}, {}, {0: s.size}

    for rec in records[1:]:

        data = fields.subfield_data(field, rec.chi)
        quadratic = fields.build_field([data.d])

        zeta = zeta_F * rec.adjusted_L
        n_places = fields.places_above(quadratic, s)

        k2 = predicted_k2(data.w2, zeta, n_places, f'Q(sqrt({data.d}))')
        minus = Fraction(data.delta * k2, k2_F)

        if minus.denominator != 1:
            raise FalsificationError(f'delta k_2^S(Q(sqrt({data.d}))) / k_2^S(Q) = {minus} is not an integer.')

        k2_Echi[rec.chi] = k2
        k2_minus[rec.chi] = int(minus)
        zeta_Echi[rec.chi] = zeta
        places[rec.chi] = n_places

    zeta_E = math.prod((rec.adjusted_L for rec in records), start=Fraction(1))
    places['E'] = fields.places_above(field, s)

    k2_E = predicted_k2(fields.w2(field), zeta_E, places['E'], f'Q({field.spec})')

    return BTOrders(k2_F=k2_F, k2_E=k2_E, zeta_F=zeta_F, zeta_E=zeta_E,
                    k2_Echi=k2_Echi, k2_minus=k2_minus, zeta_Echi=zeta_Echi,
                    places=places, theta=theta_minus1(field, s))


def theta_relative(field, base_chi, s):
    """
    theta^S(-1) of E over the quadratic base E' = E_{base_chi}

    The result lives in Q[Gal(E/E')] with Gal(E/E') of order 2 and has
    character coordinates (zeta_{E'}^S(-1), zeta_E^S(-1) / zeta_{E'}^S(-1)).
    For m = 1 and the trivial base this is theta^S(-1) itself.

    """

    if field.rank == 1 and base_chi == 0:
        base_zeta = zeta_S_minus1(fields.build_field([]), s)

    elif field.rank == 2 and base_chi != 0:
        base_zeta = zeta_S_minus1(fields.build_field([field.subfield_d(base_chi)]), s)

    else:
        raise fields.FieldError('The relative theta element needs a base of index 2 in E.')

    top_zeta = zeta_S_minus1(field, s)

    return inverse_character_transform(ExpTwoGroup(1), [base_zeta, top_zeta / base_zeta])


@dataclass(frozen=True)
class IdentitySides:
    """Two exact sides of a claimed identity"""

    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self):
        """True if both sides agree"""

        return self.lhs == self.rhs


def k2_quotient_identity(field, s, orders=None):
    """
    Compare (k_2(E)/k_2(F)) / (w_2(E)/w_2(F)) with the product over chi != 1
    of (k_2(E_chi)/k_2(F)) / (w_2(E_chi)/w_2(F))

    """

    if orders is None:
        orders = bt_orders(field, s)

    w2_F = fields.W2_RATIONALS

    lhs = Fraction(orders.k2_E, orders.k2_F) / Fraction(fields.w2(field), w2_F)

    rhs = Fraction(1)
    for chi, k2 in orders.k2_Echi.items():
        w2_chi = fields.w2_from_subfields([field.subfield_d(chi)])
        rhs *= Fraction(k2, orders.k2_F) / Fraction(w2_chi, w2_F)

    return IdentitySides(lhs, rhs)

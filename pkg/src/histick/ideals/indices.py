"""Indices between R, S, Stick and Stick S and the identities they satisfy"""

import math

from dataclasses import dataclass
from fractions import Fraction

from histick.algebra import lattice as lat
from histick.arith import lvalues
from histick.general import utils


def maximal_order_index(rank):
    """(S : R) = 2^(m 2^(m-1)); 1 for m = 0"""

    return 2 ** (rank * (1 << rank) // 2)


def two_power_exponent(rank):
    """Exponent e in (R : Stick) = |K_2| (Stick S : Stick) / (delta 2^e)"""

    return ((rank - 2) * (1 << rank)) // 2 + 1


@dataclass(frozen=True)
class IndexReport:
    """
    Indices of the ideal lattices of one (E, S) pair

    ``checks`` maps an identity name to its two exact sides.

    """

    S_R: int
    stick_S_stick: int
    R_stick: int
    S_stick_S: int
    k2_E: int
    delta_E: int
    checks: dict

    def failed(self):
        """Names of the identities whose sides differ"""

        return [name for name, sides in self.checks.items() if not sides.holds]

    def to_dict(self):
        """Serializable form"""

        return {'S:R': self.S_R,
                'StickS:Stick': self.stick_S_stick,
                'R:Stick': self.R_stick,
                'S:StickS': self.S_stick_S,
                'k2_E_predicted': self.k2_E,
                'delta_E': self.delta_E,
                'checks': {name: {'lhs': utils.rational_str(sides.lhs),
                                  'rhs': utils.rational_str(sides.rhs),
                                  'holds': sides.holds}
                           for name, sides in self.checks.items()}}


def index_report(stick_bundle):
    """
    Compute (S:R), (Stick S:Stick), (R:Stick), (S:Stick S) and check the
    identities relating them to the predicted |K_2(O_E^S)|

    Raises
    ------
    LatticeError
        If one of the lattices is not full rank

    """

    field, orders = stick_bundle.field, stick_bundle.orders
    m = field.rank

    S_R = lat.index(stick_bundle.maximal_order, stick_bundle.R)
    stick_S_stick = lat.index(stick_bundle.stick_S, stick_bundle.stick)
    R_stick = lat.index(stick_bundle.R, stick_bundle.stick)
    S_stick_S = lat.index(stick_bundle.maximal_order, stick_bundle.stick_S)

    delta_E = 2 if field.first_layer_chi is not None else 1
    e = two_power_exponent(m)
    sides = lvalues.IdentitySides

    checks = {
            'maximal-order-index': sides(S_R, maximal_order_index(m)),
            'group-ring-index-formula': sides(
                R_stick, Fraction(orders.k2_E * stick_S_stick, delta_E * 2 ** e)),
            'index-chain': sides(S_R * R_stick, S_stick_S * stick_S_stick),
            'maximal-order-stick-index': sides(
                S_stick_S, orders.k2_F * math.prod(orders.k2_minus.values())),
            'maximal-order-stick-k2': sides(
                S_stick_S, Fraction(2 ** ((1 << m) - 1) * orders.k2_E, delta_E)),
            }

    if m == 2:
        checks['group-ring-index-k2'] = sides(R_stick, orders.k2_E)

    return IndexReport(S_R=S_R, stick_S_stick=stick_S_stick, R_stick=R_stick,
                       S_stick_S=S_stick_S, k2_E=orders.k2_E, delta_E=delta_E,
                       checks=checks)

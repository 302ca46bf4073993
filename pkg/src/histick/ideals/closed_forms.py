"""Explicit Z-bases of Ann(W_2) and Stick for biquadratic fields

Both ideals have the same shape; only the diagonal values change
(w_2 data for the annihilator, predicted k_2 data for Stick). When
sqrt(2) lies in E the character of Q(sqrt(2)) plays the role of chi_1 and
the remaining two characters are taken in increasing mask order.

"""

from histick.algebra import lattice as lat
from histick.algebra.groupring import idempotent
from histick.arith import fields


def biquadratic_labels(field):
    """
    Characters (chi_1, chi_2, chi_3) of a biquadratic field

    chi_1 belongs to Q(sqrt(2)) when sqrt(2) lies in E.

    """

    if field.rank != 2:
        raise fields.FieldError(f'Closed forms need a biquadratic field, got rank {field.rank}.')

    first = field.first_layer_chi

    if first is None:
        return (1, 2, 3)

    others = [chi for chi in (1, 2, 3) if chi != first]

    return (first, others[0], others[1])


def closed_form_lattice(field, trivial_value, values):
    """
    The lattice of the closed-form shape with the given diagonal data

    Parameters
    ----------
    field : MultiQuadField
        Biquadratic field
    trivial_value : int
        Coefficient of e_0
    values : dict
        Coefficient of e_chi for each nontrivial chi

    Returns
    -------
    IntegerLattice
        Without sqrt(2): Z a e_0 and the three pairwise sums b_i e_i + b_j e_j.
        With sqrt(2): a e_0 + b_1 e_1 + b_2 e_2, b_2 e_2 + b_3 e_3, 2a e_0
        and 2 b_1 e_1.

    """

    group = field.group
    chi1, chi2, chi3 = biquadratic_labels(field)

    f0 = idempotent(group, 0) * trivial_value
    f1 = idempotent(group, chi1) * values[chi1]
    f2 = idempotent(group, chi2) * values[chi2]
    f3 = idempotent(group, chi3) * values[chi3]

    if field.first_layer_chi is None:
        generators = [f0, f1 + f2, f1 + f3, f2 + f3]

    else:
        generators = [f0 + f1 + f2, f2 + f3, f0 * 2, f1 * 2]

    return lat.from_generators(generators, ambient_dim=group.order)


def ann_closed_biquadratic(field):
    """
    Closed-form Ann_{Z[G]}(W_2(E)) built from w_2(Q) and the w_2(E_chi)^-

    """

    values = {chi: fields.subfield_data(field, chi).w2_minus for chi in biquadratic_labels(field)}

    return closed_form_lattice(field, fields.W2_RATIONALS, values)


def stick_closed_biquadratic(field, orders):
    """
    Closed-form Stick built from the predicted k_2^S(Q) and k_2^S(E_chi)^-

    Parameters
    ----------
    field : MultiQuadField
        Biquadratic field
    orders : BTOrders
        Predicted orders for the same S

    """

    return closed_form_lattice(field, orders.k2_F, orders.k2_minus)


def expected_closed_form_index(field):
    """Index of the closed forms in their S-extension: 2 without sqrt(2), else 4"""

    return 2 if field.first_layer_chi is None else 4

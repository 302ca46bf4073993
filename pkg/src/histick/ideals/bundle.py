"""Annihilator of W_2(E), the higher Stickelberger ideal and their S-extensions

The annihilator is the Z[G]-ideal generated by sigma_q - q^2 over the
primes q not dividing w_2(E) or the discriminant; it is read off a stream
of primes until the Hermite normal form stops changing.

"""

import functools

from dataclasses import dataclass

import sympy

from histick.algebra import lattice as lat
from histick.algebra.groupring import GroupRingElem, character_transform, idempotent
from histick.arith import fields
from histick.arith import lvalues


class UnstableAnnihilatorError(RuntimeError):
    """The annihilator lattice did not stabilize below the prime bound"""


@dataclass(frozen=True)
class StabilizationCertificate:
    """
    How the prime stream settled

    ``primes_since_change`` counts admissible primes after the last prime
    that enlarged the lattice; the lattice is ``stable`` once this reaches
    ``window``.

    """

    prime_bound: int
    window: int
    primes_used: tuple
    last_change: int | None
    primes_since_change: int

    @property
    def stable(self):
        """True if the window was exhausted without a change"""

        return self.last_change is not None and self.primes_since_change >= self.window

    def to_dict(self):
        """Serializable form"""

        return {'prime_bound': self.prime_bound,
                'window': self.window,
                'primes_used': len(self.primes_used),
                'last_change': self.last_change,
                'primes_since_change': self.primes_since_change,
                'stable': self.stable}


def stabilized_ideal(group, stream, prime_bound, window):
    """
    Z[G]-ideal generated by a stream of (q, element) pairs

    An element already in the current ideal leaves it unchanged, so only
    new elements trigger a Hermite normal form update.

    Parameters
    ----------
    group : ExpTwoGroup
        The group G
    stream : iterable of (int, GroupRingElem)
        Prime and generator, in increasing prime order
    prime_bound : int
        Recorded in the certificate
    window : int
        Number of consecutive non-changing primes needed for stability

    Returns
    -------
    ideal : IntegerLattice
        The ideal generated by the stream
    certificate : StabilizationCertificate
        Stabilization data

    """

    ideal = lat.zero_lattice(group.order)
    used = []
    last_change = None
    since_change = 0

    for q, element in stream:

        used.append(q)

        if lat.contains_element(ideal, element):
            since_change += 1
            continue

        translates = [GroupRingElem.basis(group, g) * element for g in group.elements()]
        ideal = lat.lattice_sum(ideal, lat.from_generators(translates, ambient_dim=group.order))

        last_change = q
        since_change = 0

    certificate = StabilizationCertificate(prime_bound=prime_bound, window=window,
                                           primes_used=tuple(used), last_change=last_change,
                                           primes_since_change=since_change)

    return ideal, certificate


def admissible_primes(field, prime_bound):
    """Primes q <= prime_bound with q not dividing w_2(E) disc(E)"""

    excluded = set(sympy.primefactors(fields.w2(field))) | set(field.ramified_primes)

    return [q for q in fields.primes_up_to(prime_bound) if q not in excluded]


@functools.lru_cache(maxsize=64)
def ann_w2_generators(field, prime_bound, window=25):
    """
    Ann_{Z[G]}(W_2(E)) from the elements sigma_q - q^2

    Does not depend on S, so results are cached per field.

    Parameters
    ----------
    field : MultiQuadField
        The field E
    prime_bound : int
        Largest prime used
    window : int
        Stabilization window

    Returns
    -------
    ann : IntegerLattice
        The annihilator lattice
    certificate : StabilizationCertificate
        Stabilization data

    """

    if prime_bound < 2:
        raise ValueError('"prime_bound" must be at least 2.')

    if window < 1:
        raise ValueError('"stabilization_window" must be at least 1.')

    group = field.group

    def stream():
        for q in admissible_primes(field, prime_bound):
            sigma = fields.artin_symbol(field, q)
            yield q, GroupRingElem.basis(group, sigma) - GroupRingElem.scalar(group, q * q)

    return stabilized_ideal(group, stream(), prime_bound, window)


def group_ring_lattice(group):
    """R = Z[G]"""

    return lat.standard_lattice(group.order)


def maximal_order(group):
    """The maximal order of Q[G]: the Z-span of the idempotents"""

    return lat.from_generators([idempotent(group, chi) for chi in group.characters()],
                               ambient_dim=group.order)


def diagonal_lattice(group, entries):
    """The S-module sum_chi Z entries[chi] e_chi"""

    return lat.from_generators([idempotent(group, chi) * entries[chi] for chi in group.characters()],
                               ambient_dim=group.order)


def extend_to_maximal_order(lattice, group):
    """
    L S = sum_chi L e_chi, the smallest S-module containing L

    """

    generators = [v * idempotent(group, chi)
                  for v in lattice.elements(group)
                  for chi in group.characters()]

    return lat.from_generators(generators, ambient_dim=group.order)


def character_diagonal(lattice, group):
    """
    Nonnegative generators of the character projections of ``lattice``

    For an S-module these are its diagonal entries in the basis e_chi.

    """

    transforms = [character_transform(v) for v in lattice.elements(group)]

    diagonal = []
    for chi in group.characters():
        diagonal.append(lat.rational_gcd(t[chi] for t in transforms))

    return diagonal


@dataclass(frozen=True)
class IdealBundle:
    """
    All lattices attached to (E, S)

    ``fit_S_predicted`` is sum Z k_2^S(Q) e_0 + sum_chi Z k_2^S(E_chi)^- e_chi
    built from predicted orders.

    """

    field: fields.MultiQuadField
    s: fields.PlaceSet
    ann: lat.IntegerLattice
    ann_certificate: StabilizationCertificate
    orders: lvalues.BTOrders
    theta: GroupRingElem
    stick: lat.IntegerLattice
    R: lat.IntegerLattice
    maximal_order: lat.IntegerLattice
    ann_S: lat.IntegerLattice
    stick_S: lat.IntegerLattice
    fit_S_predicted: lat.IntegerLattice

    @property
    def group(self):
        """Gal(E/Q)"""

        return self.field.group

    def to_dict(self):
        """Serializable form of the lattices"""

        return {'ann': self.ann.to_dict(),
                'ann_certificate': self.ann_certificate.to_dict(),
                'theta': self.theta.to_dict(),
                'stick': self.stick.to_dict(),
                'R': self.R.to_dict(),
                'maximal_order': self.maximal_order.to_dict(),
                'ann_S': self.ann_S.to_dict(),
                'stick_S': self.stick_S.to_dict(),
                'fit_S_predicted': self.fit_S_predicted.to_dict()}


def predicted_fit_diagonal(field, orders):
    """(k_2^S(Q), k_2^S(E_chi)^- for chi != 1) in character order"""

    return [orders.k2_F] + [orders.k2_minus[chi] for chi in range(1, field.group.order)]


def stick_ideal(field, s, prime_bound, window=25):
    """
    Stick = Ann_{Z[G]}(W_2(E)) theta^S(-1) together with every related lattice

    Raises
    ------
    UnstableAnnihilatorError
        If the annihilator did not stabilize
    FalsificationError
        If Stick is not contained in Z[G]

    """

    fields.validate_place_set(field, s)

    ann, certificate = ann_w2_generators(field, prime_bound, window)

    if not certificate.stable:
        raise UnstableAnnihilatorError(
                f'Ann(W_2) of Q({field.spec}) did not stabilize below {prime_bound} '
                f'({certificate.primes_since_change} of {window} primes without change).')

    group = field.group
    orders = lvalues.bt_orders(field, s)
    theta = orders.theta

    stick = lat.mul_by_ring_element(ann, theta)
    R = group_ring_lattice(group)

    if not lat.is_sublattice(stick, R):
        raise lvalues.FalsificationError(f'Stick of Q({field.spec}) with S = {{inf,{s.spec}}} is not integral.')

    stick_S = extend_to_maximal_order(stick, group)

    if not lat.is_sublattice(stick, stick_S):
        raise lvalues.FalsificationError('Stick is not contained in Stick S.')

    return IdealBundle(field=field, s=s, ann=ann, ann_certificate=certificate,
                       orders=orders, theta=theta, stick=stick, R=R,
                       maximal_order=maximal_order(group),
                       ann_S=extend_to_maximal_order(ann, group),
                       stick_S=stick_S,
                       fit_S_predicted=diagonal_lattice(group, predicted_fit_diagonal(field, orders)))


def integrality_failures(field, theta, prime_bound):
    """
    Admissible q <= prime_bound with (sigma_q - q^2) theta not in Z[G]

    """

    group = field.group
    failures = []

    for q in admissible_primes(field, prime_bound):
        element = GroupRingElem.basis(group, fields.artin_symbol(field, q)) - GroupRingElem.scalar(group, q * q)
        if not (element * theta).is_integral:
            failures.append(q)

    return failures

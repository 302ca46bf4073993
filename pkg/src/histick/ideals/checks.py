"""Functoriality checks for Stick: projection to quotients and change of base"""

from dataclasses import dataclass

from histick.algebra import lattice as lat
from histick.algebra.groupring import (ExpTwoGroup, GroupRingElem, character_value,
                                       embed_subring, project_quotient, quotient_map)
from histick.arith import fields
from histick.arith import lvalues
from histick.ideals import bundle as bdl


@dataclass(frozen=True)
class ProjectionResult:
    """
    pi(Stick of E) against Stick of the subfield fixed by H

    ``chi`` is the character cutting out the subfield (0 for Q).

    """

    chi: int
    d: int
    projected: lat.IntegerLattice
    expected: lat.IntegerLattice
    comparison: lat.LatticeComparison

    @property
    def holds(self):
        """True if both lattices are equal"""

        return self.comparison.relation == 'equal'

    def to_dict(self):
        """Serializable form"""

        return {'chi': self.chi, 'd': self.d,
                'projected': self.projected.to_dict(),
                'expected': self.expected.to_dict(),
                'comparison': self.comparison.to_dict()}


def kernel_of(group, chi):
    """Elements of ker(chi)"""

    return [sigma for sigma in group.elements() if character_value(chi, sigma) == 1]


def project_lattice(lattice, group, kernel_generators):
    """Image of a lattice in Q[G] under Q[G] -> Q[G/H]"""

    _, quotient = quotient_map(group, kernel_generators)
    images = [project_quotient(v, kernel_generators) for v in lattice.elements(group)]

    return lat.from_generators(images, ambient_dim=quotient.order)


def projection_check(stick_bundle, prime_bound, window=25):
    """
    Compare pi(Stick_{E/Q}) with Stick_{E'/Q} for the quadratic subfields E'
    and for Q itself

    Parameters
    ----------
    stick_bundle : IdealBundle
        Bundle of E and S
    prime_bound : int
        Prime bound for the subfield computations
    window : int
        Stabilization window

    Returns
    -------
    list of ProjectionResult
        One result per nontrivial character (only when m >= 2), followed
        by the projection to Q

    """

    field, s, group = stick_bundle.field, stick_bundle.s, stick_bundle.group
    results = []

    if field.rank >= 2:

        for chi in field.subfield_ds:

            d = field.subfield_d(chi)
            projected = project_lattice(stick_bundle.stick, group, kernel_of(group, chi))
            expected = bdl.stick_ideal(fields.build_field([d]), s, prime_bound, window).stick

            results.append(ProjectionResult(chi, d, projected, expected,
                                            lat.compare(projected, expected)))

    if field.rank >= 1:

        projected = project_lattice(stick_bundle.stick, group, list(group.elements()))
        expected = bdl.stick_ideal(fields.build_field([]), s, prime_bound, window).stick

        results.append(ProjectionResult(0, 1, projected, expected,
                                        lat.compare(projected, expected)))

    return results


@dataclass(frozen=True)
class BaseChangeResult:
    """
    Embedded Stick_{E/E'} against Stick_{E/Q}

    ``base_chi`` cuts out E' (0 for E' = Q when E is quadratic).

    """

    base_chi: int
    base_d: int
    relative_ann: lat.IntegerLattice
    relative_certificate: bdl.StabilizationCertificate
    relative_theta: GroupRingElem
    relative_stick: lat.IntegerLattice
    embedded: lat.IntegerLattice
    comparison: lat.LatticeComparison
    integral: bool

    @property
    def holds(self):
        """True if the embedded lattice lies in Stick_{E/Q}"""

        return self.comparison.relation in ('equal', 'subset')

    def to_dict(self):
        """Serializable form"""

        return {'base_chi': self.base_chi,
                'base_d': self.base_d,
                'relative_ann': self.relative_ann.to_dict(),
                'relative_certificate': self.relative_certificate.to_dict(),
                'relative_theta': self.relative_theta.to_dict(),
                'relative_stick': self.relative_stick.to_dict(),
                'embedded': self.embedded.to_dict(),
                'comparison': self.comparison.to_dict(),
                'integral': self.integral}


def relative_annihilator(field, base_chi, prime_bound, window=25):
    """
    Ann_{Z[H]}(W_2(E)) for H = Gal(E/E'), E' = E_{base_chi}

    Primes Q of E' above unramified q not dividing w_2(E) give
    sigma_Q - NQ^2: if q splits in E' then NQ = q and sigma_Q = sigma_q,
    which lies in H; if q is inert then NQ = q^2 and sigma_Q = 1.

    Returns
    -------
    ann : IntegerLattice
        Lattice in Q[H], H of rank 1
    certificate : StabilizationCertificate
        Stabilization data
    h : int
        The generator of H inside G

    """

    group = field.group
    h = [sigma for sigma in kernel_of(group, base_chi) if sigma][0]
    relative = ExpTwoGroup(1)
    base_disc = field.subfield_disc(base_chi)

    def stream():
        for q in bdl.admissible_primes(field, prime_bound):

            if fields.kronecker(base_disc, q) == 1:
                sigma = fields.artin_symbol(field, q)
                yield q, (GroupRingElem.basis(relative, 1 if sigma == h else 0)
                          - GroupRingElem.scalar(relative, q * q))

            else:
                yield q, GroupRingElem.scalar(relative, 1 - q ** 4)

    ann, certificate = bdl.stabilized_ideal(relative, stream(), prime_bound, window)

    return ann, certificate, h


def base_change_check(stick_bundle, prime_bound, window=25):
    """
    Check that Stick_{E/E'} embedded in Z[G] lies in Stick_{E/Q}

    Runs over the three quadratic subfields when m = 2 and over the trivial
    base when m = 1.

    Raises
    ------
    UnstableAnnihilatorError
        If a relative annihilator did not stabilize

    """

    field, s, group = stick_bundle.field, stick_bundle.s, stick_bundle.group

    if field.rank == 1:
        bases = [0]

    elif field.rank == 2:
        bases = list(field.subfield_ds)

    else:
        raise fields.FieldError(f'Base change checks need m = 1 or m = 2, got m = {field.rank}.')

    results = []

    for base_chi in bases:

        ann, certificate, h = relative_annihilator(field, base_chi, prime_bound, window)

        if not certificate.stable:
            raise bdl.UnstableAnnihilatorError(
                    f'The relative annihilator of Q({field.spec}) over '
                    f'Q(sqrt({field.subfield_d(base_chi)})) did not stabilize below {prime_bound}.')

        theta = lvalues.theta_relative(field, base_chi, s)
        relative_stick = lat.mul_by_ring_element(ann, theta)

        embedded = lat.from_generators([embed_subring(v, group, [h])
                                        for v in relative_stick.elements(ExpTwoGroup(1))],
                                       ambient_dim=group.order)

        results.append(BaseChangeResult(
                base_chi=base_chi,
                base_d=field.subfield_d(base_chi),
                relative_ann=ann,
                relative_certificate=certificate,
                relative_theta=theta,
                relative_stick=relative_stick,
                embedded=embedded,
                comparison=lat.compare(embedded, stick_bundle.stick),
                integral=lat.is_sublattice(relative_stick, lat.standard_lattice(2))))

    return results

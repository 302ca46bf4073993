"""Search the family E = Q(sqrt(2), sqrt(r)) for fields meeting the norm conditions

r qualifies when it is a product of distinct primes congruent to 7 mod 8,
or twice such a product. For each qualifying r the field is analysed with
S = {inf, 2} and the prime divisors of r.

"""

from dataclasses import dataclass

import sympy

from histick.arith import fields
from histick.arith import lvalues
from histick.ideals import bundle as bdl
from histick.ideals import indices
from histick.analysis.pool import LoggedPool
from histick.analysis.verdicts import VERIFIED, FAILED, CONDITIONAL

S_POLICIES = ('minimal', 'extended')

CONDITIONAL_ANNOTATION = 'Stick lies in Fit with index 1 or 2 (conditional on the norm hypotheses)'


def qualify_r(r):
    """
    Decide whether r belongs to the family

    Returns
    -------
    ok : bool
        True if r qualifies
    reason : str | None
        Why r was rejected

    """

    factorization = sympy.factorint(r)

    if any(e > 1 for e in factorization.values()):
        return False, 'not squarefree'

    odd = [p for p in factorization if p != 2]

    if any(p % 4 == 1 for p in odd):
        return False, 'has a prime divisor congruent to 1 mod 4'

    if any(p % 8 != 7 for p in odd):
        return False, 'has a prime divisor not congruent to 7 mod 8'

    if not odd:
        return False, 'has no odd prime divisor'

    return True, None


@dataclass
class FamilySearchRow:
    """One analysed member of the family"""

    r: int
    factorization: dict
    congruence_check: dict
    norm_witness: fields.NormWitness | None
    s_used: fields.PlaceSet
    index_data: dict | None
    s_policy_violation: list
    annotation: str | None
    status: str
    error: str | None = None

    def to_dict(self):
        """Serializable form"""

        return {'r': self.r,
                'factorization': {str(p): e for p, e in self.factorization.items()},
                'congruence_check': self.congruence_check,
                'norm_witness': self.norm_witness.to_dict() if self.norm_witness else None,
                's_used': self.s_used.to_dict(),
                's_spec': self.s_used.spec,
                'index_data': self.index_data,
                's_policy_violation': self.s_policy_violation,
                'annotation': self.annotation,
                'status': self.status,
                'error': self.error}


@dataclass
class SearchResult:
    """Rows of qualifying r together with the rejected r"""

    r_max: int
    s_policy: str
    rows: list
    rejected: list

    def to_dict(self, show_rejected=False):
        """Serializable form"""

        data = {'r_max': self.r_max,
                's_policy': self.s_policy,
                'rows': [row.to_dict() for row in self.rows]}

        if show_rejected:
            data['rejected'] = [{'r': r, 'reason': reason} for r, reason in self.rejected]

        return data

    @property
    def status(self):
        """failed if a row failed, conditional if a row carries an annotation"""

        statuses = {row.status for row in self.rows}

        if FAILED in statuses:
            return FAILED

        if CONDITIONAL in statuses:
            return CONDITIONAL

        return VERIFIED


def family_place_set(r, s_policy='minimal', extra_primes=()):
    """
    S for Q(sqrt(2), sqrt(r)) under the given policy

    Returns
    -------
    s : PlaceSet
        {2} with the prime divisors of r, plus ``extra_primes`` when extended
    violation : list of int
        Primes of S congruent to 1 mod 4

    """

    if s_policy not in S_POLICIES:
        raise ValueError(f'Invalid S policy "{s_policy}"; expected one of {S_POLICIES}.')

    s = fields.PlaceSet((2,) + tuple(int(p) for p in sympy.primefactors(r)))

    if s_policy == 'extended':
        s = s.with_primes(extra_primes)

    return s, [p for p in s.finite_primes if p % 4 == 1]


def analyse_member(r, settings, pool=None):
    """
    Build the row for a qualifying r

    Parameters
    ----------
    r : int
        A qualifying r
    settings : dict
        ``s_policy``, ``extra_primes``, ``y_bound``, ``prime_bound`` and
        ``stabilization_window``
    pool : LoggedPool | None
        Pool used for logging

    Returns
    -------
    FamilySearchRow | None
        None if (2, r) does not define a biquadratic field

    """

    def say(message):
        if pool:
            pool.log(message)

    try:
        field = fields.build_field([2, r])
    except fields.FieldError as exc:
        say(f'r = {r}: skipped, {exc}')
        return None

    factorization = sympy.factorint(r)
    congruence = {str(p): p % 8 == 7 for p in factorization if p != 2}
    congruence['twice'] = 2 in factorization

    s, violation = family_place_set(r, settings['s_policy'], settings.get('extra_primes', ()))

    witness = fields.norm_form_solve(2, r, settings['y_bound'])

    if witness is not None and not witness.is_valid():
        say(f'r = {r}: discarded invalid witness {witness.to_dict()}')
        witness = None

    annotation = CONDITIONAL_ANNOTATION if witness is not None and not violation else None

    try:
        stick_bundle = bdl.stick_ideal(field, s, settings['prime_bound'], settings['stabilization_window'])
        report = indices.index_report(stick_bundle)

    except (bdl.UnstableAnnihilatorError, lvalues.FalsificationError) as exc:
        say(f'r = {r}: failed, {exc}')
        return FamilySearchRow(r, factorization, congruence, witness, s, None, violation,
                               annotation, FAILED, error=str(exc))

    if report.failed():
        status = FAILED
    elif annotation:
        status = CONDITIONAL
    else:
        status = VERIFIED

    say(f'r = {r}: S = {{inf,{s.spec}}}, (R:Stick) = {report.R_stick}, status {status}')

    return FamilySearchRow(r, factorization, congruence, witness, s, report.to_dict(),
                           violation, annotation, status)


def search(r_max, settings, workers=1, log_path=None):
    """
    Enumerate qualifying r <= r_max and analyse each member

    Parameters
    ----------
    r_max : int
        Largest r, at least 7
    settings : dict
        See ``analyse_member``
    workers : int
        Number of worker threads
    log_path : str | None
        Run log

    Returns
    -------
    SearchResult
        Rows ordered by r

    """

    if r_max < 7:
        raise ValueError('"r_max" must be at least 7.')

    qualifying, rejected = [], []

    for r in range(2, r_max + 1):

        ok, reason = qualify_r(r)

        if ok:
            qualifying.append(r)
        else:
            rejected.append((r, reason))

    pool = LoggedPool(workers=workers, log_path=log_path, log_name='histick.search')
    rows = pool.map(lambda r, p: analyse_member(r, settings, p), qualifying)

    return SearchResult(r_max=r_max, s_policy=settings['s_policy'],
                        rows=[row for row in rows if row is not None],
                        rejected=rejected)

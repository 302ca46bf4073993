"""Claim verdicts attached to every computed identity"""

from dataclasses import dataclass
from fractions import Fraction

from histick.general import utils

VERIFIED = 'verified'
FAILED = 'failed'
CONDITIONAL = 'conditional'

STATUSES = (VERIFIED, FAILED, CONDITIONAL)


def plain(value):
    """JSON-friendly form of a verdict side"""

    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value

    if isinstance(value, Fraction):
        return utils.rational_str(value)

    if isinstance(value, int):
        return value

    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}

    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]

    if hasattr(value, 'to_dict'):
        return value.to_dict()

    return str(value)


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of checking one claim for one (field, S) pair

    ``claim`` is a stable kebab-case identifier and ``anchor`` states the
    checked identity in one sentence.

    """

    claim: str
    status: str
    lhs: object
    rhs: object
    anchor: str
    field: str = ''
    s: str = ''

    def __post_init__(self):

        if self.status not in STATUSES:
            raise ValueError(f'Invalid verdict status "{self.status}"; expected one of {STATUSES}.')

    def to_dict(self):
        """Serializable form"""

        return {'claim': self.claim,
                'status': self.status,
                'lhs': plain(self.lhs),
                'rhs': plain(self.rhs),
                'anchor': self.anchor,
                'field': self.field,
                's': self.s}


class VerdictBook:
    """
    Collects the verdicts of one analysis

    """

    def __init__(self, field='', s=''):

        self.field = field
        self.s = s
        self.verdicts = []

    def add(self, claim, holds, lhs, rhs, anchor):
        """Record an exact check; ``holds`` decides verified or failed"""

        verdict = Verdict(claim, VERIFIED if holds else FAILED, lhs, rhs, anchor, self.field, self.s)
        self.verdicts.append(verdict)

        return verdict

    def equal(self, claim, lhs, rhs, anchor):
        """Record lhs == rhs"""

        return self.add(claim, lhs == rhs, lhs, rhs, anchor)

    def sides(self, claim, sides, anchor):
        """Record an IdentitySides pair"""

        return self.add(claim, sides.holds, sides.lhs, sides.rhs, anchor)

    def conditional(self, claim, lhs, rhs, anchor):
        """Record a statement that rests on unverified hypotheses"""

        verdict = Verdict(claim, CONDITIONAL, lhs, rhs, anchor, self.field, self.s)
        self.verdicts.append(verdict)

        return verdict

    def failure(self, claim, message, anchor):
        """Record an exception raised while checking ``claim``"""

        return self.add(claim, False, message, None, anchor)


def overall_status(verdicts):
    """failed if any verdict failed, else conditional if any is, else verified"""

    statuses = {v.status for v in verdicts}

    if FAILED in statuses:
        return FAILED

    if CONDITIONAL in statuses:
        return CONDITIONAL

    return VERIFIED


def exit_code(status):
    """0 verified, 2 conditional only, 1 failure"""

    return {VERIFIED: 0, CONDITIONAL: 2, FAILED: 1}[status]

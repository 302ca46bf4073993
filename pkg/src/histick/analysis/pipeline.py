"""Full analysis of one (E, S) pair: values, lattices, indices and verdicts"""

import time

from dataclasses import dataclass
from fractions import Fraction

import importlib_metadata
import sympy

from histick import __version__
from histick.algebra import lattice as lat
from histick.algebra.groupring import character_transform, tau_chi
from histick.arith import fields
from histick.arith import lvalues
from histick.ideals import bundle as bdl
from histick.ideals import checks
from histick.ideals import closed_forms
from histick.ideals import comparison
from histick.ideals import indices
from histick.general import utils
from histick.analysis.verdicts import VerdictBook, overall_status

FROBENIUS_CHECK_BOUND = 500

CONVENTIONS = {
        'character': 'chi_b(sigma) = (-1)^popcount(b & sigma); E_chi_b = Q(sqrt(d_b))',
        'group_elements': 'bit i of sigma is set iff sigma moves sqrt(d_i)',
        'tau_chi': 'lowest generator bit i with chi(sigma_i) = -1',
        'ramified_places': 'one place of E_chi above each prime of S ramified in E_chi',
        'orders': 'k_2 values are Birch-Tate predictions w_2 |zeta^S(-1)|',
        }


@dataclass
class AnalysisSettings:
    """Numerical knobs of an analysis"""

    prime_bound: int = 5000
    stabilization_window: int = 25
    y_bound: int = 1000000
    timing: bool = False

    def to_dict(self):
        """Serializable form"""

        return {'prime_bound': self.prime_bound,
                'stabilization_window': self.stabilization_window,
                'y_bound': self.y_bound}


def dependency_versions():
    """Installed versions of the runtime dependencies"""

    versions = {'histick': __version__}

    for package in ('sympy', 'click', 'platformdirs'):
        try:
            versions[package] = importlib_metadata.version(package)
        except importlib_metadata.PackageNotFoundError:
            versions[package] = None

    return versions


@dataclass
class AnalysisReport:
    """
    Serialized record of one analysis

    ``to_dict`` is deterministic for fixed inputs unless timing was
    requested.

    """

    header: dict
    lvalues: list
    characters: list
    bt: dict | None
    lattices: dict | None
    indices: dict | None
    checks: dict
    verdicts: list
    timing: dict | None

    @property
    def status(self):
        """Overall verdict status"""

        return overall_status(self.verdicts)

    def to_dict(self):
        """Serializable form"""

        return {'header': self.header,
                'lvalues': self.lvalues,
                'characters': self.characters,
                'bt': self.bt,
                'lattices': self.lattices,
                'indices': self.indices,
                'checks': self.checks,
                'verdicts': [v.to_dict() for v in self.verdicts],
                'status': self.status,
                'timing': self.timing}


class _Stopwatch:

    def __init__(self, enabled):

        self.enabled = enabled
        self.stages = {}
        self._last = time.perf_counter()

    def lap(self, stage):

        now = time.perf_counter()
        self.stages[stage] = round(now - self._last, 6)
        self._last = now

    def result(self):

        return dict(self.stages) if self.enabled else None


def character_rows(field, s, records, orders):
    """One row per character with the CSV columns of ``histick emit``"""

    theta = character_transform(orders.theta) if orders else [None] * field.group.order
    rows = []

    for rec in records:

        row = {'chi': rec.chi,
               'tau_chi': tau_chi(rec.chi),
               'disc': rec.disc,
               'raw_L': rec.raw_L,
               'adjusted_L': rec.adjusted_L,
               'theta_component': theta[rec.chi]}

        if rec.chi == 0:
            row.update({'d': 1, 'w2': fields.W2_RATIONALS, 'w2_minus': None, 'delta': None,
                        'places': s.size,
                        'k2_Echi': orders.k2_F if orders else None,
                        'k2_minus': None})

        else:
            data = fields.subfield_data(field, rec.chi)
            row.update({'d': data.d, 'w2': data.w2, 'w2_minus': data.w2_minus,
                        'delta': data.delta,
                        'places': fields.places_above(fields.build_field([data.d]), s),
                        'k2_Echi': orders.k2_Echi[rec.chi] if orders else None,
                        'k2_minus': orders.k2_minus[rec.chi] if orders else None})

        rows.append({k: (utils.rational_str(v) if isinstance(v, Fraction) else v)
                     for k, v in row.items()})

    return rows


def _value_checks(book, field, s, records, orders):

    zeta_F = records[0].adjusted_L
    theta = character_transform(orders.theta)

    book.equal('trivial-component', theta[0], zeta_F,
               'The trivial-character component of theta equals zeta_Q^S(-1).')

    book.equal('zeta-factorization',
               [rec.adjusted_L for rec in records[1:]],
               [orders.zeta_Echi[rec.chi] / zeta_F for rec in records[1:]],
               'Each L^S(-1, chi) equals zeta^S(-1) of E_chi divided by zeta_Q^S(-1).')

    sign_lhs = [(-1) ** s.size * theta[0]]
    sign_rhs = [Fraction(orders.k2_F, fields.W2_RATIONALS)]
    minus_lhs, minus_rhs, congruences = [], [], []

    for rec in records[1:]:

        data = fields.subfield_data(field, rec.chi)
        places = orders.places[rec.chi]

        sign_lhs.append(theta[rec.chi])
        sign_rhs.append((-1) ** (places + s.size) * Fraction(fields.W2_RATIONALS, data.w2)
                        * Fraction(orders.k2_Echi[rec.chi], orders.k2_F))

        minus_lhs.append(data.w2_minus * abs(theta[rec.chi]))
        minus_rhs.append(orders.k2_minus[rec.chi])

        congruences.append(data.w2_minus % 4)

    book.equal('theta-sign-law', sign_lhs, sign_rhs,
               'The components of theta are the signed ratios of predicted orders and w_2 values.')

    book.equal('minus-part-identity', minus_lhs, minus_rhs,
               'w_2(E_chi)^- times |e_chi theta| equals k_2^S(E_chi)^-.')

    book.equal('w2-minus-congruence', congruences, [2] * len(congruences),
               'Every w_2(E_chi)^- is congruent to 2 modulo 4.')

    w2_E = fields.w2(field)
    sub_w2 = [fields.w2_from_subfields([d]) for d in field.subfield_ds.values()]

    book.add('w2-subfield-divisibility', all(w2_E % w == 0 for w in sub_w2), w2_E, sub_w2,
             'w_2 of every quadratic subfield divides w_2(E).')

    if field.rank:
        prime_powers = [int(p) ** e for p, e in sympy.factorint(w2_E).items()]
        book.add('w2-prime-powers', all(any(w % pe == 0 for w in sub_w2) for pe in prime_powers),
                 prime_powers, sub_w2,
                 'Every prime power dividing w_2(E) divides w_2 of some quadratic subfield.')

    unramified = [q for q in fields.primes_up_to(FROBENIUS_CHECK_BOUND) if q not in field.ramified_primes]
    bad = [q for q in unramified if not fields.frobenius_consistent(field, q)]

    book.add('frobenius-pairing', not bad, bad, [],
             'chi(sigma_q) equals the Kronecker symbol (disc(E_chi)|q) for unramified q.')

    book.sides('k2-quotient-identity', lvalues.k2_quotient_identity(field, s, orders),
               'The normalized order quotient for E is the product of those of its quadratic subfields.')


def _lattice_checks(book, stick_bundle, settings):

    field, group, orders = stick_bundle.field, stick_bundle.group, stick_bundle.orders

    failures = bdl.integrality_failures(field, stick_bundle.theta, settings.prime_bound)
    book.add('stick-integrality', not failures, failures, [],
             '(sigma_q - q^2) theta lies in Z[G] for every admissible q up to the prime bound.')

    ann_diagonal = [fields.W2_RATIONALS] + [fields.subfield_data(field, chi).w2_minus
                                            for chi in range(1, group.order)]

    book.equal('annihilator-diagonal', stick_bundle.ann_S, bdl.diagonal_lattice(group, ann_diagonal),
               'Ann(W_2) S is the diagonal lattice with entries w_2(Q) and w_2(E_chi)^-.')

    book.equal('stick-diagonal', stick_bundle.stick_S, stick_bundle.fit_S_predicted,
               'Stick S is the diagonal lattice with entries k_2^S(Q) and k_2^S(E_chi)^-.')

    stick_diag = bdl.character_diagonal(stick_bundle.stick_S, group)
    fit_diag = bdl.predicted_fit_diagonal(field, orders)

    book.equal('odd-part-agreement',
               [_odd_part(x) for x in stick_diag], [_odd_part(x) for x in fit_diag],
               'Stick S and the predicted Fit S agree after inverting 2.')

    book.equal('augmentation-projection',
               lat.from_generators([[v.augmentation()] for v in stick_bundle.stick.elements(group)], ambient_dim=1),
               lat.from_generators([[fields.W2_RATIONALS * orders.zeta_F]]),
               'The image of Stick in Z under augmentation is w_2(Q) zeta_Q^S(-1) Z.')


def _odd_part(value):

    value = abs(Fraction(value))
    n = value.numerator

    while n and n % 2 == 0:
        n //= 2

    return Fraction(n, value.denominator)


def _index_checks(book, stick_bundle):

    report = indices.index_report(stick_bundle)

    anchors = {
            'maximal-order-index': '(S : R) equals 2^(m 2^(m-1)).',
            'group-ring-index-formula': '(R : Stick) equals |K_2| (Stick S : Stick) / (delta 2^e) with e = (m-2) 2^(m-1) + 1.',
            'index-chain': '(S : R)(R : Stick) equals (S : Stick S)(Stick S : Stick).',
            'maximal-order-stick-index': '(S : Stick S) equals k_2^S(Q) times the product of the k_2^S(E_chi)^-.',
            'maximal-order-stick-k2': '(S : Stick S) equals 2^(2^m - 1) |K_2| / delta.',
            'group-ring-index-k2': 'For biquadratic E, (R : Stick) equals the predicted |K_2(O_E^S)|.',
            }

    for name, sides in report.checks.items():
        book.sides(f'index-{name}', sides, anchors[name])

    return report


def _quadratic_checks(book, stick_bundle, report):

    d = stick_bundle.field.generators[0]
    equal = stick_bundle.stick == stick_bundle.stick_S

    if d == 2:
        book.add('quadratic-structure', not equal and report.stick_S_stick == 2,
                 report.stick_S_stick, 2,
                 'For Q(sqrt(2)), Stick has index 2 in Stick S.')

    else:
        book.add('quadratic-structure', equal, report.stick_S_stick, 1,
                 'For a real quadratic field other than Q(sqrt(2)), Stick equals Stick S.')

    book.equal('quadratic-group-ring-index', report.R_stick, report.k2_E,
               'For a real quadratic field, (R : Stick) equals the predicted |K_2(O_E^S)|.')


def _biquadratic_checks(book, stick_bundle, settings):

    field, orders = stick_bundle.field, stick_bundle.orders
    expected = closed_forms.expected_closed_form_index(field)

    ann_closed = closed_forms.ann_closed_biquadratic(field)
    book.equal('ann-closed-form', ann_closed, stick_bundle.ann,
               'Ann(W_2) equals its explicit biquadratic basis.')
    book.equal('ann-closed-form-index', lat.index(stick_bundle.ann_S, ann_closed), expected,
               'The explicit annihilator basis has index 2 in its S-extension, or 4 when sqrt(2) is in E.')

    stick_closed = closed_forms.stick_closed_biquadratic(field, orders)
    book.equal('stick-closed-form', stick_closed, stick_bundle.stick,
               'Stick equals its explicit biquadratic basis built from predicted orders.')
    book.equal('stick-closed-form-index', lat.index(stick_bundle.stick_S, stick_closed), expected,
               'The explicit Stick basis has index 2 in Stick S, or 4 when sqrt(2) is in E.')

    values = [orders.k2_F] + [orders.k2_minus[chi] for chi in (1, 2, 3)]
    book.add('multiples-of-four', all(v % 4 == 0 for v in values), values, 4,
             'k_2^S(Q) and every k_2^S(E_chi)^- are divisible by 4.')

    cases = comparison.comparison_cases(stick_bundle, settings.y_bound)

    if cases.has_first_layer:

        b = [c for c in cases.candidates if c.label == 'b'][0]
        book.equal('candidate-b-equals-stick', b.lattice, stick_bundle.stick,
                   'The second candidate position of Fit coincides with Stick.')

        if cases.hypothesis.holds:
            book.conditional('stick-in-fit', 'Stick in Fit', 'index 1 or 2',
                             'Under the norm and congruence conditions Stick lies in Fit with index 1 or 2.')

    else:

        book.add('stick-meets-theta-R', cases.stick_meets_theta_R, cases.stick_meets_theta_R, True,
                 'Stick equals (Stick S) intersected with theta R.')
        book.add('ann-meets-R', cases.ann_meets_R, cases.ann_meets_R, True,
                 'Ann(W_2) equals (Ann(W_2) S) intersected with R.')

    book.conditional('fit-position', cases.consistent_labels(), cases.stick_index_in_stick_S,
                     'Candidate positions of Fit whose asserted relation to Stick holds.')

    return cases


def _functoriality_checks(book, stick_bundle, settings):

    projections = checks.projection_check(stick_bundle, settings.prime_bound, settings.stabilization_window)

    for result in projections:
        book.add('projection', result.holds, result.comparison.relation, f'Q(sqrt({result.d}))',
                 'The projection of Stick to a quotient equals Stick of the fixed field.')

    base_changes = []

    if stick_bundle.field.rank in (1, 2):

        base_changes = checks.base_change_check(stick_bundle, settings.prime_bound,
                                                settings.stabilization_window)

        for result in base_changes:
            book.add('base-change', result.holds and result.integral,
                     result.comparison.relation, f'Q(sqrt({result.base_d}))',
                     'Stick of E over a quadratic base, embedded in Z[G], lies in Stick of E over Q.')

    return projections, base_changes


def analyze(field, s, settings=None, s_added=()):
    """
    Run the whole pipeline on (E, S)

    Parameters
    ----------
    field : MultiQuadField
        The field E
    s : PlaceSet
        S, already containing the ramified primes
    settings : AnalysisSettings | None
        Numerical settings
    s_added : sequence of int
        Ramified primes added to the user's S, recorded in the header

    Returns
    -------
    AnalysisReport
        The report. Non-integral predicted orders or Stick, and annihilators
        that do not stabilize, become failed verdicts in a partial report.

    Raises
    ------
    FieldError
        If S misses a ramified prime of E
    LatticeError
        On inconsistent lattice dimensions, which indicates a bug

    """

    settings = settings or AnalysisSettings()
    watch = _Stopwatch(settings.timing)
    book = VerdictBook(field.spec, s.spec)

    header = {'field': field.to_dict(),
              'field_spec': field.spec,
              's': s.to_dict(),
              's_spec': s.spec,
              's_added': list(s_added),
              'first_layer_chi': field.first_layer_chi,
              'conventions': CONVENTIONS,
              'settings': settings.to_dict(),
              'versions': dependency_versions()}

    records = lvalues.l_value_records(field, s)
    watch.lap('lvalues')

    def partial(orders=None, stick_bundle=None):
        return AnalysisReport(header=header,
                              lvalues=[rec.to_dict() for rec in records],
                              characters=character_rows(field, s, records, orders),
                              bt=orders.to_dict() if orders else None,
                              lattices=stick_bundle.to_dict() if stick_bundle else None,
                              indices=None, checks={}, verdicts=book.verdicts,
                              timing=watch.result())

    try:
        orders = lvalues.bt_orders(field, s)
    except lvalues.FalsificationError as exc:
        book.failure('predicted-orders', str(exc), 'Predicted orders have sign (-1)^|S_L| and are integers.')
        return partial()

    book.add('predicted-orders', True, orders.k2_E, orders.k2_F,
             'Predicted orders have sign (-1)^|S_L| and are integers.')
    _value_checks(book, field, s, records, orders)
    watch.lap('orders')

    try:
        stick_bundle = bdl.stick_ideal(field, s, settings.prime_bound, settings.stabilization_window)
    except (bdl.UnstableAnnihilatorError, lvalues.FalsificationError) as exc:
        book.failure('stick-ideal', str(exc), 'Ann(W_2) stabilizes and Stick lies in Z[G].')
        return partial(orders)

    watch.lap('ideals')

    _lattice_checks(book, stick_bundle, settings)
    report = _index_checks(book, stick_bundle)
    watch.lap('indices')

    extra = {}

    if field.rank == 1:
        _quadratic_checks(book, stick_bundle, report)

    if field.rank == 2:
        extra['comparison'] = _biquadratic_checks(book, stick_bundle, settings).to_dict()

    try:
        projections, base_changes = _functoriality_checks(book, stick_bundle, settings)
        extra['projections'] = [r.to_dict() for r in projections]
        extra['base_changes'] = [r.to_dict() for r in base_changes]
    except bdl.UnstableAnnihilatorError as exc:
        book.failure('base-change', str(exc), 'Relative annihilators stabilize below the prime bound.')

    watch.lap('checks')

    result = partial(orders, stick_bundle)
    result.indices = report.to_dict()
    result.checks = extra
    result.timing = watch.result()

    return result

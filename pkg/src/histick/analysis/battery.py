"""Batteries of (E, S) pairs analysed by ``histick verify``"""

import configparser

from dataclasses import dataclass

import sympy

from histick.general import utils
from histick.arith import fields
from histick.analysis.pool import LoggedPool
from histick.analysis.pipeline import analyze

DEFAULT_BIQUADRATIC = ((3, 7), (3, 5), (5, 13), (3, 11), (5, 7), (6, 7),
                       (2, 3), (2, 5), (2, 7), (2, 11), (2, 13), (2, 23))

DEFAULT_QUADRATIC = (2, 5, 3, 13)

DEFAULT_TRIQUADRATIC = ((2, 3, 5), (3, 5, 7))


@dataclass(frozen=True)
class BatteryEntry:
    """One (E, S) pair; S already contains the ramified primes"""

    label: str
    field: fields.MultiQuadField
    s: fields.PlaceSet

    def to_dict(self):
        """Serializable form"""

        return {'label': self.label, 'field': self.field.spec, 's': self.s.spec}


def entry_from_specs(label, field_spec, s_spec):
    """
    Build a battery entry from spec strings

    Raises
    ------
    ValueError
        If the field is invalid or S misses a ramified prime

    """

    try:
        field = fields.build_field(field_spec)
        s = fields.PlaceSet.from_spec(s_spec)
        fields.validate_place_set(field, s)

    except fields.FieldError as exc:
        raise ValueError(f'Invalid battery entry [{label}]: {exc}') from exc

    return BatteryEntry(label, field, s)


def load_battery(path):
    """
    Read a battery file

    Each INI section is one entry with keys ``field`` and ``s``.

    Parameters
    ----------
    path : str
        Path to the battery file

    Returns
    -------
    list of BatteryEntry
        Entries in file order

    """

    if not utils.file_exists(path):
        raise FileNotFoundError(f'Battery file {path} does not exist.')

    parser = configparser.ConfigParser()
    parser.read(path, encoding='utf-8')

    entries = []

    for section in parser.sections():

        if 'field' not in parser[section]:
            raise ValueError(f'Battery entry [{section}] has no "field" key.')

        entries.append(entry_from_specs(section,
                                        parser[section]['field'],
                                        parser[section].get('s', '')))

    if not entries:
        raise ValueError(f'Battery file {path} defines no entries.')

    return entries


def _extra_primes(s, count):

    primes, p = [], 1

    while len(primes) < count:

        p = int(sympy.nextprime(p))

        if p not in s.finite_primes:
            primes.append(p)

    return primes


def default_battery():
    """
    Biquadratic fields with and without sqrt(2), each with three S
    (ramified, one and two extra primes), plus quadratic and triquadratic
    fields with S the ramified primes

    """

    entries = []

    for gens in DEFAULT_BIQUADRATIC:

        field = fields.build_field(list(gens))
        base = fields.PlaceSet(field.ramified_primes)

        for extra in range(3):

            s = base.with_primes(_extra_primes(base, extra))
            entries.append(BatteryEntry(f'{field.spec}|{s.spec}', field, s))

    for gens in [(d,) for d in DEFAULT_QUADRATIC] + list(DEFAULT_TRIQUADRATIC):

        field = fields.build_field(list(gens))
        s = fields.PlaceSet(field.ramified_primes)
        entries.append(BatteryEntry(f'{field.spec}|{s.spec}', field, s))

    return entries


def run_battery(entries, settings, workers=1, log_path=None):
    """
    Analyse every entry in a thread pool

    Returns
    -------
    list of AnalysisReport
        Reports in the order of ``entries``

    """

    def work(entry, pool):

        pool.log(f'Analysing Q({entry.field.spec}) with S = {{inf,{entry.s.spec}}}')
        report = analyze(entry.field, entry.s, settings)
        pool.log(f'Q({entry.field.spec}) with S = {{inf,{entry.s.spec}}}: {report.status}')

        return report

    pool = LoggedPool(workers=workers, log_path=log_path, log_name='histick.verify')

    return pool.map(work, entries)

"""Defines the ``histick analyze`` CLI"""

import sys
import click

from histick.general import utils
from histick.general.config import analysis_defaults
from histick.general.runlog import RunLog
from histick.arith import fields
from histick.analysis import reports
from histick.analysis.pipeline import AnalysisSettings, analyze
from histick.analysis.analysis_reports import analysis_summary
from histick.analysis.verdicts import FAILED, exit_code

defaults = analysis_defaults()

@click.command(help="""Analyze the Stickelberger ideal of a multi-quadratic field

    Example usage:

        histick analyze --field 2,5 --s 2,5 --out q2q5.json

    The field Q(sqrt(d_1), ..., sqrt(d_m)) is given by its generators d_i,
    the set S by its finite primes (the infinite place is implicit).
    Ramified primes missing from S are added with a warning.

    Without --out the JSON report is written to standard output.

    Exit code: 0 if every claim is verified, 2 if some are conditional,
    1 on a failed claim or an error.
""")
@click.option('-f', '--field', 'field_spec', required=True,
        help="Generators d_1,...,d_m of E, e.g. 2,5")
@click.option('-s', '--s', 's_spec', default='', show_default=True,
        help="Finite primes of S, e.g. 2,5")
@click.option('-p', '--prime-bound', 'prime_bound',
        default=defaults['prime_bound'], show_default=True,
        help="Largest prime fed to the annihilator computation")
@click.option('-w', '--window', 'window',
        default=defaults['stabilization_window'], show_default=True,
        help="Admissible primes without change required for stabilization")
@click.option('-y', '--y-bound', 'y_bound',
        default=defaults['y_bound'], show_default=True,
        help="Bound on y in the x^2 - 2y^2 = r search")
@click.option('-o', '--out', 'out',
        type=click.Path(dir_okay=False, writable=True),
        help="Path to the output JSON report")
@click.option('-c', '--csv', 'csv_path',
        type=click.Path(dir_okay=False, writable=True),
        help="Optional path to a per-character CSV table")
@click.option('-t', '--timing', is_flag=True, default=False,
        help="Record per-stage wall times (makes the report non-deterministic)")
def analyze_cli(field_spec, s_spec, prime_bound, window, y_bound, out, csv_path, timing):
    """
    Analyze CLI

    """

    run = RunLog('analyze')
    run.start()

    try:
        status = _analyze_and_write(run, field_spec, s_spec, prime_bound, window, y_bound,
                                    out, csv_path, timing)

    finally:
        run.end()

    sys.exit(exit_code(status))


def _analyze_and_write(run, field_spec, s_spec, prime_bound, window, y_bound, out, csv_path, timing):

    try:
        field = fields.build_field(field_spec)
        s = fields.PlaceSet.from_spec(s_spec)

        if prime_bound < 2:
            raise ValueError('"prime_bound" must be at least 2.')

    except ValueError as exc:
        click.echo(f'Error: {exc}', err=True)
        return FAILED

    s, added = fields.complete_place_set(field, s)

    if added:
        run.warning(f'WARNING: S did not contain the ramified primes {added}; using S = {{inf,{s.spec}}}.')

    settings = AnalysisSettings(prime_bound=prime_bound, stabilization_window=window,
                                y_bound=y_bound, timing=timing)

    report = analyze(field, s, settings, s_added=added)
    data = report.to_dict()

    text = reports.to_json(data)

    if out:
        utils.write_text_to_file(out, text)
        click.echo(analysis_summary(data))
        run.info(f'Report written to {out}')

    else:
        click.echo(text, nl=False)

    if csv_path:
        utils.write_text_to_file(csv_path, reports.to_csv(data))
        run.info(f'CSV table written to {csv_path}')

    run.info(f'Status: {report.status}')

    return report.status

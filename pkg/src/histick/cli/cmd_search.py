"""Defines the ``histick search`` CLI"""

import sys
import click

from histick.general import utils
from histick.general.config import analysis_defaults
from histick.general.runlog import RunLog
from histick.arith import fields
from histick.analysis import reports
from histick.analysis import search as srch
from histick.analysis.analysis_reports import search_summary
from histick.analysis.verdicts import exit_code

defaults = analysis_defaults()

@click.command(help="""Search the fields Q(sqrt(2), sqrt(r)) satisfying the norm conditions

    Example usage:

        histick search --r-max 100 --show-rejected

    r qualifies when it is a product of distinct primes congruent to 7 mod 8,
    or twice such a product. Each qualifying r is analysed with
    S = {inf, 2} and the prime divisors of r; under --s-policy extended the
    primes given by --extra-primes are added, and rows whose S then contains
    a prime congruent to 1 mod 4 are flagged.

    Rows carry the conclusion "Stick lies in Fit with index 1 or 2" as a
    conditional annotation, not as a verified fact.

    Without --out the JSON result is written to standard output.
""")
@click.option('-r', '--r-max', 'r_max', default=defaults['r_max'], show_default=True,
        help="Largest r searched (at least 7)")
@click.option('-y', '--y-bound', 'y_bound',
        default=defaults['y_bound'], show_default=True,
        help="Bound on y in the x^2 - 2y^2 = r search")
@click.option('--s-policy', 's_policy', type=click.Choice(srch.S_POLICIES),
        default='minimal', show_default=True,
        help="How S is built for each row")
@click.option('-e', '--extra-primes', 'extra_primes', default='',
        help="Primes added to S under the extended policy, e.g. 3,5")
@click.option('--show-rejected', is_flag=True, default=False,
        help="List every rejected r with its reason")
@click.option('-p', '--prime-bound', 'prime_bound',
        default=defaults['prime_bound'], show_default=True,
        help="Largest prime fed to the annihilator computation")
@click.option('-w', '--window', 'window',
        default=defaults['stabilization_window'], show_default=True,
        help="Admissible primes without change required for stabilization")
@click.option('-j', '--workers', default=defaults['workers'], show_default=True,
        help="Number of worker threads")
@click.option('-o', '--out', 'out',
        type=click.Path(dir_okay=False, writable=True),
        help="Path to the output JSON file")
def search_cli(r_max, y_bound, s_policy, extra_primes, show_rejected, prime_bound, window, workers, out):
    """
    Search CLI

    """

    run = RunLog('search')
    run.start()

    try:

        try:
            extra = fields.PlaceSet(tuple(utils.parse_int_list(extra_primes))).finite_primes

            if extra and s_policy == 'minimal':
                run.warning('WARNING: --extra-primes is ignored under the minimal S policy.')

            settings = {'s_policy': s_policy,
                        'extra_primes': tuple(extra),
                        'y_bound': y_bound,
                        'prime_bound': prime_bound,
                        'stabilization_window': window}

            result = srch.search(r_max, settings, workers=workers, log_path=run.log_path)

        except ValueError as exc:
            click.echo(f'Error: {exc}', err=True)
            sys.exit(1)

        data = result.to_dict(show_rejected=show_rejected)
        text = reports.to_json(data)

        if out:
            utils.write_text_to_file(out, text)
            click.echo(search_summary(data, show_rejected=show_rejected))
            run.info(f'Search result written to {out}')

        else:
            click.echo(text, nl=False)

    finally:
        run.end()

    sys.exit(exit_code(result.status))

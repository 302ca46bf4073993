"""Defines the ``histick verify`` CLI"""

import sys
import click

from histick.general import utils
from histick.general.config import analysis_defaults
from histick.general.runlog import RunLog
from histick.analysis import battery as bat
from histick.analysis import reports
from histick.analysis.suites import run_suites
from histick.analysis.pipeline import AnalysisSettings
from histick.analysis.analysis_reports import battery_summary
from histick.analysis.verdicts import FAILED

defaults = analysis_defaults()

@click.command(help="""Check every identity over a battery of fields and run the property suites

    Example usage:

        histick verify

        histick verify --battery my_battery.cfg --workers 8

    A battery file is an INI file with one section per entry:

        [q2q5]
        field = 2,5
        s = 2,5

    S must contain every ramified prime of the field. Without --battery a
    built-in battery of quadratic, biquadratic and triquadratic fields is used.

    Exit code: 0 if no claim failed, 1 otherwise.
""")
@click.option('-b', '--battery', 'battery_path',
        type=click.Path(dir_okay=False),
        help="Path to a battery file")
@click.option('--seed', default=defaults['seed'], show_default=True,
        help="Seed of the randomized property suites")
@click.option('-n', '--trials', default=25, show_default=True,
        help="Random trials per property")
@click.option('-p', '--prime-bound', 'prime_bound',
        default=defaults['prime_bound'], show_default=True,
        help="Largest prime fed to the annihilator computation")
@click.option('-w', '--window', 'window',
        default=defaults['stabilization_window'], show_default=True,
        help="Admissible primes without change required for stabilization")
@click.option('-y', '--y-bound', 'y_bound',
        default=defaults['y_bound'], show_default=True,
        help="Bound on y in the x^2 - 2y^2 = r search")
@click.option('-j', '--workers', default=defaults['workers'], show_default=True,
        help="Number of worker threads")
@click.option('-o', '--out', 'out',
        type=click.Path(dir_okay=False, writable=True),
        help="Path to a JSON file with every report and verdict")
def verify_cli(battery_path, seed, trials, prime_bound, window, y_bound, workers, out):
    """
    Verify CLI

    """

    run = RunLog('verify')
    run.start()

    try:

        try:
            entries = bat.load_battery(battery_path) if battery_path else bat.default_battery()

        except (ValueError, FileNotFoundError) as exc:
            click.echo(f'Error: {exc}', err=True)
            sys.exit(1)

        settings = AnalysisSettings(prime_bound=prime_bound, stabilization_window=window, y_bound=y_bound)

        analyses = [r.to_dict() for r in bat.run_battery(entries, settings, workers=workers,
                                                        log_path=run.log_path)]
        suite_verdicts = [v.to_dict() for v in run_suites(seed, trials)]

        click.echo(battery_summary(analyses, suite_verdicts, seed))

        if out:
            utils.write_text_to_file(out, reports.to_json({'seed': seed,
                                                          'battery': [e.to_dict() for e in entries],
                                                          'reports': analyses,
                                                          'property_verdicts': suite_verdicts}))
            run.info(f'Results written to {out}')

        failed = any(v['status'] == FAILED for r in analyses for v in r['verdicts'])
        failed = failed or any(v['status'] == FAILED for v in suite_verdicts)

    finally:
        run.end()

    sys.exit(1 if failed else 0)

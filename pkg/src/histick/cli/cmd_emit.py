"""Defines the ``histick emit`` CLI"""

import sys
import json
import click

from histick.general import utils
from histick.analysis import reports

@click.command(help=f"""Convert a stored analysis report to JSON, CSV or Markdown

    Example usage:

        histick emit q2q5.json --format csv --out q2q5.csv

    JSON output is the canonical re-dump of the report (sorted keys).

    CSV output has one row per character with the columns

        {", ".join(reports.CSV_COLUMNS)}

    Rationals are written as num/den. The minus-part columns are empty for
    the trivial character.

    Markdown output contains a header table, an index table and a verdict
    table.
""")
@click.argument('report_path', type=click.Path(exists=True, dir_okay=False))
@click.option('-f', '--format', 'fmt', type=click.Choice(reports.FORMATS),
        default='json', show_default=True,
        help="Output format")
@click.option('-o', '--out', 'out',
        type=click.Path(dir_okay=False, writable=True),
        help="Output path; standard output if omitted")
def emit_cli(report_path, fmt, out):
    """
    Emit CLI

    """

    try:
        report = utils.load_json(report_path)

    except json.JSONDecodeError as exc:
        click.echo(f'Error: {report_path} is not a JSON report ({exc}).', err=True)
        sys.exit(1)

    text = reports.render(report, fmt)

    if out:

        try:
            utils.write_text_to_file(out, text)

        except OSError as exc:
            click.echo(f'Error: cannot write {out} ({exc}).', err=True)
            sys.exit(1)

    else:
        click.echo(text, nl=False)

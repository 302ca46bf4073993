"""Serialize analysis reports as JSON, CSV or Markdown"""

import io
import csv

from histick.general import utils

FORMATS = ('json', 'csv', 'markdown')

CSV_COLUMNS = ('chi', 'd', 'disc', 'raw_L', 'adjusted_L', 'w2', 'w2_minus', 'delta',
               'places', 'k2_Echi', 'k2_minus', 'theta_component')


def to_json(report):
    """Canonical JSON text of a report dict"""

    return utils.dump_json(report)


def to_csv(report):
    """
    One row per character with the columns of ``CSV_COLUMNS``

    Missing values (the trivial character has no minus part) are empty.

    """

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, extrasaction='ignore',
                            lineterminator='\n')
    writer.writeheader()

    for row in report.get('characters', []):
        writer.writerow({k: ('' if row.get(k) is None else row.get(k)) for k in CSV_COLUMNS})

    return buffer.getvalue()


def _md_cell(value):

    if value is None:
        return ''

    if isinstance(value, (list, dict)):
        return utils.dump_json(value).strip().replace('\n', ' ').replace('|', '\\|')

    return str(value).replace('|', '\\|')


def _md_table(headers, rows):

    lines = ['| ' + ' | '.join(headers) + ' |',
             '|' + '|'.join('---' for _ in headers) + '|']

    for row in rows:
        lines.append('| ' + ' | '.join(_md_cell(v) for v in row) + ' |')

    return '\n'.join(lines)


def to_markdown(report):
    """Header, index and verdict tables"""

    header = report.get('header', {})
    indices = report.get('indices') or {}

    parts = [f'# histick report for Q({header.get("field_spec", "")})', '']

    parts.append(_md_table(['key', 'value'], [
        ['field', header.get('field_spec')],
        ['S', 'inf,' + header.get('s_spec', '') if header.get('s_spec') else 'inf'],
        ['S added', header.get('s_added')],
        ['first layer chi', header.get('first_layer_chi')],
        ['status', report.get('status')],
        ]))

    if indices:
        parts += ['', '## Indices', '']
        parts.append(_md_table(['index', 'value'], [
            [name, indices[name]] for name in ('S:R', 'R:Stick', 'S:StickS', 'StickS:Stick')
            ]))

    parts += ['', '## Verdicts', '']
    parts.append(_md_table(['claim', 'status', 'lhs', 'rhs', 'statement'], [
        [v['claim'], v['status'], v['lhs'], v['rhs'], v['anchor']]
        for v in report.get('verdicts', [])
        ]))

    return '\n'.join(parts) + '\n'


def render(report, fmt):
    """
    Render a report dict in the requested format

    Raises
    ------
    ValueError
        If ``fmt`` is not one of ``FORMATS``

    """

    match fmt:

        case 'json':
            return to_json(report)

        case 'csv':
            return to_csv(report)

        case 'markdown':
            return to_markdown(report)

        case _:
            raise ValueError(f'Invalid report format "{fmt}"; expected one of {FORMATS}.')

"""Generate human-readable summaries of analyses, batteries and searches"""

from histick.general import log
from histick.analysis.verdicts import FAILED


def analysis_summary(report):
    """
    Return a formatted summary of one analysis report

    Parameters
    ----------
    report : dict
        Serialized AnalysisReport

    Returns
    -------
    summary : str
        Boxed header, index block and verdict table

    """

    header = report['header']

    summary = log.boxed_message(f'ANALYSIS: Q({header["field_spec"]})', centered=True) + '\n\n'

    msg = ''
    msg += f'{"Field":<16} Q({header["field_spec"]})\n'
    msg += f'{"S":<16} {{inf,{header["s_spec"]}}}\n' if header['s_spec'] else f'{"S":<16} {{inf}}\n'
    msg += f'{"S added":<16} {header["s_added"] or "-"}\n'
    msg += f'{"First layer chi":<16} {header["first_layer_chi"]}\n'
    msg += f'{"Status":<16} {report["status"]}'

    summary += log.boxed_message(msg, header='Input') + '\n\n'

    if report.get('indices'):

        indices = report['indices']

        msg = ''
        for name in ('S:R', 'R:Stick', 'S:StickS', 'StickS:Stick', 'k2_E_predicted'):
            msg += f'{name:<16} {indices[name]}\n'

        summary += log.boxed_message(msg.rstrip('\n'), header='Indices') + '\n\n'

    summary += verdict_table(report['verdicts'])

    return summary


def verdict_table(verdicts):
    """Aligned claim/status table of serialized verdicts"""

    if not verdicts:
        return 'No verdicts.\n'

    width = max(len('Claim'), *(len(v['claim']) for v in verdicts))

    table = log.underlined_message(f'{"Claim":<{width}}  Status') + '\n'

    for v in verdicts:
        table += f'{v["claim"]:<{width}}  {v["status"]}\n'

    return table


def battery_summary(reports, suite_verdicts, seed):
    """
    Claims x fields table of a battery run

    Parameters
    ----------
    reports : list of dict
        Serialized AnalysisReports
    suite_verdicts : list of dict
        Serialized property-suite verdicts
    seed : int
        Seed used by the property suites

    Returns
    -------
    summary : str
        The table followed by the failing claims, if any

    """

    summary = log.boxed_message('VERIFICATION BATTERY', centered=True) + '\n'
    summary += log.center(f'{len(reports)} analyses, property seed {seed}') + '\n\n'

    claims = sorted({v['claim'] for r in reports for v in r['verdicts']})
    labels = [f'{r["header"]["field_spec"]}|{r["header"]["s_spec"]}' for r in reports]

    width = max([len('Claim')] + [len(c) for c in claims])

    summary += log.underlined_message(f'{"Claim":<{width}}  ' + '  '.join(labels)) + '\n'

    for claim in claims:

        row = f'{claim:<{width}}  '
        cells = []

        for label, r in zip(labels, reports):
            statuses = {v['status'] for v in r['verdicts'] if v['claim'] == claim}
            cells.append(f'{_status_mark(statuses):<{len(label)}}')

        summary += row + '  '.join(cells) + '\n'

    summary += '\n' + verdict_table(suite_verdicts)

    failed = [f'{v["claim"]} [{v["field"]}|{v["s"]}]'
              for r in reports for v in r['verdicts'] if v['status'] == FAILED]
    failed += [v['claim'] for v in suite_verdicts if v['status'] == FAILED]

    if failed:
        summary += '\n' + log.boxed_message('\n'.join(failed), header='Failed claims') + '\n'

    return summary


def _status_mark(statuses):

    if not statuses:
        return '.'

    if FAILED in statuses:
        return 'FAIL'

    if 'conditional' in statuses:
        return 'cond'

    return 'ok'


def search_summary(result, show_rejected=False):
    """
    Table of the family search rows

    Parameters
    ----------
    result : dict
        Serialized SearchResult
    show_rejected : bool
        If True, the rejected r are listed with their reasons

    """

    summary = log.boxed_message(f'FAMILY SEARCH r <= {result["r_max"]}', centered=True) + '\n\n'

    summary += log.underlined_message(f'{"r":>5}  {"witness":<14}  {"S":<14}  {"R:Stick":>10}  Status') + '\n'

    for row in result['rows']:

        witness = row['norm_witness']
        witness = f'({witness["x"]},{witness["y"]})' if witness else '-'
        r_stick = row['index_data']['R:Stick'] if row['index_data'] else '-'

        summary += f'{row["r"]:>5}  {witness:<14}  {row["s_spec"]:<14}  {r_stick:>10}  {row["status"]}\n'

        if row['s_policy_violation']:
            summary += f'{"":>5}  S contains {row["s_policy_violation"]}, congruent to 1 mod 4\n'

    if show_rejected and 'rejected' in result:

        summary += '\n' + log.underlined_message(f'{"r":>5}  Reason') + '\n'

        for entry in result['rejected']:
            summary += f'{entry["r"]:>5}  {entry["reason"]}\n'

    return summary

from geoqa.eval.runner import EvalReport
from geoqa.modules.error import SuiteError
from geoqa.modules.static import DiffHeader, NoAnswerText, ReportHeader

_NAME_WIDTH = 26


def render_table(reports: list[EvalReport], suite_name: str = 'suite') -> str:
    lines = [ReportHeader.strip('\n') % {'suite': suite_name, 'count': len(reports[0].rows) if reports else 0}, '']
    lines.append(f'{"":<{_NAME_WIDTH}}{"Precision":>10}{"Recall":>10}{"F-Measure":>11}')
    for report in reports:
        scores = report.aggregate
        lines.append(f'{report.method:<{_NAME_WIDTH}}{scores.precision:>10.2f}{scores.recall:>10.2f}{scores.f:>11.2f}')
    return '\n'.join(lines) + '\n'


def disagreements(first: EvalReport, second: EvalReport) -> list[str]:
    return [
        row.question for row, other in zip(first.rows, second.rows)
        if row.returned != other.returned
    ]


def compare_methods(first: EvalReport, second: EvalReport, suite_name: str = 'suite') -> str:
    """
    Comparison table with one row per method, followed by the questions whose answer sets differ

    Raises:
        SuiteError: the reports were produced from different suites
    """
    if first.questions != second.questions:
        raise SuiteError('reports cover different suites')

    lines = [render_table([first, second], suite_name).rstrip('\n')]
    differing = disagreements(first, second)
    if differing:
        lines.append(DiffHeader.rstrip('\n'))
        for question in differing:
            lines.append(f'- {question}')
            for report in (first, second):
                row = report.row(question)
                shown = ', '.join(sorted(row.returned)) or row.error or NoAnswerText
                flag = f'  [ambiguous: {", ".join(row.eligible)}]' if row.ambiguous else ''
                lines.append(f'    {report.method}: {shown}{flag}')
    return '\n'.join(lines) + '\n'

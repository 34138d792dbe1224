"""
Text rendering of answers for the terminal
"""

from geoqa.formulation.pipeline import Answer
from geoqa.kb.terms import term_key, term_sort_key
from geoqa.modules.static import NoAnswerText
from geoqa.nlp.conllx import format_row
from geoqa.sparql.ast import SolutionSet


def format_bindings(solutions: SolutionSet | None) -> str:
    if solutions is None or not solutions.bindings:
        return NoAnswerText
    header = [str(var) for var in solutions.variables]
    ordered = sorted(solutions.rows(), key=lambda row: [term_sort_key(term) for term in row])
    rows = [[term_key(term) for term in row] for row in ordered]
    widths = [max(len(cell) for cell in column) for column in zip(header, *rows)]
    lines = ['  '.join(cell.ljust(width) for cell, width in zip(header, widths)).rstrip()]
    lines.append('  '.join('-' * width for width in widths))
    lines.extend('  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows)
    return '\n'.join(lines)


def format_trace(answer: Answer) -> str:
    sentence = answer.sentence
    lines = ['# analysis']
    labels = sentence.ner_labels or [None] * len(sentence)
    for token, analysis, label in zip(sentence.tokens, sentence.analyses, labels):
        lines.append(f'{token.surface}\t{analysis}\t{label.value if label else "-"}')
    if sentence.dep_rows:
        lines.append('# dependencies')
        lines.extend(format_row(row) for row in sentence.dep_rows)
    lines.append(f'# question type: {answer.question_type.value}')
    if answer.frame is not None:
        lines.append('# frame')
        lines.extend(f'{name}: {value}' for name, value in answer.frame.slots().items())
    else:
        lines.append('# formulation')
        lines.extend(answer.trace)
    return '\n'.join(lines)


def format_answer(answer: Answer, show_sparql: bool = True, show_trace: bool = False) -> str:
    parts = []
    if show_trace:
        parts.append(format_trace(answer))
    if show_sparql:
        parts.append(answer.query_text.rstrip('\n'))
    if answer.solutions is not None:
        parts.append(format_bindings(answer.solutions))
    return '\n\n'.join(parts)

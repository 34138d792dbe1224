"""
CoNLL-X reader and writer

Two layouts are read: the standard one (head index in HEAD, relation in DEPREL) and the
layout where HEAD is `_`, DEPREL carries the head index and PDEPREL the relation. The layout
is detected per sentence from whether DEPREL is numeric. Writing always uses the standard layout.
"""

import hashlib
from pathlib import Path

from geoqa.modules.error import ConllError
from geoqa.nlp.sentence import DepRow, Relation

ID, FORM, LEMMA, CPOSTAG, POSTAG, FEATS, HEAD, DEPREL, PHEAD, PDEPREL = range(10)


def _blocks(text: str):
    lines: list[tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip('\r\n')
        if line.startswith('#'):
            continue
        if not line.strip():
            if lines:
                yield lines
                lines = []
            continue
        lines.append((number, line))
    if lines:
        yield lines


def _int(text: str, number: int, column: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConllError(f'non-numeric {column} "{text}"', number)


def _relation(text: str, number: int) -> Relation:
    try:
        return Relation(text)
    except ValueError:
        raise ConllError(f'unknown relation "{text}"', number)


def _parse_sentence(lines: list[tuple[int, str]]) -> list[DepRow]:
    split = []
    for number, line in lines:
        columns = line.split('\t')
        if len(columns) != 10:
            raise ConllError(f'expected 10 columns, found {len(columns)}', number)
        split.append((number, columns))

    shifted_layout = all(columns[DEPREL].isdigit() for _, columns in split)
    rows = []
    for number, columns in split:
        if shifted_layout:
            head = _int(columns[DEPREL], number, 'head index')
            relation = _relation(columns[PDEPREL], number)
            phead, pdeprel = '_', '_'
        else:
            head = _int(columns[HEAD], number, 'head index')
            relation = _relation(columns[DEPREL], number)
            phead, pdeprel = columns[PHEAD], columns[PDEPREL]
        rows.append(DepRow(
            id=_int(columns[ID], number, 'token id'),
            form=columns[FORM],
            lemma=columns[LEMMA],
            cpostag=columns[CPOSTAG],
            postag=columns[POSTAG],
            feats=columns[FEATS],
            head=head,
            relation=relation,
            phead=phead,
            pdeprel=pdeprel,
        ))

    first = lines[0][0]
    if [row.id for row in rows] != list(range(1, len(rows) + 1)):
        raise ConllError('token ids must run 1..n', first)
    for row, (number, _) in zip(rows, lines):
        if not 0 <= row.head <= len(rows) or row.head == row.id:
            raise ConllError(f'invalid head {row.head} for token {row.id}', number)
    roots = [row for row in rows if row.head == 0]
    if len(roots) != 1 or roots[0].relation != Relation.PREDICATE:
        raise ConllError('exactly one PREDICATE row must have head 0', first)
    return rows


def read_conllx(text: str) -> list[list[DepRow]]:
    """All sentences of a CoNLL-X document; errors report the 1-based line number."""
    return [_parse_sentence(lines) for lines in _blocks(text)]


def read_conllx_file(path: str | Path) -> list[list[DepRow]]:
    return read_conllx(Path(path).read_text(encoding='utf-8'))


def question_hash(forms: list[str]) -> str:
    """Key of a question by its token forms, so spacing before punctuation does not matter."""
    return hashlib.sha1(' '.join(forms).encode('utf-8')).hexdigest()


def index_by_question(sentences: list[list[DepRow]]) -> dict[str, list[DepRow]]:
    index: dict[str, list[DepRow]] = {}
    for rows in sentences:
        index.setdefault(question_hash([row.form for row in rows]), rows)
    return index


def format_row(row: DepRow) -> str:
    return '\t'.join([
        str(row.id), row.form, row.lemma, row.cpostag, row.postag, row.feats,
        str(row.head), row.relation.value, row.phead, row.pdeprel,
    ])


def write_conllx(sentences: list[list[DepRow]]) -> str:
    return '\n\n'.join('\n'.join(format_row(row) for row in rows) for rows in sentences) + '\n'

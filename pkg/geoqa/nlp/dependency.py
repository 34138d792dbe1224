"""
Rule-based dependency parser for the question shapes the pipeline covers

Every head points to the right or to the predicate, so the output is always a tree.
"""

from geoqa.modules.error import ParseError
from geoqa.nlp.sentence import DepRow, MorphAnalysis, Relation, Token


def _find_predicate(analyses: list[MorphAnalysis]) -> int:
    for index in range(len(analyses), 0, -1):
        analysis = analyses[index - 1]
        if analysis.pos == 'Punc':
            continue
        if (analysis.pos == 'Verb' and not analysis.is_participle) or analysis.pos in ('Postp', 'Pron') \
                or analysis.is_copular:
            return index
    raise ParseError('no predicate')


def _next_where(analyses: list[MorphAnalysis], index: int, test) -> int | None:
    for other in range(index + 1, len(analyses) + 1):
        if test(analyses[other - 1]):
            return other
    return None


def _attach(analyses: list[MorphAnalysis], index: int, predicate: int) -> tuple[Relation, int]:
    analysis = analyses[index - 1]
    following = analyses[index] if index < len(analyses) else None

    def nearest(test) -> int:
        return _next_where(analyses, index, test) or predicate

    if analysis.pos == 'Punc':
        return Relation.PUNCTUATION, predicate
    if index == predicate - 1 and analysis.pos == 'Verb' and not analysis.is_participle:
        return Relation.ARGUMENT, predicate
    if analysis.is_nominal and analysis.case == 'Acc':
        return Relation.OBJECT, nearest(lambda other: other.is_verbal)
    if analysis.is_nominal and analysis.case == 'Gen':
        return Relation.POSSESSOR, nearest(lambda other: other.is_nominal and other.is_possessed)
    if analysis.is_bare_nominative and following is not None and following.is_nominal and following.is_possessed:
        return Relation.POSSESSOR, index + 1
    if analysis.is_nominal and analysis.case == 'Nom' and not analysis.derivations and analysis.pos != 'Pron':
        if index == predicate - 1:
            return Relation.SUBJECT, predicate
        if analysis.possessive == 'P3sg' and following is not None and following.is_interrogative:
            return Relation.SUBJECT, predicate
    if analysis.is_nominal and (analysis.case in ('Dat', 'Loc', 'Abl') or analysis.is_relative):
        return Relation.MODIFIER, nearest(lambda other: other.is_verbal)
    if analysis.is_participle:
        return Relation.MODIFIER, nearest(lambda other: other.is_finite_verb)
    if analysis.pos == 'Adj' and not analysis.features and not analysis.derivations:
        return Relation.MODIFIER, nearest(lambda other: other.pos == 'Noun' or other.is_verbal)
    if analysis.pos == 'Pron':
        return Relation.ARGUMENT, predicate
    if analysis.is_bare_nominative and following is not None and following.pos == 'Noun':
        return Relation.CLASSIFIER, index + 1
    return Relation.MODIFIER, predicate


def parse_dependencies(tokens: list[Token], analyses: list[MorphAnalysis]) -> list[DepRow]:
    """
    Assign a head and relation to every token. The last verb, postposition, pronoun or
    copula-bearing word is the PREDICATE; a sentence without one raises ParseError.
    """
    if len(tokens) != len(analyses):
        raise ValueError('tokens and analyses must be parallel')
    predicate = _find_predicate(analyses)
    rows = []
    for token, analysis in zip(tokens, analyses):
        if token.index == predicate:
            relation, head = Relation.PREDICATE, 0
        else:
            relation, head = _attach(analyses, token.index, predicate)
        rows.append(DepRow(
            id=token.index,
            form=token.surface,
            lemma=analysis.lemma,
            cpostag=analysis.pos,
            postag=analysis.pos,
            feats=analysis.feats,
            head=head,
            relation=relation,
        ))
    return rows


def is_tree(rows: list[DepRow]) -> bool:
    """Exactly one root and every head chain reaches 0 within len(rows) steps."""
    heads = {row.id: row.head for row in rows}
    if [row.head for row in rows].count(0) != 1:
        return False
    for start in heads:
        current, steps = start, 0
        while current != 0:
            if current not in heads or steps > len(rows) or heads[current] == current:
                return False
            current = heads[current]
            steps += 1
    return True

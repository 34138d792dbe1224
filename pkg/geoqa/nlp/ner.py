from geoqa.kb.base import KnowledgeBase
from geoqa.kb.lookup import lookup_individual_by_label
from geoqa.nlp.sentence import EntitySpan, MorphAnalysis, NerLabel


def tag_entities(analyses: list[MorphAnalysis], kb: KnowledgeBase) -> tuple[list[NerLabel], list[EntitySpan]]:
    """
    Greedy longest match of lemma sequences against the label gazetteer, left to right.

    Returns:
        BIO labels parallel to the tokens, and one span per match. A label shared by several
        individuals yields a span without `individual` whose `candidates` lists all of them.
    """
    keys = [analysis.key for analysis in analyses]
    labels = [NerLabel.OUTSIDE] * len(keys)
    spans = []
    window = kb.gazetteer.max_length
    position = 0
    while position < len(keys):
        if analyses[position].pos == 'Punc' or window == 0:
            position += 1
            continue
        match = lookup_individual_by_label(keys[position:position + window], kb)
        if match is None:
            position += 1
            continue
        labels[position] = NerLabel.BEGIN
        for offset in range(1, match.length):
            labels[position + offset] = NerLabel.INSIDE
        spans.append(EntitySpan(
            start=position + 1,
            end=position + match.length,
            lemmas=tuple(keys[position:position + match.length]),
            individual=match.individual,
            candidates=match.candidates,
        ))
        position += match.length
    return labels, spans


def spans_from_labels(labels: list[NerLabel], keys: list[str], kb: KnowledgeBase | None = None) -> list[EntitySpan]:
    """Maximal B,I* runs; with a knowledge base each run is resolved through the gazetteer."""
    spans = []
    start = None
    for index, label in enumerate([*labels, NerLabel.OUTSIDE], start=1):
        if start is not None and label != NerLabel.INSIDE:
            lemmas = tuple(keys[start - 1:index - 1])
            match = kb.gazetteer.labels.get(lemmas) if kb is not None else None
            candidates = tuple(match or ())
            spans.append(EntitySpan(start, index - 1, lemmas,
                                    candidates[0] if len(candidates) == 1 else None, candidates))
            start = None
        if label == NerLabel.BEGIN:
            start = index
    return spans


def is_well_formed(labels: list[NerLabel]) -> bool:
    previous = NerLabel.OUTSIDE
    for label in labels:
        if label == NerLabel.INSIDE and previous == NerLabel.OUTSIDE:
            return False
        previous = label
    return True

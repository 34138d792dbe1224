from geoqa.kb.base import KnowledgeBase
from geoqa.kb.lexicon import AxiomKind
from geoqa.kb.lookup import check_axiom_type
from geoqa.nlp.sentence import AnnotatedSentence, MorphAnalysis, Relation

QUANTIFIER_LEMMAS = ('kaç', 'toplam')
SUPERLATIVE_BIGRAMS = (('Adj', 'Noun'), ('Adv', 'Adj'), ('Adv', 'Noun'))


def _superlative_bigram(following: list[MorphAnalysis]) -> bool:
    return len(following) == 2 and (following[0].pos, following[1].pos) in SUPERLATIVE_BIGRAMS


def _measures_subject(sentence: AnnotatedSentence, kadar: int, kb: KnowledgeBase | None) -> bool:
    """Copular "ne kadardır" asking for a data property value of the subject, not for an aggregate."""
    if not sentence.analysis(kadar).is_copular or not sentence.dep_rows:
        return False
    subjects = sentence.with_relation(Relation.SUBJECT)
    if kb is None:
        return bool(subjects)
    return any(check_axiom_type(sentence.lemma(index), kb) == AxiomKind.DATA_PROPERTY for index in subjects)


def is_quantitative(sentence: AnnotatedSentence, kb: KnowledgeBase | None = None) -> bool:
    """
    QT2 trigger: "kaç", "toplam", "en" before an Adj+Noun / Adv+Adj / Adv+Noun bigram,
    or "ne kadar" unless it is the copular value question over a data-property subject.
    """
    analyses = sentence.analyses
    for position, analysis in enumerate(analyses):
        key = analysis.key
        if key in QUANTIFIER_LEMMAS:
            return True
        if key == 'en' and analysis.pos == 'Adv' and _superlative_bigram(analyses[position + 1:position + 3]):
            return True
        if key == 'ne' and position + 1 < len(analyses) and analyses[position + 1].key == 'kadar':
            if not _measures_subject(sentence, position + 2, kb):
                return True
    return False

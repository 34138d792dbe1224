import logging

from geoqa.kb.base import KnowledgeBase
from geoqa.modules.decorators import stage
from geoqa.modules.error import ConllError
from geoqa.nlp.conllx import index_by_question, question_hash, read_conllx
from geoqa.nlp.dependency import parse_dependencies
from geoqa.nlp.lexicon import PosLexicon
from geoqa.nlp.morphology import analyze_morphology, disambiguate
from geoqa.nlp.ner import tag_entities
from geoqa.nlp.sentence import AnnotatedSentence, DepRow, MorphAnalysis, Token
from geoqa.nlp.tokenizer import tokenize

logger = logging.getLogger('geoqa.nlp')


class Analyzer:
    """Pre-processing layer: tokens, morphology, location tags and dependencies for one question."""

    def __init__(self, lexicon: PosLexicon):
        self.lexicon = lexicon

    @stage('morphology')
    def morphology(self, tokens: list[Token]) -> list[MorphAnalysis]:
        return disambiguate([analyze_morphology(token, self.lexicon) for token in tokens])

    def label_lemmas(self, label: str) -> tuple[str, ...]:
        """Lemma keys of an individual's label, used to build gazetteer and lexicalization keys."""
        analyses = self.morphology(tokenize(label))
        return tuple(analysis.key for analysis in analyses if analysis.pos != 'Punc')

    @stage('ner')
    def entities(self, analyses: list[MorphAnalysis], kb: KnowledgeBase):
        return tag_entities(analyses, kb)

    def analyze(self, question: str, kb: KnowledgeBase) -> AnnotatedSentence:
        tokens = tokenize(question)
        analyses = self.morphology(tokens)
        labels, spans = self.entities(analyses, kb)
        rows = parse_dependencies(tokens, analyses)
        logger.debug(f'Analyzed "{question}": {len(tokens)} tokens, {len(spans)} entity spans')
        return AnnotatedSentence(question, tokens, analyses, labels, rows, spans)

    def from_gold(self, question: str, gold_text: str, kb: KnowledgeBase) -> AnnotatedSentence:
        """
        Build the sentence from a gold CoNLL-X analysis instead of the built-in heuristics.
        Gold sentences are keyed by the hash of their FORM column; the question is looked up
        by the hash of its tokens.
        """
        surfaces = [token.surface for token in tokenize(question)]
        rows = index_by_question(read_conllx(gold_text)).get(question_hash(surfaces))
        if rows is None:
            raise ConllError(f'no gold sentence matches "{question}"')
        return self.from_rows(question, rows, kb)

    def from_rows(self, question: str, rows: list[DepRow], kb: KnowledgeBase) -> AnnotatedSentence:
        tokens = [Token(row.form, row.id) for row in rows]
        analyses = [MorphAnalysis.from_conll(row.lemma, row.cpostag, row.feats) for row in rows]
        labels, spans = self.entities(analyses, kb)
        return AnnotatedSentence(question, tokens, analyses, labels, list(rows), spans)

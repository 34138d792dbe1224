"""
Question answering pipeline: analysis, question typing, formulation, serialization, evaluation
"""

import logging
from dataclasses import dataclass, field

from geoqa.config import Pipeline
from geoqa.formulation.classifier import FrameClassifier
from geoqa.formulation.frames import QueryFrame, QuestionType
from geoqa.formulation.generator import generate_sparql
from geoqa.formulation.quantitative import is_quantitative
from geoqa.formulation.templates import instantiate_template
from geoqa.kb.base import KnowledgeBase
from geoqa.kb.terms import Iri, Term, term_key
from geoqa.modules.decorators import stage
from geoqa.modules.error import ConllError
from geoqa.nlp.analyzer import Analyzer
from geoqa.nlp.conllx import format_row
from geoqa.nlp.sentence import AnnotatedSentence
from geoqa.sparql.ast import SelectQuery, SolutionSet
from geoqa.sparql.evaluator import evaluate
from geoqa.sparql.serializer import serialize

logger = logging.getLogger('geoqa.pipeline')


@dataclass
class Answer:
    question: str
    sentence: AnnotatedSentence
    question_type: QuestionType
    query: SelectQuery
    query_text: str
    solutions: SolutionSet | None = None
    frame: QueryFrame | None = None
    trace: list[str] = field(default_factory=list)
    # properties that could have linked the answer to the entity, when more than one did
    eligible: tuple[Iri, ...] = ()

    def answers(self) -> list[Term]:
        """Distinct bindings of the first projected variable, in solution order."""
        if not self.solutions or not self.solutions.variables:
            return []
        first = self.solutions.variables[0]
        return list(dict.fromkeys(binding[first] for binding in self.solutions.bindings))

    def to_dict(self) -> dict:
        record = {
            'question': self.question,
            'question_type': self.question_type.value,
            'query': self.query_text,
            'frame': self.frame.slots() if self.frame else None,
            'trace': self.trace,
            'eligible': [str(prop) for prop in self.eligible],
            'tokens': [token.surface for token in self.sentence.tokens],
            'morphology': [str(analysis) for analysis in self.sentence.analyses],
            'ner': [label.value for label in self.sentence.ner_labels],
            'dependencies': [format_row(row) for row in self.sentence.dep_rows],
        }
        if self.solutions is not None:
            record['variables'] = [str(var) for var in self.solutions.variables]
            record['bindings'] = [[term_key(term) for term in row] for row in self.solutions.rows()]
            record['answers'] = [term_key(term) for term in self.answers()]
            record['diagnostics'] = self.solutions.diagnostics
        return record


class QAPipeline:
    def __init__(self, kb: KnowledgeBase, analyzer: Analyzer, classifier: FrameClassifier,
                 gold_conll: str | None = None, max_reentries: int = Pipeline.MAX_REENTRIES):
        self.kb = kb
        self.analyzer = analyzer
        self.classifier = classifier
        self.gold_conll = gold_conll
        self.max_reentries = max_reentries

    def analyze(self, question: str) -> AnnotatedSentence:
        if self.gold_conll:
            try:
                return self.analyzer.from_gold(question, self.gold_conll, self.kb)
            except ConllError as e:
                logger.debug(f'No gold analysis used for "{question}": {e}')
        return self.analyzer.analyze(question, self.kb)

    @stage('formulation')
    def formulate(self, sentence: AnnotatedSentence) -> tuple[QuestionType, SelectQuery, QueryFrame | None, list[str]]:
        if is_quantitative(sentence, self.kb):
            frame = self.classifier.classify(sentence, self.kb)
            return QuestionType.QT2, instantiate_template(frame), frame, [f'frame: {frame.slots()}']
        result = generate_sparql(sentence, self.kb, self.max_reentries)
        return QuestionType.QT1, result.query, None, result.trace

    @stage('serialize')
    def _serialize(self, query: SelectQuery) -> str:
        return serialize(query, self.kb.prefix_map)

    @stage('evaluate')
    def _evaluate(self, query: SelectQuery) -> SolutionSet:
        return evaluate(query, self.kb)

    def answer(self, question: str, run_query: bool = True) -> Answer:
        """
        Answer one Turkish question

        Args:
            question: raw question text
            run_query: False stops after serialization

        Returns:
            Answer carrying the analysis, question type, frame or trace, query text and solutions
        """
        sentence = self.analyze(question)
        question_type, query, frame, trace = self.formulate(sentence)
        query_text = self._serialize(query)
        solutions = self._evaluate(query) if run_query else None
        if solutions is not None:
            logger.info(f'{question_type.value} "{question}" -> {len(solutions)} rows')
        return Answer(question, sentence, question_type, query, query_text, solutions, frame, trace)

"""
Suite runs for the hybrid pipeline and the ontology-only baseline
"""

import logging
from dataclasses import dataclass, field
from typing import Callable

from geoqa.eval.baseline import OntologyBaseline
from geoqa.eval.metrics import Scores, macro_average, set_scores
from geoqa.eval.suite import GoldRecord
from geoqa.formulation.pipeline import Answer, QAPipeline
from geoqa.kb.terms import term_key
from geoqa.modules.error import GeoQAError

logger = logging.getLogger('geoqa.eval')

METHOD1 = 'Method 1 (hybrid)'
METHOD2 = 'Method 2 (ontology only)'


@dataclass
class QuestionResult:
    question: str
    returned: frozenset[str]
    gold: frozenset[str]
    scores: Scores
    query: str | None = None
    error: str | None = None
    eligible: tuple[str, ...] = ()

    @property
    def ambiguous(self) -> bool:
        return len(self.eligible) > 1

    def to_dict(self) -> dict:
        return {
            'question': self.question,
            'returned': sorted(self.returned),
            'gold': sorted(self.gold),
            **self.scores.as_dict(),
            'query': self.query,
            'error': self.error,
            'ambiguous': self.ambiguous,
            'eligible': list(self.eligible),
        }


@dataclass
class EvalReport:
    method: str
    rows: list[QuestionResult] = field(default_factory=list)

    @property
    def aggregate(self) -> Scores:
        return macro_average([row.scores for row in self.rows])

    @property
    def questions(self) -> list[str]:
        return [row.question for row in self.rows]

    def row(self, question: str) -> QuestionResult:
        return next(row for row in self.rows if row.question == question)

    def to_dict(self) -> dict:
        return {
            'method': self.method,
            'aggregate': self.aggregate.as_dict(),
            'questions': [row.to_dict() for row in self.rows],
        }


def run_suite(method: str, suite: list[GoldRecord], answer: Callable[[str], Answer]) -> EvalReport:
    """Answer every suite question; a pipeline error scores as an empty answer set."""
    report = EvalReport(method)
    for record in suite:
        try:
            result = answer(record.question)
        except GeoQAError as e:
            logger.info(f'{method}: "{record.question}" failed: {e}')
            report.rows.append(QuestionResult(record.question, frozenset(), record.gold,
                                              set_scores(frozenset(), record.gold), error=str(e)))
            continue
        returned = frozenset(term_key(term) for term in result.answers())
        report.rows.append(QuestionResult(
            record.question, returned, record.gold, set_scores(returned, record.gold),
            query=result.query_text, eligible=tuple(str(prop) for prop in result.eligible),
        ))
    scores = report.aggregate
    logger.info(f'{method}: P={scores.precision:.2f} R={scores.recall:.2f} F={scores.f:.2f} '
                f'over {len(report.rows)} questions')
    return report


def run_method1(suite: list[GoldRecord], pipeline: QAPipeline) -> EvalReport:
    return run_suite(METHOD1, suite, pipeline.answer)


def run_method2(suite: list[GoldRecord], baseline: OntologyBaseline) -> EvalReport:
    return run_suite(METHOD2, suite, baseline.answer)

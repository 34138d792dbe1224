"""
Question suites: one JSON object per line
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from geoqa.modules.error import SuiteError

logger = logging.getLogger('geoqa.eval')

UNANSWERABLE = 'unanswerable'


@dataclass(frozen=True)
class GoldRecord:
    question: str
    gold: frozenset[str]
    gold_query: str | None = None
    tags: tuple[str, ...] = ()

    @property
    def unanswerable(self) -> bool:
        return UNANSWERABLE in self.tags


def _record(data, number: int) -> GoldRecord:
    if not isinstance(data, dict):
        raise SuiteError(f'line {number}: expected a JSON object')
    question = data.get('question')
    if not isinstance(question, str) or not question.strip():
        raise SuiteError(f'line {number}: "question" must be a non-empty string')
    gold = data.get('gold', [])
    if not isinstance(gold, list) or not all(isinstance(item, str) for item in gold):
        raise SuiteError(f'line {number}: "gold" must be a list of strings')
    tags = data.get('tags', [])
    if not isinstance(tags, list) or not all(isinstance(tag, str) for tag in tags):
        raise SuiteError(f'line {number}: "tags" must be a list of strings')
    if not gold and UNANSWERABLE not in tags:
        raise SuiteError(f'line {number}: empty gold set on a question not tagged "{UNANSWERABLE}"')
    gold_query = data.get('goldQuery')
    if gold_query is not None and not isinstance(gold_query, str):
        raise SuiteError(f'line {number}: "goldQuery" must be a string')
    return GoldRecord(question.strip(), frozenset(gold), gold_query, tuple(tags))


def parse_suite(text: str) -> list[GoldRecord]:
    records = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise SuiteError(f'line {number}: {e.msg}')
        records.append(_record(data, number))
    if not records:
        raise SuiteError('suite has no questions')
    return records


def load_suite(path: str | Path) -> list[GoldRecord]:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise SuiteError(f'cannot read suite "{path}": {e}')
    records = parse_suite(text)
    logger.info(f'Loaded {len(records)} questions from {path}')
    return records

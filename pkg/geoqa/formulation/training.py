"""
Labeled QT2 frames and the train / held-out scoring cycle
"""

import json
import logging
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from geoqa.config import Pipeline
from geoqa.formulation.classifier import frame_entity
from geoqa.formulation.features import FeatureEncoder
from geoqa.formulation.frames import QueryFrame, SuperlativeLexicon
from geoqa.formulation.mlp import (EPOCHS, HEADS, LEARNING_RATE, TrainedModel, TrainingReport, score, split_samples,
                                   train_qt2, validate_labels)
from geoqa.kb.base import KnowledgeBase
from geoqa.modules.error import ClassifierError
from geoqa.nlp.analyzer import Analyzer
from geoqa.nlp.lexicon import PosLexicon

logger = logging.getLogger('geoqa.formulation')


@dataclass(frozen=True)
class LabeledQuestion:
    question: str
    frame: QueryFrame


def parse_frames(text: str) -> list[LabeledQuestion]:
    records = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise ClassifierError(f'line {number}: {e.msg}')
        if not isinstance(data, dict) or not isinstance(data.get('question'), str):
            raise ClassifierError(f'line {number}: expected an object with a "question" string')
        slots = validate_labels({head: data.get(head, 'null') for head in HEADS}, f'line {number}: ')
        records.append(LabeledQuestion(data['question'], QueryFrame.from_slots(slots)))
    return records


def load_frames(path: str | Path) -> list[LabeledQuestion]:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise ClassifierError(f'cannot read labeled frames "{path}": {e}')
    return parse_frames(text)


def encode_questions(records: list[LabeledQuestion], encoder: FeatureEncoder, analyzer: Analyzer,
                     kb: KnowledgeBase, default_entity_name: str | None = None) -> list[tuple[np.ndarray, QueryFrame]]:
    samples = []
    for record in records:
        sentence = analyzer.analyze(record.question, kb)
        entity = frame_entity(sentence, kb, default_entity_name)
        samples.append((encoder.encode(sentence, entity.cls), record.frame))
    return samples


def train_from_frames(records: list[LabeledQuestion], lexicon: PosLexicon, superlatives: SuperlativeLexicon,
                      analyzer: Analyzer, kb: KnowledgeBase, train_fraction: float = 0.8,
                      seed: int = Pipeline.SEED, default_entity_name: str | None = None,
                      epochs: int = EPOCHS, learning_rate: float = LEARNING_RATE) -> tuple[TrainedModel, TrainingReport]:
    """
    Split labeled questions, train on one side and score exact frames on the other

    Returns:
        (TrainedModel carrying its feature layout, TrainingReport over the held-out side)
    """
    if not records:
        raise ClassifierError('labeled set is empty')
    encoder = FeatureEncoder.build(lexicon, superlatives, kb.schema)
    samples = encode_questions(records, encoder, analyzer, kb, default_entity_name)
    train, test = split_samples(samples, train_fraction, seed)
    network = train_qt2(train, seed, epochs, learning_rate)
    report = replace(score(network, test), train_size=len(train))
    logger.info(f'QT2 held-out exact-frame accuracy {report.exact_frame:.2f} on {report.test_size} frames')
    return TrainedModel(encoder, network, seed), report

"""
QT2 frame classifiers: the lexicon-driven default and the trained perceptron
"""

import logging
from typing import Protocol

from geoqa.formulation.entities import EntityRef, default_entity, resolve_entity
from geoqa.formulation.frames import QueryFrame, SuperlativeLexicon
from geoqa.formulation.mlp import TrainedModel
from geoqa.kb.base import KnowledgeBase
from geoqa.kb.lexicon import AxiomKind
from geoqa.kb.lookup import PropertyLink, find_properties, resolve_axiom
from geoqa.kb.terms import Iri
from geoqa.modules.decorators import stage
from geoqa.modules.error import FormulationError
from geoqa.nlp.sentence import AnnotatedSentence

logger = logging.getLogger('geoqa.formulation')


class FrameClassifier(Protocol):
    def classify(self, sentence: AnnotatedSentence, kb: KnowledgeBase) -> QueryFrame: ...


def frame_entity(sentence: AnnotatedSentence, kb: KnowledgeBase, fallback: str | None) -> EntityRef:
    entity = resolve_entity(sentence, kb)
    if entity is not None:
        return entity
    if fallback:
        return default_entity(fallback, kb)
    raise FormulationError('unresolvable frame: the question names no entity')


def orient(link: PropertyLink, kb: KnowledgeBase) -> Iri:
    """Property to write target-first (`?y P ?x`): a forward link is flipped to its inverse."""
    declared = kb.schema.object_property(link.property)
    if link.direction == 'forward' and declared.inverse_of is not None:
        return declared.inverse_of
    if link.direction == 'forward' and not declared.symmetric:
        logger.warning(f'{link.property} has no inverse, the target-first template reads it backwards')
    return link.property


class RuleBasedClassifier:
    def __init__(self, superlatives: SuperlativeLexicon, default_entity_name: str | None = None):
        self.superlatives = superlatives
        self.default_entity_name = default_entity_name

    def trigger(self, keys: list[str]) -> tuple[str, Iri | None, int]:
        """(function, data property, position of the last trigger word) from "en" + adjective or a quantifier."""
        for position, key in enumerate(keys):
            if key == 'en':
                entry = self.superlatives.match(keys, position + 1)
                if entry is not None:
                    return entry.function_name, entry.data_property, position + len(entry.lemmas)
        for position, key in enumerate(keys):
            function_name = self.superlatives.quantifier(key)
            if function_name is not None:
                return function_name, None, position
        for position, key in enumerate(keys[:-1]):
            if key == 'ne' and keys[position + 1] == 'kadar':
                return 'sum', None, position + 1
        raise FormulationError('unresolvable frame: no superlative or quantifier')

    @stage('qt2-classifier')
    def classify(self, sentence: AnnotatedSentence, kb: KnowledgeBase) -> QueryFrame:
        keys = [analysis.key for analysis in sentence.analyses]
        function_name, data_property, last = self.trigger(keys)
        entity = frame_entity(sentence, kb, self.default_entity_name)

        if function_name == 'sum' and data_property is None:
            data_property = self.mentioned(sentence, kb, AxiomKind.DATA_PROPERTY, 0)
            if data_property is None:
                raise FormulationError('unresolvable frame: nothing to sum')

        target = self.mentioned(sentence, kb, AxiomKind.CLASS, last + 1) or self.mentioned(sentence, kb, AxiomKind.CLASS, 0)
        if target is None and data_property is not None:
            target = kb.schema.data_property(data_property).domains[0]
        if target is None:
            raise FormulationError('unresolvable frame: no target class')

        links = find_properties(target, entity.individual, kb)
        if not links:
            raise FormulationError(f'unresolvable frame: nothing connects {target.local} and {entity.individual.local}')
        link = next((link for link in links if link.direction == 'forward'), links[0])

        frame = QueryFrame(
            target_class=target,
            entity_class=entity.cls,
            data_property=data_property,
            object_property=orient(link, kb),
            function_name=function_name,
            named_entity_filter=entity.filter_literal(kb),
        )
        logger.debug(f'QT2 frame for "{sentence.text}": {frame.slots()}')
        return frame

    @staticmethod
    def mentioned(sentence: AnnotatedSentence, kb: KnowledgeBase, kind: AxiomKind, start: int) -> Iri | None:
        """First token from 0-based `start` on, outside the entity name, lexicalizing an axiom of `kind`."""
        for position in range(start + 1, len(sentence) + 1):
            if sentence.span_of(position) is not None:
                continue
            entry = resolve_axiom(sentence.lemma(position), kb)
            if entry is not None and entry.kind == kind:
                return entry.target
        return None


class StatisticalClassifier:
    """Slots predicted by a trained perceptron; the entity filter still comes from the question."""

    def __init__(self, model: TrainedModel, default_entity_name: str | None = None):
        self.model = model
        self.default_entity_name = default_entity_name

    @stage('qt2-classifier')
    def classify(self, sentence: AnnotatedSentence, kb: KnowledgeBase) -> QueryFrame:
        entity = frame_entity(sentence, kb, self.default_entity_name)
        predicted = self.model.predict(self.model.encoder.encode(sentence, entity.cls))
        return QueryFrame(
            target_class=predicted.target_class,
            entity_class=predicted.entity_class,
            data_property=predicted.data_property,
            object_property=predicted.object_property,
            function_name=predicted.function_name,
            named_entity_filter=entity.filter_literal(kb),
        )

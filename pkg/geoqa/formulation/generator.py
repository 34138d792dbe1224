"""
Dependency-and-ontology driven query generation for informative (QT1) questions

The answer type is the OBJECT token, else the SUBJECT token. Its axiom kind decides the branch:
a class is linked to the named entity through an object property, a data property is read off
the token it is possessed by or modifies, an object property is completed with its range class,
and an individual hands over to the token it depends on. Re-entries follow dependency links and
are bounded by a visited set.
"""

import logging
from dataclasses import dataclass, field

from geoqa.config import Pipeline
from geoqa.formulation.entities import EntityRef, resolve_entity
from geoqa.formulation.templates import entity_data_pattern, generic_pattern, linked_data_pattern
from geoqa.kb.base import KnowledgeBase
from geoqa.kb.lexicon import AxiomKind, LexEntry
from geoqa.kb.lookup import PropertyLink, check_axiom_types, find_properties, resolve_axiom
from geoqa.kb.terms import Iri
from geoqa.modules.error import FormulationError
from geoqa.nlp.sentence import AnnotatedSentence, Relation
from geoqa.sparql.ast import SelectQuery

logger = logging.getLogger('geoqa.formulation')

RELATED = (Relation.POSSESSOR, Relation.MODIFIER)


@dataclass
class QT1Result:
    query: SelectQuery
    trace: list[str] = field(default_factory=list)


class _Formulation:
    def __init__(self, sentence: AnnotatedSentence, kb: KnowledgeBase, max_reentries: int):
        self.sentence = sentence
        self.kb = kb
        self.max_reentries = max_reentries
        self.entity: EntityRef | None = resolve_entity(sentence, kb)
        self.visited: set[int] = set()
        self.calls = 0
        self.trace: list[str] = []

    def run(self) -> SelectQuery:
        if not self.sentence.dep_rows:
            raise FormulationError('sentence has no dependency analysis')
        if self.entity is not None:
            self.trace.append(f'entity: {self.entity.individual} ({self.entity.cls.local})')
        objects = self.sentence.with_relation(Relation.OBJECT)
        subjects = self.sentence.with_relation(Relation.SUBJECT)
        if objects:
            return self.resolve(objects[0], 'object')
        if subjects:
            return self.resolve(subjects[0], 'subject')
        raise FormulationError('cannot locate answer type')

    # -- dispatch

    def resolve(self, index: int, path: str) -> SelectQuery:
        if index in self.visited or self.calls > self.max_reentries:
            raise FormulationError('unresolvable question')
        self.visited.add(index)
        self.calls += 1

        lemma = self.sentence.lemma(index)
        if self.sentence.span_of(index) is not None and self.entity is not None:
            entry = LexEntry(AxiomKind.INDIVIDUAL, self.entity.individual)
        else:
            entry = resolve_axiom(lemma, self.kb)
        self.trace.append(f'{path}: token {index} "{lemma}" -> '
                          f'{f"{entry.kind.value} {entry.target}" if entry else "no axiom"}')

        if entry is None:
            return self.common_connected(index)
        if entry.kind == AxiomKind.CLASS:
            return self.class_answer(index, entry.target, path)
        if entry.kind == AxiomKind.DATA_PROPERTY:
            return self.data_answer(index, entry.target)
        if entry.kind == AxiomKind.OBJECT_PROPERTY:
            return self.object_answer(index, entry.target)
        governor = self.sentence.governor(index)
        if governor == 0:
            raise FormulationError('unresolvable question')
        return self.resolve(governor, 'connected')

    # -- branches

    def class_answer(self, index: int, cls: Iri, path: str) -> SelectQuery:
        entity = self.require_entity()
        if path == 'subject' and self.classifies_entity(index, cls):
            return self.common_connected(index)
        links = find_properties(cls, entity.individual, self.kb)
        if not links:
            if path == 'subject':
                return self.common_connected(index)
            raise FormulationError(f'no property connects {cls.local} and {entity.individual.local}')
        link = self.prefer_mentioned(links)
        target_first = link.direction == 'reverse' or self.is_symmetric(link.property)
        self.trace.append(f'generic pattern over {link.property} ({link.direction})')
        return generic_pattern(entity.cls, cls, link.property, target_first, entity.filter_literal(self.kb))

    def data_answer(self, index: int, prop: Iri) -> SelectQuery:
        for related in self.related_tokens(index):
            if self.sentence.span_of(related) is not None:
                self.trace.append(f'related token {related} names the entity')
                return self.entity_value(prop)
            entry = resolve_axiom(self.sentence.lemma(related), self.kb)
            if entry is not None and entry.kind == AxiomKind.CLASS:
                self.trace.append(f'related token {related} -> {entry.target}')
                return self.linked_value(entry.target, prop)
        if self.entity is not None:
            return self.entity_value(prop)
        raise FormulationError(f'no named entity for {prop.local}')

    def object_answer(self, index: int, prop: Iri) -> SelectQuery:
        entity = self.require_entity()
        target = None
        for related in self.related_tokens(index):
            if self.sentence.span_of(related) is not None:
                continue
            entry = resolve_axiom(self.sentence.lemma(related), self.kb)
            if entry is not None and entry.kind == AxiomKind.CLASS:
                target = entry.target
                break
        if target is None:
            target = self.range_of(prop, entity.cls)
        link = next((link for link in find_properties(target, entity.individual, self.kb) if link.property == prop), None)
        if link is None:
            raise FormulationError(f'{prop.local} does not connect {target.local} and {entity.individual.local}')
        target_first = link.direction == 'reverse' or self.is_symmetric(prop)
        self.trace.append(f'generic pattern over {prop} ({link.direction}) to {target.local}')
        return generic_pattern(entity.cls, target, prop, target_first, entity.filter_literal(self.kb))

    def common_connected(self, index: int) -> SelectQuery:
        """Continue with the nearest token sharing the answer token's governor, leftward first, then the governor."""
        governor = self.sentence.governor(index)
        siblings = [row.id for row in self.sentence.dep_rows if row.head == governor and row.id != index]
        left = sorted((sibling for sibling in siblings if sibling < index), reverse=True)
        right = sorted(sibling for sibling in siblings if sibling > index)
        for candidate in [*left, *right, governor]:
            if candidate == 0 or candidate in self.visited or self.sentence.span_of(candidate) is not None:
                continue
            if resolve_axiom(self.sentence.lemma(candidate), self.kb) is None:
                continue
            return self.resolve(candidate, 'common')
        raise FormulationError('unresolvable question')

    # -- formulation helpers

    def entity_value(self, prop: Iri) -> SelectQuery:
        entity = self.require_entity()
        domains = self.kb.schema.data_property(prop).domains
        if not any(cls in domains for cls in self.kb.schema.superclasses(entity.cls)):
            raise FormulationError(f'{entity.cls.local} has no {prop.local}')
        self.trace.append(f'single-class pattern over {prop}')
        return entity_data_pattern(entity.cls, prop, entity.filter_literal(self.kb))

    def linked_value(self, cls: Iri, prop: Iri) -> SelectQuery:
        entity = self.require_entity()
        if cls in self.kb.schema.superclasses(entity.cls):
            return self.entity_value(prop)
        links = find_properties(cls, entity.individual, self.kb)
        if not links:
            raise FormulationError(f'no property connects {cls.local} and {entity.individual.local}')
        link = self.prefer_mentioned(links)
        self.trace.append(f'two-class pattern over {link.property} ({link.direction}) and {prop}')
        return linked_data_pattern(cls, entity.cls, link.property, link.direction == 'forward', prop,
                                   entity.filter_literal(self.kb))

    def related_tokens(self, index: int) -> list[int]:
        """Tokens linked to `index` by POSSESSOR or MODIFIER in either direction, nearest first."""
        candidates = [row.id for row in self.sentence.dep_rows if row.head == index and row.relation in RELATED]
        row = self.sentence.row(index)
        if row.relation in RELATED and row.head != 0:
            candidates.append(row.head)
        candidates = [candidate for candidate in candidates if candidate not in self.visited]
        return sorted(candidates, key=lambda candidate: (abs(candidate - index), candidate > index))

    def classifies_entity(self, index: int, cls: Iri) -> bool:
        entity = self.require_entity()
        named = any(self.sentence.span_of(dependent) is not None for dependent in self.sentence.dependents(index))
        return named and cls in self.kb.schema.superclasses(entity.cls)

    def prefer_mentioned(self, links: list[PropertyLink]) -> PropertyLink:
        """The link whose property some word of the question lexicalizes, else the first one."""
        mentioned = {
            entry.target
            for position in range(1, len(self.sentence) + 1)
            for entry in check_axiom_types(self.sentence.lemma(position), self.kb)
            if entry.kind == AxiomKind.OBJECT_PROPERTY
        }
        return next((link for link in links if link.property in mentioned), links[0])

    def range_of(self, prop: Iri, entity_cls: Iri) -> Iri:
        declared = self.kb.schema.object_property(prop)
        ancestry = self.kb.schema.superclasses(entity_cls)
        for left, right in declared.domain_pairs:
            if left in ancestry:
                return right
        raise FormulationError(f'{prop.local} does not apply to {entity_cls.local}')

    def is_symmetric(self, prop: Iri) -> bool:
        declared = self.kb.schema.object_property(prop)
        return declared is not None and declared.symmetric

    def require_entity(self) -> EntityRef:
        if self.entity is None:
            raise FormulationError('no named entity in the question')
        return self.entity


def generate_sparql(sentence: AnnotatedSentence, kb: KnowledgeBase,
                    max_reentries: int = Pipeline.MAX_REENTRIES) -> QT1Result:
    """
    Build the query for an informative question

    Args:
        sentence: analyzed question with dependency rows and entity spans
        kb: closed knowledge base
        max_reentries: re-entries allowed through related/connected tokens

    Returns:
        QT1Result with the query and the branch decisions taken
    """
    formulation = _Formulation(sentence, kb, max_reentries)
    query = formulation.run()
    logger.debug(f'QT1 "{sentence.text}": {" | ".join(formulation.trace)}')
    return QT1Result(query, formulation.trace)

"""
Ontology-only baseline ("Method 2")

Every token lemma is checked against the lexicalization table on its own: the first class in
token order is the answer type, the longest lemma n-gram naming an individual is the entity and
the first declared property connecting them is used. No entity tags or dependency links are
consulted, so possessive chains and multi-class questions fall back to whichever match comes first.
"""

import logging

from geoqa.formulation.classifier import orient
from geoqa.formulation.entities import EntityRef, default_entity
from geoqa.formulation.frames import QueryFrame, QuestionType, SuperlativeLexicon
from geoqa.formulation.pipeline import Answer
from geoqa.formulation.templates import entity_data_pattern, generic_pattern, instantiate_template, linked_data_pattern
from geoqa.kb.base import KnowledgeBase
from geoqa.kb.lexicon import AxiomKind
from geoqa.kb.lookup import check_axiom_types, entity_class_of, find_properties
from geoqa.kb.terms import Iri
from geoqa.modules.decorators import stage
from geoqa.modules.error import FormulationError
from geoqa.nlp.analyzer import Analyzer
from geoqa.nlp.sentence import AnnotatedSentence
from geoqa.nlp.tokenizer import tokenize
from geoqa.sparql.ast import SelectQuery
from geoqa.sparql.evaluator import evaluate
from geoqa.sparql.serializer import serialize

logger = logging.getLogger('geoqa.eval')


class OntologyBaseline:
    def __init__(self, kb: KnowledgeBase, analyzer: Analyzer, superlatives: SuperlativeLexicon,
                 default_entity_name: str | None = None):
        self.kb = kb
        self.analyzer = analyzer
        self.superlatives = superlatives
        self.default_entity_name = default_entity_name

    def sentence(self, question: str) -> AnnotatedSentence:
        tokens = tokenize(question)
        return AnnotatedSentence(question, tokens, self.analyzer.morphology(tokens))

    def matches(self, keys: list[str], kind: AxiomKind) -> list[Iri]:
        found: dict[Iri, None] = {}
        for key in keys:
            for entry in check_axiom_types(key, self.kb):
                if entry.kind == kind:
                    found[entry.target] = None
        return list(found)

    def individual(self, sentence: AnnotatedSentence) -> EntityRef | None:
        keys = [analysis.key for analysis in sentence.analyses]
        for start in range(len(keys)):
            for end in range(len(keys), start, -1):
                entries = check_axiom_types(' '.join(keys[start:end]), self.kb)
                individual = next((entry.target for entry in entries if entry.kind == AxiomKind.INDIVIDUAL), None)
                if individual is not None:
                    return EntityRef(individual, entity_class_of(individual, self.kb), keys[start],
                                     sentence.tokens[start].surface, words=tuple(keys[start:end]))
        return None

    def trigger(self, keys: list[str]) -> tuple[str, Iri | None] | None:
        for position, key in enumerate(keys):
            if key == 'en':
                entry = self.superlatives.match(keys, position + 1)
                if entry is not None:
                    return entry.function_name, entry.data_property
        for key in keys:
            function_name = self.superlatives.quantifier(key)
            if function_name is not None:
                return function_name, None
        return None

    def eligible(self, classes: list[Iri], entity: EntityRef) -> tuple[Iri, ...]:
        props: dict[Iri, None] = {}
        for cls in classes:
            for link in find_properties(cls, entity.individual, self.kb):
                props[link.property] = None
        return tuple(props)

    def first_link(self, target: Iri, entity: EntityRef):
        links = find_properties(target, entity.individual, self.kb)
        if not links:
            raise FormulationError(f'no property connects {target.local} and {entity.individual.local}')
        return links[0]

    def informative(self, entity: EntityRef | None, classes: list[Iri], data: list[Iri]) -> SelectQuery:
        if entity is None:
            raise FormulationError('no individual matched')
        if data:
            target = classes[0] if classes else entity.cls
            if target in self.kb.schema.superclasses(entity.cls):
                return entity_data_pattern(entity.cls, data[0], entity.filter_literal(self.kb))
            link = self.first_link(target, entity)
            return linked_data_pattern(target, entity.cls, link.property, link.direction == 'forward', data[0],
                                       entity.filter_literal(self.kb))
        if not classes:
            raise FormulationError('no class matched')
        link = self.first_link(classes[0], entity)
        declared = self.kb.schema.object_property(link.property)
        target_first = link.direction == 'reverse' or declared.symmetric
        return generic_pattern(entity.cls, classes[0], link.property, target_first, entity.filter_literal(self.kb))

    def quantitative(self, entity: EntityRef | None, classes: list[Iri], data: list[Iri],
                     function_name: str, data_property: Iri | None) -> QueryFrame:
        if entity is None:
            if not self.default_entity_name:
                raise FormulationError('unresolvable frame: the question names no entity')
            entity = default_entity(self.default_entity_name, self.kb)
        if data_property is None and function_name == 'sum':
            if not data:
                raise FormulationError('unresolvable frame: nothing to sum')
            data_property = data[0]
        if classes:
            target = classes[0]
        elif data_property is not None:
            target = self.kb.schema.data_property(data_property).domains[0]
        else:
            raise FormulationError('unresolvable frame: no target class')
        return QueryFrame(
            target_class=target,
            entity_class=entity.cls,
            data_property=data_property,
            object_property=orient(self.first_link(target, entity), self.kb),
            function_name=function_name,
            named_entity_filter=entity.filter_literal(self.kb),
        )

    @stage('formulation')
    def formulate(self, sentence: AnnotatedSentence) -> tuple[QuestionType, SelectQuery, QueryFrame | None, tuple[Iri, ...]]:
        keys = [analysis.key for analysis in sentence.analyses]
        classes = self.matches(keys, AxiomKind.CLASS)
        data = self.matches(keys, AxiomKind.DATA_PROPERTY)
        entity = self.individual(sentence)
        triggered = self.trigger(keys)

        if triggered is None:
            query = self.informative(entity, classes, data)
            question_type, frame = QuestionType.QT1, None
        else:
            frame = self.quantitative(entity, classes, data, *triggered)
            query = instantiate_template(frame)
            question_type = QuestionType.QT2
            if entity is None:
                entity = default_entity(self.default_entity_name, self.kb)

        eligible = self.eligible(classes, entity) if entity is not None else ()
        return question_type, query, frame, eligible if len(eligible) > 1 else ()

    def answer(self, question: str) -> Answer:
        sentence = self.sentence(question)
        question_type, query, frame, eligible = self.formulate(sentence)
        if eligible:
            logger.debug(f'Baseline ambiguity on "{question}": {", ".join(map(str, eligible))}')
        query_text = stage('serialize')(serialize)(query, self.kb.prefix_map)
        solutions = stage('evaluate')(evaluate)(query, self.kb)
        return Answer(question, sentence, question_type, query, query_text, solutions, frame, eligible=eligible)

"""
Read-only lookups the query formulation runs against a loaded knowledge base
"""

from dataclasses import dataclass

from geoqa.kb.base import KnowledgeBase
from geoqa.kb.lexicon import AxiomKind, LabelMatch, LexEntry
from geoqa.kb.terms import RDF_TYPE, Iri
from geoqa.modules.error import LookupFailure


@dataclass(frozen=True)
class PropertyLink:
    property: Iri
    direction: str  # forward: entity P target, reverse: target P entity
    kind: str = 'object'


def check_axiom_type(lemma: str, kb: KnowledgeBase) -> AxiomKind | None:
    entry = kb.lexicon.lookup(lemma)
    return entry.kind if entry else None


def resolve_axiom(lemma: str, kb: KnowledgeBase) -> LexEntry | None:
    return kb.lexicon.lookup(lemma)


def check_axiom_types(lemma: str, kb: KnowledgeBase) -> list[LexEntry]:
    return kb.lexicon.lookup_all(lemma)


def entity_class_of(individual: Iri, kb: KnowledgeBase) -> Iri:
    types = [cls for cls in kb.store.objects(individual, RDF_TYPE) if cls in kb.schema.classes]
    if not types:
        raise LookupFailure(f'no such entity "{individual}"')
    specific = [
        cls for cls in types
        if not any(other != cls and kb.schema.is_subclass(other, cls) for other in types)
    ]
    declared = list(kb.schema.classes)
    return min(specific, key=declared.index)


def find_properties(target_class: Iri, entity: Iri, kb: KnowledgeBase) -> list[PropertyLink]:
    """
    List object properties that connect `entity` to instances of `target_class`

    Args:
        target_class: class of the answers
        entity: individual named in the question

    Returns:
        PropertyLink list in schema declaration order; empty when nothing connects the classes
    """
    if target_class not in kb.schema.classes:
        raise LookupFailure(f'no such class "{target_class}"')
    entity_classes = kb.schema.superclasses(entity_class_of(entity, kb))

    links = []
    for prop in kb.schema.object_properties:
        forward = any(left in entity_classes and right == target_class for left, right in prop.domain_pairs)
        reverse = any(left == target_class and right in entity_classes for left, right in prop.domain_pairs)
        if forward:
            links.append(PropertyLink(prop.name, 'forward'))
        elif reverse and prop.inverse_of is None and not prop.symmetric:
            links.append(PropertyLink(prop.name, 'reverse'))
    return links


def lookup_individual_by_label(lemma_sequence: list[str], kb: KnowledgeBase) -> LabelMatch | None:
    if not lemma_sequence:
        raise ValueError('lemma sequence must not be empty')
    return kb.gazetteer.longest_match(lemma_sequence)

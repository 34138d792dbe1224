import logging
from dataclasses import replace

from geoqa.kb.base import KnowledgeBase
from geoqa.kb.store import TripleStore
from geoqa.kb.terms import RDF_TYPE, RDFS_SUBCLASS_OF, Iri, Triple

logger = logging.getLogger('geoqa.kb')


def entailed_triples(store: TripleStore, kb: KnowledgeBase) -> list[Triple]:
    """One round of inverse, symmetric and subclass entailment over `store`."""
    schema = kb.schema
    found: dict[Triple, None] = {}

    for prop in schema.object_properties:
        for s, p, o in list(store.triples(p=prop.name)):
            if not isinstance(o, Iri):
                continue
            if prop.inverse_of is not None:
                found[Triple(o, prop.inverse_of, s)] = None
            if prop.symmetric:
                found[Triple(o, prop.name, s)] = None

    parents: dict[Iri, list[Iri]] = {}
    for child, _, parent in store.triples(p=RDFS_SUBCLASS_OF):
        if isinstance(parent, Iri):
            parents.setdefault(child, []).append(parent)
    for s, _, cls in list(store.triples(p=RDF_TYPE)):
        for parent in parents.get(cls, []):
            found[Triple(s, RDF_TYPE, parent)] = None

    return [triple for triple in found if triple not in store]


def apply_closure(kb: KnowledgeBase) -> KnowledgeBase:
    """
    Materialize inverse, symmetric and subclass entailments until nothing changes

    Returns a new KnowledgeBase; the input is left untouched.
    """
    store = kb.store.copy()
    rounds = 0
    while True:
        new = entailed_triples(store, kb)
        if not new:
            break
        for triple in new:
            store.add(triple)
        rounds += 1

    logger.info(f'Closure added {len(store) - len(kb.store)} triples in {rounds} rounds')
    return replace(kb, store=store, closed=True)

from geoqa.kb.base import KnowledgeBase
from geoqa.kb.closure import apply_closure
from geoqa.kb.lexicon import AxiomKind, Gazetteer, LabelMatch, Lexicalization, LexEntry
from geoqa.kb.loader import build_knowledge_base, default_label_lemmas, load_instances, load_schema
from geoqa.kb.lookup import (
    PropertyLink,
    check_axiom_type,
    check_axiom_types,
    entity_class_of,
    find_properties,
    lookup_individual_by_label,
    resolve_axiom,
)
from geoqa.kb.schema import DataProperty, ObjectProperty, OntologySchema
from geoqa.kb.store import TripleStore
from geoqa.kb.terms import RDF_TYPE, RDFS_SUBCLASS_OF, Iri, Literal, Term, Triple, class_iri, instance_iri, term_key

from dataclasses import dataclass, field

from geoqa.kb.lexicon import Gazetteer, Lexicalization
from geoqa.kb.schema import OntologySchema
from geoqa.kb.store import TripleStore
from geoqa.kb.terms import Iri


@dataclass
class KnowledgeBase:
    schema: OntologySchema
    store: TripleStore
    lexicon: Lexicalization
    gazetteer: Gazetteer
    prefix_map: dict[str, str]
    labels: dict[Iri, str] = field(default_factory=dict)
    closed: bool = False
    asserted_count: int = 0

    @property
    def individuals(self) -> list[Iri]:
        return list(self.labels)

    def expand(self, iri: Iri) -> str:
        return iri.expand(self.prefix_map)

    def is_individual(self, iri: Iri) -> bool:
        return iri in self.labels

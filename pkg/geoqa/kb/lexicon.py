"""
Lexicalization table: Turkish lemma -> ontology axiom, and the label gazetteer
"""

import logging
from dataclasses import dataclass
from enum import Enum

from geoqa.kb.terms import Iri
from geoqa.modules.turkish import fold

logger = logging.getLogger('geoqa.kb')


class AxiomKind(str, Enum):
    CLASS = 'Class'
    DATA_PROPERTY = 'DataProperty'
    OBJECT_PROPERTY = 'ObjectProperty'
    INDIVIDUAL = 'Individual'

    @classmethod
    def parse(cls, text: str) -> 'AxiomKind':
        for kind in cls:
            if kind.value.lower() == text.lower():
                return kind
        raise ValueError(f'unknown axiom kind "{text}"')


# tie-breaking order when a lemma lexicalizes several axioms
AXIOM_PRIORITY = (
    AxiomKind.CLASS,
    AxiomKind.DATA_PROPERTY,
    AxiomKind.OBJECT_PROPERTY,
    AxiomKind.INDIVIDUAL,
)


@dataclass(frozen=True)
class LexEntry:
    kind: AxiomKind
    target: Iri


class Lexicalization:
    def __init__(self):
        self.entries: dict[str, dict[AxiomKind, Iri]] = {}

    def add(self, lemma: str, kind: AxiomKind, target: Iri) -> bool:
        key = fold(lemma.strip())
        if not key:
            return False
        slot = self.entries.setdefault(key, {})
        existing = slot.get(kind)
        if existing is not None:
            if existing != target:
                logger.warning(f'Lemma "{key}" already lexicalizes {kind.value} {existing}, ignoring {target}')
            return False
        slot[kind] = target
        return True

    def lookup(self, lemma: str) -> LexEntry | None:
        matches = self.lookup_all(lemma)
        return matches[0] if matches else None

    def lookup_all(self, lemma: str) -> list[LexEntry]:
        slot = self.entries.get(fold(lemma), {})
        return [LexEntry(kind, slot[kind]) for kind in AXIOM_PRIORITY if kind in slot]

    def lemmas_for(self, target: Iri) -> list[str]:
        return [lemma for lemma, slot in self.entries.items() if target in slot.values()]

    def __contains__(self, lemma: str) -> bool:
        return fold(lemma) in self.entries

    def __len__(self) -> int:
        return sum(len(slot) for slot in self.entries.values())


@dataclass(frozen=True)
class LabelMatch:
    """Result of a gazetteer lookup; `candidates` holds more than one Iri when the label is shared."""
    candidates: tuple[Iri, ...]
    length: int

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) > 1

    @property
    def individual(self) -> Iri | None:
        return self.candidates[0] if len(self.candidates) == 1 else None


class Gazetteer:
    def __init__(self):
        self.labels: dict[tuple[str, ...], list[Iri]] = {}

    def add(self, lemmas: tuple[str, ...], individual: Iri):
        key = tuple(fold(lemma) for lemma in lemmas)
        if not key:
            return
        bucket = self.labels.setdefault(key, [])
        if individual not in bucket:
            bucket.append(individual)

    def longest_match(self, lemmas: list[str] | tuple[str, ...]) -> LabelMatch | None:
        key = tuple(fold(lemma) for lemma in lemmas)
        for size in range(len(key), 0, -1):
            hit = self.labels.get(key[:size])
            if hit:
                return LabelMatch(tuple(hit), size)
        return None

    @property
    def max_length(self) -> int:
        return max((len(key) for key in self.labels), default=0)

    def individuals(self) -> set[Iri]:
        return {iri for bucket in self.labels.values() for iri in bucket}

    def __len__(self) -> int:
        return len(self.labels)

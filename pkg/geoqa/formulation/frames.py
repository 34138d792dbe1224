"""
Query frames and the superlative/quantifier lexicon used to fill them
"""

import logging
from dataclasses import dataclass, fields
from enum import Enum
from pathlib import Path

from geoqa.kb.schema import OntologySchema
from geoqa.kb.terms import Iri, class_iri, instance_iri
from geoqa.modules.error import FormulationError, GeoQAError
from geoqa.modules.turkish import fold

logger = logging.getLogger('geoqa.formulation')

FUNCTIONS = ('count', 'min', 'max', 'sum')
TYPE1_FUNCTIONS = ('min', 'max')
TYPE2_FUNCTIONS = ('count', 'sum')


def _slot_text(value) -> str:
    if value is None:
        return 'null'
    return value.local if isinstance(value, Iri) else str(value)


class QuestionType(str, Enum):
    QT1 = 'QT1'
    QT2 = 'QT2'


@dataclass(frozen=True)
class QueryFrame:
    target_class: Iri | None = None
    entity_class: Iri | None = None
    data_property: Iri | None = None
    object_property: Iri | None = None
    function_name: str | None = None
    named_entity_filter: str | None = None

    def __post_init__(self):
        if self.function_name is not None and self.function_name not in FUNCTIONS:
            raise FormulationError(f'unknown function "{self.function_name}"')

    def slots(self) -> dict[str, str]:
        """Table-style view: every slot as text, absent ones as "null"."""
        return {
            item.name: _slot_text(getattr(self, item.name))
            for item in fields(self)
        }

    @classmethod
    def from_slots(cls, slots: dict[str, str]) -> 'QueryFrame':
        def value(name: str) -> str | None:
            text = slots.get(name)
            return None if text in (None, '', 'null') else text

        target, entity = value('target_class'), value('entity_class')
        data, link = value('data_property'), value('object_property')
        return cls(
            target_class=class_iri(target) if target else None,
            entity_class=class_iri(entity) if entity else None,
            data_property=instance_iri(data) if data else None,
            object_property=instance_iri(link) if link else None,
            function_name=value('function_name'),
            named_entity_filter=value('named_entity_filter'),
        )


@dataclass(frozen=True)
class Superlative:
    lemmas: tuple[str, ...]
    data_property: Iri | None
    function_name: str


class SuperlativeLexicon:
    """Adjective lemmas (one or two words) mapped to a data property and min/max, plus quantifier lemmas."""

    def __init__(self):
        self.entries: dict[tuple[str, ...], Superlative] = {}
        self.quantifiers: dict[str, str] = {}

    def add(self, lemmas: tuple[str, ...], data_property: Iri | None, function_name: str):
        key = tuple(fold(lemma) for lemma in lemmas)
        if data_property is None:
            if len(key) != 1 or function_name not in TYPE2_FUNCTIONS:
                raise ValueError(f'quantifier "{" ".join(key)}" must be one word mapped to count or sum')
            self.quantifiers[key[0]] = function_name
            return
        if function_name not in TYPE1_FUNCTIONS:
            raise ValueError(f'superlative "{" ".join(key)}" must map to min or max')
        self.entries[key] = Superlative(key, data_property, function_name)

    def match(self, keys: list[str], start: int) -> Superlative | None:
        """Longest entry spelled by keys[start:], two-word entries first."""
        for size in (2, 1):
            if start + size > len(keys):
                continue
            entry = self.entries.get(tuple(keys[start:start + size]))
            if entry is not None:
                return entry
        return None

    def quantifier(self, key: str) -> str | None:
        return self.quantifiers.get(key)

    def adjectives(self) -> list[str]:
        return sorted(' '.join(key) for key in self.entries)

    def validate(self, schema: OntologySchema):
        for entry in self.entries.values():
            if schema.data_property(entry.data_property) is None:
                raise GeoQAError('superlatives', f'"{" ".join(entry.lemmas)}" names undeclared data '
                                                 f'property "{entry.data_property.local}"')

    def __len__(self) -> int:
        return len(self.entries) + len(self.quantifiers)


def parse_superlatives(text: str) -> SuperlativeLexicon:
    lexicon = SuperlativeLexicon()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        cells = [cell.strip() for cell in raw.split('\t')]
        if len(cells) != 3 or not all(cells):
            raise GeoQAError('superlatives', f'line {number}: expected lemma<TAB>dataProperty<TAB>function')
        lemmas, prop, function_name = cells
        try:
            lexicon.add(tuple(lemmas.split()), None if prop == '-' else instance_iri(prop), function_name)
        except ValueError as e:
            raise GeoQAError('superlatives', f'line {number}: {e}')
    logger.debug(f'Superlative lexicon: {len(lexicon.entries)} adjectives, {len(lexicon.quantifiers)} quantifiers')
    return lexicon


def load_superlatives(path: str | Path, schema: OntologySchema | None = None) -> SuperlativeLexicon:
    lexicon = parse_superlatives(Path(path).read_text(encoding='utf-8'))
    if schema is not None:
        lexicon.validate(schema)
    return lexicon

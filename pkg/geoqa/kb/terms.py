from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from typing import NamedTuple, Union

RANGE_KINDS = ('int', 'decimal', 'string')


@dataclass(frozen=True, slots=True, order=True)
class Iri:
    prefix: str
    local: str

    def __post_init__(self):
        if not self.local or any(ch.isspace() for ch in self.local):
            raise ValueError(f'invalid local name "{self.local}"')
        if not self.prefix or any(ch.isspace() for ch in self.prefix):
            raise ValueError(f'invalid prefix "{self.prefix}"')

    def __str__(self) -> str:
        return f'{self.prefix}:{self.local}'

    def expand(self, prefix_map: dict[str, str]) -> str:
        try:
            return prefix_map[self.prefix] + self.local
        except KeyError:
            raise KeyError(f'unregistered prefix "{self.prefix}"')


@dataclass(frozen=True, slots=True)
class Literal:
    value: Union[str, int, Decimal]
    kind: str

    def __str__(self) -> str:
        return self.lexical

    @property
    def lexical(self) -> str:
        return str(self.value)

    @property
    def is_numeric(self) -> bool:
        return self.kind in ('int', 'decimal')

    @classmethod
    def parse(cls, text: str, kind: str) -> 'Literal':
        """Build a literal of range `kind` from its lexical form, raising ValueError when it does not parse."""
        if kind == 'int':
            return cls(int(text), 'int')
        if kind == 'decimal':
            try:
                return cls(Decimal(text), 'decimal')
            except InvalidOperation:
                raise ValueError(f'"{text}" is not a decimal')
        if kind == 'string':
            return cls(text, 'string')
        raise ValueError(f'unknown literal kind "{kind}"')

    @classmethod
    def of(cls, value) -> 'Literal':
        if isinstance(value, bool):
            raise ValueError('booleans are not literals')
        if isinstance(value, int):
            return cls(value, 'int')
        if isinstance(value, Decimal):
            return cls(value, 'decimal')
        if isinstance(value, float):
            return cls(Decimal(repr(value)), 'decimal')
        return cls(str(value), 'string')


Term = Union[Iri, Literal]


class Triple(NamedTuple):
    subject: Iri
    predicate: Iri
    object: Term


RDF_TYPE = Iri('rdf', 'type')
RDFS_SUBCLASS_OF = Iri('rdfs', 'subClassOf')
CLASS_PREFIX = 'geo_turkce'
INSTANCE_PREFIX = 'ins'


def class_iri(name: str) -> Iri:
    return Iri(CLASS_PREFIX, name)


def instance_iri(name: str) -> Iri:
    return Iri(INSTANCE_PREFIX, name)


def term_key(term: Term) -> str:
    """Text used to compare answers with suite gold entries: `prefix:local` or the literal's lexical form."""
    return str(term)


def term_sort_key(term: Term) -> tuple:
    if isinstance(term, Iri):
        return (0, term.prefix, term.local)
    if term.is_numeric:
        return (1, Decimal(term.value), '')
    return (2, 0, term.value)

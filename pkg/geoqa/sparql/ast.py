from dataclasses import dataclass, field
from typing import Union

from geoqa.kb.terms import Iri, Literal, Term
from geoqa.modules.error import SerializationError

AGGREGATES = ('COUNT', 'SUM', 'MIN', 'MAX')


@dataclass(frozen=True, order=True)
class Var:
    name: str

    def __post_init__(self):
        if not self.name or self.name.startswith('?') or any(ch.isspace() for ch in self.name):
            raise ValueError(f'invalid variable name "{self.name}"')

    def __str__(self) -> str:
        return f'?{self.name}'


@dataclass(frozen=True)
class TriplePattern:
    subject: Union[Var, Iri]
    predicate: Iri
    object: Union[Var, Iri, Literal]

    def variables(self) -> list[Var]:
        return [term for term in (self.subject, self.predicate, self.object) if isinstance(term, Var)]


@dataclass(frozen=True)
class RegexFilter:
    var: Var
    pattern: str
    flags: str = ''


@dataclass(frozen=True)
class Aggregate:
    fn: str
    input_var: Var
    alias: Var


@dataclass(frozen=True)
class SelectQuery:
    projection: tuple[Union[Var, Aggregate], ...]
    group: tuple[Union[TriplePattern, RegexFilter, 'SelectQuery'], ...]

    @property
    def patterns(self) -> list[TriplePattern]:
        return [item for item in self.group if isinstance(item, TriplePattern)]

    @property
    def filters(self) -> list[RegexFilter]:
        return [item for item in self.group if isinstance(item, RegexFilter)]

    @property
    def subqueries(self) -> list['SelectQuery']:
        return [item for item in self.group if isinstance(item, SelectQuery)]

    @property
    def aggregate(self) -> Aggregate | None:
        return next((item for item in self.projection if isinstance(item, Aggregate)), None)

    def pattern_variables(self) -> list[Var]:
        found: dict[Var, None] = {}
        for pattern in self.patterns:
            for var in pattern.variables():
                found[var] = None
        return list(found)

    def output_variables(self) -> list[Var]:
        return [item.alias if isinstance(item, Aggregate) else item for item in self.projection]

    def iris(self) -> list[Iri]:
        found = []
        for pattern in self.patterns:
            found.extend(term for term in (pattern.subject, pattern.predicate, pattern.object) if isinstance(term, Iri))
        for sub in self.subqueries:
            found.extend(sub.iris())
        return found

    def validate(self):
        """Raise SerializationError unless the query is inside the supported subset."""
        if not self.projection:
            raise SerializationError('empty projection')
        if not self.group:
            raise SerializationError('empty group')
        if len(self.subqueries) > 1:
            raise SerializationError('at most one subquery per group')
        aggregates = [item for item in self.projection if isinstance(item, Aggregate)]
        if len(aggregates) > 1:
            raise SerializationError('at most one aggregate per SELECT')
        if aggregates and len(self.projection) > 1:
            raise SerializationError('an aggregate cannot be projected next to plain variables')

        bound = set(self.pattern_variables())
        for sub in self.subqueries:
            sub.validate()
            bound.update(sub.output_variables())

        for item in self.filters:
            if item.flags not in ('', 'i'):
                raise SerializationError(f'unsupported regex flags "{item.flags}"')
            if item.var not in set(self.pattern_variables()):
                raise SerializationError(f'filter variable {item.var} is not used by a triple pattern')

        for agg in aggregates:
            if agg.fn not in AGGREGATES:
                raise SerializationError(f'unsupported aggregate "{agg.fn}"')
            if agg.alias in set(self.pattern_variables()):
                raise SerializationError(f'aggregate alias {agg.alias} clashes with a pattern variable')
            if agg.input_var not in bound:
                raise SerializationError(f'aggregate input {agg.input_var} is never bound')

        for var in self.projection:
            if isinstance(var, Var) and var not in bound:
                raise SerializationError(f'projected variable {var} is never bound')


@dataclass
class SolutionSet:
    variables: tuple[Var, ...]
    bindings: list[dict[Var, Term]] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.bindings)

    def rows(self) -> list[tuple[Term, ...]]:
        return [tuple(binding[var] for var in self.variables) for binding in self.bindings]

    def values(self) -> list[Term]:
        """Every bound term in row order, projected variables left to right."""
        return [term for row in self.rows() for term in row]

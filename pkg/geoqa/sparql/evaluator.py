import re
from decimal import Decimal
from logging import getLogger

from geoqa.kb.base import KnowledgeBase
from geoqa.kb.terms import Iri, Literal, Term
from geoqa.modules.error import EvaluationError, SerializationError
from geoqa.modules.turkish import ascii_fold
from geoqa.sparql.ast import Aggregate, RegexFilter, SelectQuery, SolutionSet, TriplePattern, Var

logger = getLogger('geoqa.sparql')

Binding = dict[Var, Term]


def _resolve(term, binding: Binding):
    if isinstance(term, Var):
        return binding.get(term)
    return term


def _extend(binding: Binding, pattern: TriplePattern, triple) -> Binding | None:
    extended = dict(binding)
    for slot, value in zip((pattern.subject, pattern.predicate, pattern.object), triple):
        if isinstance(slot, Var):
            if slot in extended and extended[slot] != value:
                return None
            extended[slot] = value
    return extended


def _join_pattern(bindings: list[Binding], pattern: TriplePattern, kb: KnowledgeBase) -> list[Binding]:
    joined = []
    for binding in bindings:
        s = _resolve(pattern.subject, binding)
        o = _resolve(pattern.object, binding)
        if s is not None and not isinstance(s, Iri):
            continue
        for triple in kb.store.triples(s, pattern.predicate, o):
            extended = _extend(binding, pattern, triple)
            if extended is not None:
                joined.append(extended)
    return joined


def _compatible_merge(left: list[Binding], right: list[Binding]) -> list[Binding]:
    merged = []
    for a in left:
        for b in right:
            if all(a[var] == value for var, value in b.items() if var in a):
                merged.append({**a, **b})
    return merged


def term_text(term: Term, kb: KnowledgeBase) -> str:
    """The `str()` of a term as regex filters see it: the full IRI or the lexical form."""
    if isinstance(term, Iri):
        return kb.expand(term)
    return term.lexical


def regex_matches(item: RegexFilter, text: str) -> bool:
    pattern, subject = item.pattern, text
    if 'i' in item.flags:
        pattern, subject = ascii_fold(pattern), ascii_fold(subject)
    try:
        return re.search(pattern, subject) is not None
    except re.error as e:
        raise EvaluationError(f'invalid regex "{item.pattern}": {e}')


def _passes(binding: Binding, item: RegexFilter, kb: KnowledgeBase) -> bool:
    term = binding.get(item.var)
    if term is None:
        return False
    return regex_matches(item, term_text(term, kb))


def _numeric(term: Term) -> Decimal:
    return Decimal(term.value)


def _aggregate(agg: Aggregate, bindings: list[Binding], kb: KnowledgeBase) -> list[Binding]:
    values = [binding[agg.input_var] for binding in bindings if agg.input_var in binding]
    if agg.fn == 'COUNT':
        return [{agg.alias: Literal(len(values), 'int')}]
    if not values:
        # SUM of nothing is 0, MIN and MAX stay unbound
        return [{agg.alias: Literal(0, 'int')}] if agg.fn == 'SUM' else []

    literals = [value for value in values if isinstance(value, Literal)]
    numeric = [value for value in literals if value.is_numeric]
    if agg.fn == 'SUM':
        if len(numeric) != len(values):
            raise EvaluationError(f'SUM over non-numeric values of {agg.input_var}')
        total = sum(_numeric(value) for value in numeric)
        if all(value.kind == 'int' for value in numeric):
            return [{agg.alias: Literal(int(total), 'int')}]
        return [{agg.alias: Literal(total, 'decimal')}]

    pick = max if agg.fn == 'MAX' else min
    if numeric:
        if len(numeric) != len(values):
            raise EvaluationError(f'{agg.fn} over mixed numeric and non-numeric values of {agg.input_var}')
        return [{agg.alias: pick(numeric, key=_numeric)}]
    if literals:
        if len(literals) != len(values):
            raise EvaluationError(f'{agg.fn} over mixed literal and IRI values of {agg.input_var}')
        return [{agg.alias: pick(literals, key=lambda value: value.lexical)}]
    return [{agg.alias: pick(values, key=lambda value: term_text(value, kb))}]


def _evaluate_group(query: SelectQuery, kb: KnowledgeBase) -> list[Binding]:
    sub_solutions = {id(sub): _evaluate(sub, kb).bindings for sub in query.subqueries}
    bindings: list[Binding] = [{}]
    for item in query.group:
        if isinstance(item, TriplePattern):
            bindings = _join_pattern(bindings, item, kb)
        elif isinstance(item, SelectQuery):
            bindings = _compatible_merge(bindings, sub_solutions[id(item)])
        if not bindings:
            return []
    for item in query.filters:
        bindings = [binding for binding in bindings if _passes(binding, item, kb)]
    return bindings


def _evaluate(query: SelectQuery, kb: KnowledgeBase) -> SolutionSet:
    variables = tuple(query.output_variables())
    bindings = _evaluate_group(query, kb)
    if query.aggregate is not None:
        return SolutionSet(variables, _aggregate(query.aggregate, bindings, kb))
    return SolutionSet(variables, [{var: binding[var] for var in variables} for binding in bindings])


def evaluate(query: SelectQuery, kb: KnowledgeBase) -> SolutionSet:
    """
    Run a query against the store with bag semantics.

    Triple patterns are joined left to right through the store indexes, a subquery
    is evaluated on its own and joined at its position, filters apply to the whole group.
    Over zero input bindings COUNT and SUM yield 0 while MIN and MAX yield no row.
    """
    try:
        query.validate()
    except SerializationError as e:
        raise EvaluationError(e.description)
    for iri in query.iris():
        if iri.prefix not in kb.prefix_map:
            raise EvaluationError(f'unregistered prefix "{iri.prefix}"')
    result = _evaluate(query, kb)
    if not kb.closed:
        logger.warning('Evaluating against a knowledge base whose closure was not computed')
        result.diagnostics.append('knowledge base is not closed')
    return result

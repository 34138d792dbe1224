import dataclasses
import itertools
import random
import re
from collections import Counter
from decimal import Decimal

import pytest

from geoqa.config import DEFAULT_PREFIXES
from geoqa.kb.store import TripleStore
from geoqa.kb.terms import RANGE_KINDS, Iri, Literal, Triple, class_iri, instance_iri
from geoqa.modules.error import EvaluationError, SerializationError, SparqlSyntaxError
from geoqa.sparql import (AGGREGATES, Aggregate, RegexFilter, SelectQuery, TriplePattern, Var, evaluate, parse,
                          parse_document, regex_matches, serialize, strip_prefixes)

NEIGHBOURS = """PREFIX geo_turkce: <http://www.semanticweb.org/geo-tr/ontology#>
PREFIX ins: <http://www.semanticweb.org/geo-tr/instances#>
PREFIX rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>

SELECT ?y WHERE {
  ?x rdf:type geo_turkce:Sehir .
  ?y rdf:type geo_turkce:Sehir .
  ?y ins:komsu ?x .
  FILTER(regex(str(?x),"Izmir", "i"))
}
"""

MOST_POPULOUS = """
SELECT ?y ?m WHERE {
  ?y ins:populasyon ?m .
  { SELECT (MAX(?v) as ?m) WHERE { ?z ins:populasyon ?v . } }
}
"""


def region_aggregate(fn: str, var: str, region: str) -> str:
    return f"""
    SELECT ({fn}(?{var}) as ?total) WHERE {{
      ?x ins:konumlanir ?r .
      ?x ins:populasyon ?p .
      FILTER(regex(str(?r),"{region}", "i"))
    }}
    """


# -- parse and serialize


def test_serialize_reproduces_fixed_layout():
    assert serialize(parse(NEIGHBOURS), DEFAULT_PREFIXES) == NEIGHBOURS


def test_parse_document_keeps_prefixes():
    query, prefixes = parse_document(NEIGHBOURS)
    assert prefixes['ins'] == DEFAULT_PREFIXES['ins']
    assert query.projection == (Var('y'),)
    assert query.filters == [RegexFilter(Var('x'), 'Izmir', 'i')]
    assert len(query.patterns) == 3


def test_full_iris_resolve_to_declared_prefix():
    text = ('PREFIX ins: <http://www.semanticweb.org/geo-tr/instances#>\n'
            'SELECT ?y WHERE { <http://www.semanticweb.org/geo-tr/instances#Izmir> ins:komsu ?y }')
    assert parse(text).patterns[0].subject == instance_iri('Izmir')


def test_subquery_round_trip():
    query = parse(MOST_POPULOUS)
    assert len(query.subqueries) == 1
    assert query.subqueries[0].aggregate == Aggregate('MAX', Var('v'), Var('m'))
    assert parse(serialize(query, DEFAULT_PREFIXES)) == query


def test_strip_prefixes():
    stripped = strip_prefixes(NEIGHBOURS)
    assert stripped.startswith('SELECT ?y WHERE {')
    assert 'PREFIX' not in stripped


def test_literal_objects():
    query = parse('SELECT ?x WHERE { ?x ins:yuzolcumu 79000.0 . ?x ins:populasyon 12 . ?x ins:baskent "Ankara" }')
    objects = [pattern.object for pattern in query.patterns]
    assert objects == [Literal(Decimal('79000.0'), 'decimal'), Literal(12, 'int'), Literal('Ankara', 'string')]


@pytest.mark.parametrize('text, message', [
    ('SELECT ?x WHERE { ?x ?p ?o }', 'variable predicates'),
    ('SELECT ?x WHERE { OPTIONAL { ?x ins:komsu ?y } }', 'unsupported feature: OPTIONAL'),
    ('SELECT DISTINCT ?x WHERE { ?x ins:komsu ?y }', 'unsupported feature: DISTINCT'),
    ('SELECT ?x WHERE { ?x ins:komsu ?y } LIMIT 1', 'unsupported feature: LIMIT'),
    ('SELECT (AVG(?x) as ?a) WHERE { ?x ins:komsu ?y }', 'unsupported aggregate'),
    ('SELECT WHERE { ?x ins:komsu ?y }', 'empty projection'),
    ('SELECT ?x WHERE { }', 'empty group'),
    ('SELECT ?x WHERE { ?x ins:komsu ?y', 'unterminated group'),
    ('SELECT ?x WHERE { ?x <http://example.org/p> ?y }', 'matches no declared prefix'),
])
def test_parse_errors(text, message):
    with pytest.raises(SparqlSyntaxError) as info:
        parse(text)
    assert message in str(info.value)


def test_parse_error_offset():
    with pytest.raises(SparqlSyntaxError) as info:
        parse('SELECT ?x WHERE { ?x rdf:type ; }')
    assert info.value.offset == 30
    assert str(info.value).startswith('[sparql-parse] at offset 30:')


def test_serialize_rejects_unregistered_prefix():
    query = SelectQuery((Var('x'),), (TriplePattern(Var('x'), instance_iri('komsu'), Var('y')),))
    with pytest.raises(SerializationError):
        serialize(query, {'rdf': DEFAULT_PREFIXES['rdf']})


@pytest.mark.parametrize('query, message', [
    (SelectQuery((Var('z'),), (TriplePattern(Var('x'), instance_iri('komsu'), Var('y')),)), 'never bound'),
    (SelectQuery((Var('x'),), (TriplePattern(Var('x'), instance_iri('komsu'), Var('y')),
                               RegexFilter(Var('q'), 'a'))), 'not used by a triple pattern'),
    (SelectQuery((Var('x'),), (TriplePattern(Var('x'), instance_iri('komsu'), Var('y')),
                               RegexFilter(Var('x'), 'a', 'm'))), 'unsupported regex flags'),
    (SelectQuery((Aggregate('COUNT', Var('x'), Var('y')),),
                 (TriplePattern(Var('x'), instance_iri('komsu'), Var('y')),)), 'clashes'),
])
def test_validate_rejects_malformed_queries(query, message):
    with pytest.raises(SerializationError) as info:
        query.validate()
    assert message in str(info.value)


# -- filters


def test_case_insensitive_regex_folds_turkish_letters():
    assert regex_matches(RegexFilter(Var('x'), 'İzmir', 'i'), 'http://www.semanticweb.org/geo-tr/instances#Izmir')
    assert regex_matches(RegexFilter(Var('x'), 'EGE', 'i'), 'EgeBolgesi')
    assert regex_matches(RegexFilter(Var('x'), 'bölge', 'i'), 'EgeBolgesi')
    assert not regex_matches(RegexFilter(Var('x'), 'İzmir'), 'Izmir')


def test_invalid_regex_is_an_evaluation_error(small_closed_kb):
    query = parse('SELECT ?x WHERE { ?x ins:komsu ?y . FILTER(regex(str(?x),"(", "i")) }')
    with pytest.raises(EvaluationError):
        evaluate(query, small_closed_kb)


# -- evaluation


def test_evaluate_neighbours(small_closed_kb):
    result = evaluate(parse(NEIGHBOURS), small_closed_kb)
    assert result.values() == [instance_iri('Manisa')]
    assert result.diagnostics == []


def test_unclosed_kb_is_reported(small_kb):
    result = evaluate(parse(NEIGHBOURS), small_kb)
    # komsu is only asserted Izmir -> Manisa
    assert result.values() == []
    assert 'knowledge base is not closed' in result.diagnostics


def test_subquery_max(small_closed_kb):
    result = evaluate(parse(MOST_POPULOUS), small_closed_kb)
    assert result.rows() == [(instance_iri('Izmir'), Literal(4462056, 'int'))]


def test_sum_of_ints_stays_int(small_closed_kb):
    result = evaluate(parse(region_aggregate('SUM', 'p', 'Ege')), small_closed_kb)
    assert result.values() == [Literal(4462056 + 1468279, 'int')]


def test_sum_of_decimals(small_closed_kb):
    query = parse('SELECT (SUM(?a) as ?total) WHERE { ?x ins:yuzolcumu ?a . }')
    [total] = evaluate(query, small_closed_kb).values()
    assert total.kind == 'decimal'
    assert total.lexical == '79000.0'


def test_count(small_closed_kb):
    assert evaluate(parse(region_aggregate('COUNT', 'x', 'Ege')), small_closed_kb).values() == [Literal(2, 'int')]


@pytest.mark.parametrize('fn, expected', [
    ('COUNT', [Literal(0, 'int')]),
    ('SUM', [Literal(0, 'int')]),
    ('MIN', []),
    ('MAX', []),
])
def test_aggregate_over_empty_group(small_closed_kb, fn, expected):
    assert evaluate(parse(region_aggregate(fn, 'p', 'Marmara')), small_closed_kb).values() == expected


def test_unregistered_prefix_at_evaluation(small_closed_kb):
    query = SelectQuery((Var('x'),), (TriplePattern(Var('x'), Iri('dbo', 'p'), Var('y')),))
    with pytest.raises(EvaluationError):
        evaluate(query, small_closed_kb)


# -- generated queries


PATTERN_VARS = (Var('x'), Var('y'), Var('z'), Var('var'))
PREDICATES = (Iri('rdf', 'type'), instance_iri('komsu'), instance_iri('konumlanir'), instance_iri('populasyon'))
FILTER_TEXTS = ('Ege', 'İç"Anadolu', r'^a\d+$', '', 'ğ\\ü')


def _random_literal(rng: random.Random) -> Literal:
    kind = rng.choice(RANGE_KINDS)
    if kind == 'int':
        return Literal(rng.randint(0, 10 ** 6), 'int')
    if kind == 'decimal':
        return Literal(Decimal(f'{rng.randint(0, 9999)}.{rng.randint(0, 99)}'), 'decimal')
    return Literal(''.join(rng.choice('abçğıİö "\\') for _ in range(rng.randint(0, 6))), 'string')


def _random_select(rng: random.Random, depth: int = 0) -> SelectQuery:
    patterns = []
    for index in range(rng.randint(1, 3)):
        subject = Var('x') if index == 0 else rng.choice([*PATTERN_VARS, instance_iri('Ankara')])
        roll = rng.random()
        if roll < 0.5:
            obj = rng.choice(PATTERN_VARS)
        elif roll < 0.7:
            obj = rng.choice([class_iri('Sehir'), instance_iri('Izmir')])
        else:
            obj = _random_literal(rng)
        patterns.append(TriplePattern(subject, rng.choice(PREDICATES), obj))

    variables = list(dict.fromkeys(var for pattern in patterns for var in pattern.variables()))
    group: list = list(patterns)
    bound = list(variables)
    if depth < 2 and rng.random() < 0.4:
        sub = _random_select(rng, depth + 1)
        group.insert(rng.randint(0, len(group)), sub)
        bound += [var for var in sub.output_variables() if var not in bound]
    if rng.random() < 0.5:
        item = RegexFilter(rng.choice(variables), rng.choice(FILTER_TEXTS), rng.choice(('', 'i')))
        group.insert(rng.randint(0, len(group)), item)

    if rng.random() < 0.4:
        projection = (Aggregate(rng.choice(AGGREGATES), rng.choice(bound), Var(f'agg{depth}')),)
    else:
        projection = tuple(rng.sample(bound, rng.randint(1, len(bound))))
    return SelectQuery(projection, tuple(group))


@pytest.mark.parametrize('seed', range(100))
def test_generated_queries_round_trip(seed):
    query = _random_select(random.Random(seed))
    query.validate()
    assert parse(serialize(query, DEFAULT_PREFIXES)) == query


# -- randomized agreement with an exhaustive oracle


NODES = tuple(instance_iri(f'n{i}') for i in range(5))
LINKS = tuple(instance_iri(f'p{i}') for i in range(3))
ORACLE_FILTERS = ('n1', 'n[0-2]', 'N3', '^[0-4]$', '7')


def _random_store(rng: random.Random) -> TripleStore:
    store = TripleStore()
    for _ in range(rng.randint(1, 30)):
        obj = rng.choice(NODES) if rng.random() < 0.7 else Literal(rng.randint(0, 9), 'int')
        store.add(Triple(rng.choice(NODES), rng.choice(LINKS), obj))
    return store


def _random_query(rng: random.Random) -> SelectQuery:
    patterns = []
    for index in range(rng.randint(1, 3)):
        if index == 0:
            subject = Var('x')
        else:
            subject = rng.choice(PATTERN_VARS[:3]) if rng.random() < 0.8 else rng.choice(NODES)
        roll = rng.random()
        if roll < 0.7:
            obj = rng.choice(PATTERN_VARS[:3])
        elif roll < 0.85:
            obj = rng.choice(NODES)
        else:
            obj = Literal(rng.randint(0, 9), 'int')
        patterns.append(TriplePattern(subject, rng.choice(LINKS), obj))

    variables = sorted({var for pattern in patterns for var in pattern.variables()})
    group: list = list(patterns)
    if rng.random() < 0.5:
        group.append(RegexFilter(rng.choice(variables), rng.choice(ORACLE_FILTERS), rng.choice(('', 'i'))))
    projection = tuple(rng.sample(variables, rng.randint(1, len(variables))))
    return SelectQuery(projection, tuple(group))


def _oracle_text(term, kb) -> str:
    return kb.expand(term) if isinstance(term, Iri) else str(term.value)


def _oracle_solutions(query: SelectQuery, kb) -> list[dict]:
    """Every assignment of KB terms to the pattern variables that satisfies the whole group."""
    universe = list(dict.fromkeys(term for triple in kb.store for term in (triple.subject, triple.object)))
    variables = query.pattern_variables()
    filters = [(item, re.IGNORECASE if item.flags == 'i' else 0) for item in query.filters]
    solutions = []
    for values in itertools.product(universe, repeat=len(variables)):
        binding = dict(zip(variables, values))
        grounded = [Triple(*(binding[term] if isinstance(term, Var) else term
                             for term in (pattern.subject, pattern.predicate, pattern.object)))
                    for pattern in query.patterns]
        if not all(triple in kb.store for triple in grounded):
            continue
        if all(re.search(item.pattern, _oracle_text(binding[item.var], kb), flag) for item, flag in filters):
            solutions.append(binding)
    return solutions


def _oracle_aggregate(fn: str, values: list, kb) -> list | None:
    """Expected aggregate column, or None when evaluation has to fail."""
    if fn == 'COUNT':
        return [Literal(len(values), 'int')]
    if not values:
        return [Literal(0, 'int')] if fn == 'SUM' else []
    numbers = [value.value for value in values if isinstance(value, Literal)]
    if fn == 'SUM':
        return [Literal(sum(numbers), 'int')] if len(numbers) == len(values) else None
    pick = max if fn == 'MAX' else min
    if len(numbers) == len(values):
        return [Literal(pick(numbers), 'int')]
    if numbers:
        return None
    return [pick(values, key=kb.expand)]


@pytest.mark.parametrize('seed', range(100))
def test_evaluation_agrees_with_exhaustive_oracle(small_closed_kb, seed):
    rng = random.Random(seed)
    kb = dataclasses.replace(small_closed_kb, store=_random_store(rng))
    query = _random_query(rng)
    solutions = _oracle_solutions(query, kb)

    expected = Counter(tuple(binding[var] for var in query.projection) for binding in solutions)
    assert Counter(evaluate(query, kb).rows()) == expected

    target = rng.choice(query.pattern_variables())
    for fn in AGGREGATES:
        aggregated = SelectQuery((Aggregate(fn, target, Var('total')),), query.group)
        column = _oracle_aggregate(fn, [binding[target] for binding in solutions], kb)
        if column is None:
            with pytest.raises(EvaluationError):
                evaluate(aggregated, kb)
        else:
            assert evaluate(aggregated, kb).values() == column

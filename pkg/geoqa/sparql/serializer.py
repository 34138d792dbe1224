from decimal import Decimal

from geoqa.kb.terms import Iri, Literal
from geoqa.modules.error import SerializationError
from geoqa.sparql.ast import Aggregate, RegexFilter, SelectQuery, TriplePattern, Var

INDENT = '  '


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def format_term(term, prefixes: dict[str, str] | None = None) -> str:
    if isinstance(term, Var):
        return str(term)
    if isinstance(term, Iri):
        if prefixes is not None and term.prefix not in prefixes:
            raise SerializationError(f'unregistered prefix "{term.prefix}"')
        return str(term)
    if isinstance(term, Literal):
        if term.kind == 'int':
            return str(term.value)
        if term.kind == 'decimal':
            text = format(Decimal(term.value), 'f')
            return text if '.' in text else f'{text}.0'
        return _quote(term.value)
    raise SerializationError(f'cannot serialize {term!r}')


def format_filter(item: RegexFilter) -> str:
    args = f'str({item.var}),{_quote(item.pattern)}'
    if item.flags:
        args += f', {_quote(item.flags)}'
    return f'FILTER(regex({args}))'


def _projection(item) -> str:
    if isinstance(item, Aggregate):
        return f'({item.fn}({item.input_var}) as {item.alias})'
    return str(item)


def _lines(query: SelectQuery, prefixes, depth: int) -> list[str]:
    pad = INDENT * depth
    head = ' '.join(_projection(item) for item in query.projection)
    lines = [f'{pad}SELECT {head} WHERE {{']
    for item in query.group:
        if isinstance(item, TriplePattern):
            parts = (format_term(item.subject, prefixes), format_term(item.predicate, prefixes),
                     format_term(item.object, prefixes))
            lines.append(f'{pad}{INDENT}{" ".join(parts)} .')
        elif isinstance(item, RegexFilter):
            lines.append(f'{pad}{INDENT}{format_filter(item)}')
        else:
            lines.append(f'{pad}{INDENT}{{')
            lines.extend(_lines(item, prefixes, depth + 2))
            lines.append(f'{pad}{INDENT}}}')
    lines.append(f'{pad}}}')
    return lines


def serialize(query: SelectQuery, prefixes: dict[str, str]) -> str:
    """
    Render a query in the fixed layout: PREFIX headers, then the SELECT block
    with two-space indentation and one triple pattern per line.
    """
    query.validate()
    used = sorted({iri.prefix for iri in query.iris()})
    for prefix in used:
        if prefix not in prefixes:
            raise SerializationError(f'unregistered prefix "{prefix}"')
    headers = [f'PREFIX {prefix}: <{prefixes[prefix]}>' for prefix in used]
    body = _lines(query, prefixes, 0)
    return '\n'.join([*headers, '', *body]) + '\n' if headers else '\n'.join(body) + '\n'


def strip_prefixes(text: str) -> str:
    return '\n'.join(line for line in text.splitlines() if not line.startswith('PREFIX ')).strip()

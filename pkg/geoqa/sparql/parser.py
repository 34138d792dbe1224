import re
from dataclasses import dataclass
from decimal import Decimal

from geoqa.kb.terms import Iri, Literal
from geoqa.modules.error import SparqlSyntaxError
from geoqa.sparql.ast import AGGREGATES, Aggregate, RegexFilter, SelectQuery, TriplePattern, Var

UNSUPPORTED = {
    'OPTIONAL', 'UNION', 'MINUS', 'BIND', 'VALUES', 'GRAPH', 'SERVICE', 'ORDER', 'GROUP', 'HAVING',
    'LIMIT', 'OFFSET', 'DISTINCT', 'REDUCED', 'ASK', 'CONSTRUCT', 'DESCRIBE', 'INSERT', 'DELETE',
}

_TOKEN = re.compile(r'''
    (?P<ws>\s+|\#[^\n]*)
  | (?P<iri><[^<>\s]*>)
  | (?P<var>\?[\w]+)
  | (?P<pname>[A-Za-z_][\w\-]*:[\w\-]+)
  | (?P<pns>[A-Za-z_][\w\-]*:)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<number>[+-]?\d+(?:\.\d+)?)
  | (?P<word>[A-Za-z]+)
  | (?P<punct>[{}().,])
''', re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise SparqlSyntaxError(f'unexpected character "{text[pos]}"', len(text[:pos].encode()))
        if match.lastgroup != 'ws':
            tokens.append(Token(match.lastgroup, match.group(), len(text[:pos].encode())))
        pos = match.end()
    tokens.append(Token('eof', '', len(text.encode())))
    return tokens


def _unquote(text: str) -> str:
    return re.sub(r'\\(.)', r'\1', text[1:-1])


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0
        self.prefixes: dict[str, str] = {}

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def fail(self, description: str, token: Token | None = None):
        raise SparqlSyntaxError(description, (token or self.current).offset)

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def is_word(self, word: str) -> bool:
        return self.current.kind == 'word' and self.current.text.upper() == word

    def expect_word(self, word: str) -> Token:
        if not self.is_word(word):
            self._unsupported()
            self.fail(f'expected {word}, found "{self.current.text or "end of input"}"')
        return self.advance()

    def expect_punct(self, char: str) -> Token:
        if self.current.kind != 'punct' or self.current.text != char:
            self._unsupported()
            self.fail(f'expected "{char}", found "{self.current.text or "end of input"}"')
        return self.advance()

    def _unsupported(self):
        if self.current.kind == 'word' and self.current.text.upper() in UNSUPPORTED:
            self.fail(f'unsupported feature: {self.current.text.upper()}')

    def document(self) -> SelectQuery:
        while self.is_word('PREFIX'):
            self.advance()
            name = self.current
            if name.kind != 'pns':
                self.fail('expected a prefix name')
            self.advance()
            base = self.current
            if base.kind != 'iri':
                self.fail('expected a base IRI')
            self.advance()
            self.prefixes[name.text[:-1]] = base.text[1:-1]
        query = self.select()
        if self.current.kind == 'punct' and self.current.text == '.':
            self.advance()
        if self.current.kind != 'eof':
            self._unsupported()
            self.fail(f'trailing input "{self.current.text}"')
        return query

    def select(self) -> SelectQuery:
        self.expect_word('SELECT')
        projection = []
        while not self.is_word('WHERE'):
            if self.current.kind == 'var':
                projection.append(Var(self.advance().text[1:]))
            elif self.current.kind == 'punct' and self.current.text == '(':
                projection.append(self.aggregate())
            else:
                self._unsupported()
                self.fail(f'unexpected "{self.current.text or "end of input"}" in projection')
        if not projection:
            self.fail('empty projection')
        self.expect_word('WHERE')
        opening = self.expect_punct('{')
        group = self.group()
        self.expect_punct('}')
        if not group:
            self.fail('empty group', opening)
        return SelectQuery(tuple(projection), tuple(group))

    def aggregate(self) -> Aggregate:
        self.expect_punct('(')
        fn = self.current
        if fn.kind != 'word' or fn.text.upper() not in AGGREGATES:
            self._unsupported()
            self.fail(f'unsupported aggregate "{fn.text}"')
        self.advance()
        self.expect_punct('(')
        input_var = self.variable()
        self.expect_punct(')')
        self.expect_word('AS')
        alias = self.variable()
        self.expect_punct(')')
        return Aggregate(fn.text.upper(), input_var, alias)

    def variable(self) -> Var:
        if self.current.kind != 'var':
            self.fail(f'expected a variable, found "{self.current.text or "end of input"}"')
        return Var(self.advance().text[1:])

    def group(self) -> list:
        items = []
        while not (self.current.kind == 'punct' and self.current.text == '}'):
            token = self.current
            if token.kind == 'eof':
                self.fail('unterminated group')
            if token.kind == 'punct' and token.text == '{':
                self.advance()
                items.append(self.select())
                self.expect_punct('}')
            elif self.is_word('FILTER'):
                items.append(self.regex_filter())
            elif token.kind == 'punct' and token.text == '.':
                self.advance()
            else:
                self._unsupported()
                items.append(self.triple())
        return items

    def regex_filter(self) -> RegexFilter:
        self.expect_word('FILTER')
        self.expect_punct('(')
        if not self.is_word('REGEX'):
            self.fail('only regex filters are supported')
        self.advance()
        self.expect_punct('(')
        self.expect_word('STR')
        self.expect_punct('(')
        var = self.variable()
        self.expect_punct(')')
        self.expect_punct(',')
        pattern = self.string()
        flags = ''
        if self.current.kind == 'punct' and self.current.text == ',':
            self.advance()
            flags = self.string()
        self.expect_punct(')')
        self.expect_punct(')')
        return RegexFilter(var, pattern, flags)

    def string(self) -> str:
        if self.current.kind != 'string':
            self.fail('expected a string literal')
        return _unquote(self.advance().text)

    def triple(self) -> TriplePattern:
        subject = self.term(allow_literal=False)
        start = self.current
        predicate = self.term(allow_literal=False)
        if isinstance(predicate, Var):
            self.fail('variable predicates are not supported', start)
        obj = self.term(allow_literal=True)
        return TriplePattern(subject, predicate, obj)

    def term(self, allow_literal: bool):
        token = self.current
        if token.kind == 'var':
            return Var(self.advance().text[1:])
        if token.kind == 'pname':
            self.advance()
            prefix, local = token.text.split(':', 1)
            return Iri(prefix, local)
        if token.kind == 'iri':
            self.advance()
            full = token.text[1:-1]
            for prefix, base in self.prefixes.items():
                if full.startswith(base) and len(full) > len(base):
                    return Iri(prefix, full[len(base):])
            self.fail(f'IRI <{full}> matches no declared prefix', token)
        if allow_literal and token.kind == 'string':
            self.advance()
            return Literal(_unquote(token.text), 'string')
        if allow_literal and token.kind == 'number':
            self.advance()
            if '.' in token.text:
                return Literal(Decimal(token.text), 'decimal')
            return Literal(int(token.text), 'int')
        self.fail(f'unexpected "{token.text or "end of input"}" in triple pattern')


def parse(text: str) -> SelectQuery:
    """Parse the supported SPARQL subset. Errors carry the byte offset of the offending token."""
    return _Parser(text).document()


def parse_document(text: str) -> tuple[SelectQuery, dict[str, str]]:
    parser = _Parser(text)
    query = parser.document()
    return query, parser.prefixes

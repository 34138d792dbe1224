from geoqa.sparql.ast import AGGREGATES, Aggregate, RegexFilter, SelectQuery, SolutionSet, TriplePattern, Var
from geoqa.sparql.evaluator import evaluate, regex_matches, term_text
from geoqa.sparql.parser import parse, parse_document
from geoqa.sparql.serializer import format_filter, format_term, serialize, strip_prefixes

"""
Query shapes shared by both question types

QT1 uses the generic two-class pattern, the single-class data-property pattern and the
two-class data-property pattern; QT2 frames fill the nested aggregate (Type 1) or the flat
aggregate (Type 2) template. Every shape filters the entity variable by a case-insensitive regex.
"""

from geoqa.formulation.frames import TYPE1_FUNCTIONS, TYPE2_FUNCTIONS, QueryFrame
from geoqa.kb.terms import RDF_TYPE, Iri
from geoqa.modules.error import FormulationError
from geoqa.sparql.ast import Aggregate, RegexFilter, SelectQuery, TriplePattern, Var

X = Var('x')
Y = Var('y')
M = Var('m')
VAR = Var('var')
VALUE = Var('variable')
TOTAL = Var('total')


def entity_filter(var: Var, literal: str) -> RegexFilter:
    return RegexFilter(var, literal, 'i')


def generic_pattern(entity_class: Iri, target_class: Iri, prop: Iri, target_first: bool, literal: str) -> SelectQuery:
    """`?x` is the named entity, `?y` the answers; the link reads `?y P ?x` when `target_first`."""
    link = TriplePattern(Y, prop, X) if target_first else TriplePattern(X, prop, Y)
    return SelectQuery((Y,), (
        TriplePattern(X, RDF_TYPE, entity_class),
        TriplePattern(Y, RDF_TYPE, target_class),
        link,
        entity_filter(X, literal),
    ))


def entity_data_pattern(entity_class: Iri, data_property: Iri, literal: str) -> SelectQuery:
    return SelectQuery((VALUE,), (
        TriplePattern(X, RDF_TYPE, entity_class),
        TriplePattern(X, data_property, VALUE),
        entity_filter(X, literal),
    ))


def linked_data_pattern(target_class: Iri, entity_class: Iri, prop: Iri, entity_first: bool,
                        data_property: Iri, literal: str) -> SelectQuery:
    """`?x` ranges over the target class whose values are asked for, `?y` is the named entity."""
    link = TriplePattern(Y, prop, X) if entity_first else TriplePattern(X, prop, Y)
    return SelectQuery((VALUE,), (
        TriplePattern(X, RDF_TYPE, target_class),
        TriplePattern(Y, RDF_TYPE, entity_class),
        link,
        TriplePattern(X, data_property, VALUE),
        entity_filter(Y, literal),
    ))


def _require(frame: QueryFrame, *names: str):
    missing = [name for name in names if getattr(frame, name) is None]
    if missing:
        raise FormulationError(f'frame is missing {", ".join(missing)} for function '
                               f'"{frame.function_name}"')


def instantiate_template(frame: QueryFrame) -> SelectQuery:
    """
    Fill the aggregate template matching the frame's function

    Args:
        frame: QT2 frame; min/max select the nested Type 1 shape, count/sum the flat Type 2 shape

    Returns:
        SelectQuery ready for serialization and evaluation
    """
    if frame.function_name in TYPE1_FUNCTIONS:
        _require(frame, 'target_class', 'entity_class', 'data_property', 'object_property', 'named_entity_filter')
        inner = SelectQuery((Aggregate(frame.function_name.upper(), VAR, M),), (
            TriplePattern(X, RDF_TYPE, frame.entity_class),
            TriplePattern(Y, RDF_TYPE, frame.target_class),
            TriplePattern(Y, frame.object_property, X),
            TriplePattern(Y, frame.data_property, VAR),
            entity_filter(X, frame.named_entity_filter),
        ))
        return SelectQuery((Y, M), (
            TriplePattern(Y, RDF_TYPE, frame.target_class),
            TriplePattern(Y, frame.data_property, M),
            inner,
        ))

    if frame.function_name in TYPE2_FUNCTIONS:
        _require(frame, 'target_class', 'entity_class', 'object_property', 'named_entity_filter')
        group = [
            TriplePattern(X, RDF_TYPE, frame.entity_class),
            TriplePattern(Y, RDF_TYPE, frame.target_class),
            TriplePattern(Y, frame.object_property, X),
        ]
        if frame.function_name == 'sum':
            _require(frame, 'data_property')
            group.append(TriplePattern(Y, frame.data_property, VAR))
            aggregate = Aggregate('SUM', VAR, TOTAL)
        else:
            aggregate = Aggregate('COUNT', Y, TOTAL)
        group.append(entity_filter(X, frame.named_entity_filter))
        return SelectQuery((aggregate,), tuple(group))

    raise FormulationError(f'frame has no aggregate function (got "{frame.function_name}")')

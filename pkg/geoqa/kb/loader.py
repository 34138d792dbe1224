"""
Schema and instance file loaders
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable

from geoqa.kb.base import KnowledgeBase
from geoqa.kb.lexicon import AxiomKind, Gazetteer, Lexicalization
from geoqa.kb.schema import Alias, DataProperty, ObjectProperty, OntologySchema
from geoqa.kb.store import TripleStore
from geoqa.kb.terms import RANGE_KINDS, RDF_TYPE, RDFS_SUBCLASS_OF, Iri, Literal, Triple, class_iri, instance_iri
from geoqa.modules.error import InstanceError, SchemaError
from geoqa.modules.turkish import fold

logger = logging.getLogger('geoqa.kb')

LabelLemmatizer = Callable[[str], tuple[str, ...]]


def default_label_lemmas(label: str) -> tuple[str, ...]:
    return tuple(fold(word) for word in label.split())


def _content_lines(text: str, sep: str | None = None) -> Iterable[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        if sep is None:
            yield number, stripped.split('#', 1)[0].split()
        else:
            yield number, [part.strip() for part in raw.rstrip('\r\n').split(sep)]


def load_schema(schema_text: str) -> OntologySchema:
    """
    Parse the line-oriented schema format

    Args:
        schema_text: content with `class`, `subclass`, `objprop`, `dataprop` and `alias` lines

    Returns:
        OntologySchema holding exactly the declared classes and properties
    """
    schema = OntologySchema()
    pending_classes: list[tuple[int, str]] = []

    def need_class(name: str, number: int) -> Iri:
        pending_classes.append((number, name))
        return class_iri(name)

    raw_object_props: list[tuple[int, ObjectProperty]] = []
    seen_properties: set[str] = set()

    for number, words in _content_lines(schema_text):
        keyword, args = words[0], words[1:]

        if keyword == 'class':
            if not args:
                raise SchemaError('class name missing', number)
            iri = class_iri(args[0])
            if iri in schema.classes:
                raise SchemaError(f'class "{args[0]}" declared twice', number)
            schema.classes[iri] = ' '.join(args[1:]) or args[0]

        elif keyword == 'subclass':
            if len(args) != 2:
                raise SchemaError('expected "subclass <Child> <Parent>"', number)
            schema.subclass_pairs.add((need_class(args[0], number), need_class(args[1], number)))

        elif keyword == 'objprop':
            if len(args) < 3 or args[1] != 'domain':
                raise SchemaError('expected "objprop <Name> domain <C1>-><C2>[,...]"', number)
            name, pairs_text, flags = args[0], args[2], args[3:]
            pairs = []
            for pair in pairs_text.split(','):
                if '->' not in pair:
                    raise SchemaError(f'malformed domain pair "{pair}"', number)
                left, right = pair.split('->', 1)
                pairs.append((need_class(left, number), need_class(right, number)))
            symmetric = False
            inverse = None
            index = 0
            while index < len(flags):
                if flags[index] == 'symmetric':
                    symmetric = True
                    index += 1
                elif flags[index] == 'inverse' and index + 1 < len(flags):
                    inverse = Iri('ins', flags[index + 1])
                    index += 2
                else:
                    raise SchemaError(f'unexpected "{flags[index]}"', number)
            if name in seen_properties:
                raise SchemaError(f'property "{name}" declared twice', number)
            seen_properties.add(name)
            raw_object_props.append((number, ObjectProperty(Iri('ins', name), tuple(pairs), symmetric, inverse)))

        elif keyword == 'dataprop':
            if len(args) != 5 or args[1] != 'domains' or args[3] != 'range':
                raise SchemaError('expected "dataprop <Name> domains <C1>,... range <kind>"', number)
            if args[4] not in RANGE_KINDS:
                raise SchemaError(f'unknown range "{args[4]}"', number)
            if args[0] in seen_properties:
                raise SchemaError(f'property "{args[0]}" declared twice', number)
            seen_properties.add(args[0])
            domains = tuple(need_class(name, number) for name in args[2].split(',') if name)
            schema.data_properties.append(DataProperty(Iri('ins', args[0]), domains, args[4]))

        elif keyword == 'alias':
            if len(args) < 3:
                raise SchemaError('expected "alias <lemma> <kind> <Name>"', number)
            try:
                kind = AxiomKind.parse(args[-2])
            except ValueError as e:
                raise SchemaError(str(e), number)
            lemma = ' '.join(args[:-2])
            prefix = 'geo_turkce' if kind == AxiomKind.CLASS else 'ins'
            schema.aliases.append(Alias(lemma, kind.value, Iri(prefix, args[-1])))

        else:
            raise SchemaError(f'unknown keyword "{keyword}"', number)

    if not schema.classes:
        raise SchemaError('no classes declared')

    for number, name in pending_classes:
        if class_iri(name) not in schema.classes:
            raise SchemaError(f'undeclared class "{name}"', number)

    by_name = {prop.name: (number, prop) for number, prop in raw_object_props}
    for number, prop in raw_object_props:
        if prop.inverse_of is None:
            schema.object_properties.append(prop)
            continue
        other = by_name.get(prop.inverse_of)
        if other is None or other[1].inverse_of != prop.name:
            raise SchemaError(f'inverse of "{prop.name.local}" declared on only one side', number)
        # domain pairs of an inverse pair are mirrored into each other
        mirrored = [(right, left) for left, right in other[1].domain_pairs]
        pairs = list(dict.fromkeys([*prop.domain_pairs, *mirrored]))
        schema.object_properties.append(ObjectProperty(prop.name, tuple(pairs), prop.symmetric, prop.inverse_of))

    for alias in schema.aliases:
        declared = {
            AxiomKind.CLASS.value: alias.target in schema.classes,
            AxiomKind.DATA_PROPERTY.value: schema.data_property(alias.target) is not None,
            AxiomKind.OBJECT_PROPERTY.value: schema.object_property(alias.target) is not None,
            AxiomKind.INDIVIDUAL.value: True,
        }
        if not declared[alias.kind]:
            raise SchemaError(f'alias "{alias.lemma}" names undeclared {alias.kind} "{alias.target.local}"')

    logger.debug(f'Schema: {len(schema.classes)} classes, {len(schema.object_properties)} object '
                 f'and {len(schema.data_properties)} data properties')
    return schema


@dataclass
class InstanceData:
    triples: list[Triple] = field(default_factory=list)
    labels: dict[Iri, str] = field(default_factory=dict)


def load_instances(tsv_text: str, schema: OntologySchema, known: Iterable[Iri] = ()) -> InstanceData:
    """
    Parse instance rows into triples

    Args:
        tsv_text: `individual<TAB>ID<TAB>Class<TAB>Label` and `assert<TAB>Subject<TAB>Property<TAB>Value` rows
        schema: loaded schema that names every class and property
        known: individuals declared by previously loaded files, usable as assertion subjects and objects

    Returns:
        InstanceData with one rdf:type triple per individual and one triple per assertion
    """
    data = InstanceData()
    asserts: list[tuple[int, list[str]]] = []
    known = set(known)

    for number, cells in _content_lines(tsv_text, sep='\t'):
        kind = cells[0]
        if kind == 'individual':
            if len(cells) != 4 or not all(cells):
                raise InstanceError('expected individual<TAB>ID<TAB>Class<TAB>Label', number)
            _, ident, cls_name, label = cells
            cls = schema.class_by_name(cls_name)
            if cls is None:
                raise InstanceError(f'unknown class "{cls_name}"', number)
            try:
                individual = instance_iri(ident)
            except ValueError as e:
                raise InstanceError(str(e), number)
            if individual in data.labels or individual in known:
                raise InstanceError(f'duplicate individual "{ident}"', number)
            data.labels[individual] = label
            data.triples.append(Triple(individual, RDF_TYPE, cls))
        elif kind == 'assert':
            if len(cells) != 4 or not all(cells):
                raise InstanceError('expected assert<TAB>Subject<TAB>Property<TAB>Value', number)
            asserts.append((number, cells))
        else:
            raise InstanceError(f'unknown row kind "{kind}"', number)

    individuals = known | set(data.labels)
    for number, (_, subject_id, prop_name, value) in asserts:
        subject = instance_iri(subject_id)
        if subject not in individuals:
            raise InstanceError(f'unknown individual "{subject_id}"', number)
        prop = schema.property_by_name(prop_name)
        if prop is None:
            raise InstanceError(f'unknown property "{prop_name}"', number)
        if isinstance(prop, ObjectProperty):
            target = instance_iri(value)
            if target not in individuals:
                raise InstanceError(f'unknown individual "{value}"', number)
            data.triples.append(Triple(subject, prop.name, target))
        else:
            try:
                literal = Literal.parse(value, prop.range)
            except ValueError:
                raise InstanceError(f'"{value}" is not a valid {prop.range} for {prop_name}', number)
            data.triples.append(Triple(subject, prop.name, literal))

    logger.debug(f'Loaded {len(data.labels)} individuals and {len(asserts)} assertions')
    return data


def build_lexicalization(schema: OntologySchema, labels: dict[Iri, str], label_lemmas: LabelLemmatizer) -> Lexicalization:
    lexicon = Lexicalization()
    for cls, label in schema.classes.items():
        lexicon.add(' '.join(label_lemmas(label)), AxiomKind.CLASS, cls)
        lexicon.add(cls.local, AxiomKind.CLASS, cls)
    for prop in schema.data_properties:
        lexicon.add(prop.name.local, AxiomKind.DATA_PROPERTY, prop.name)
    for prop in schema.object_properties:
        lexicon.add(prop.name.local, AxiomKind.OBJECT_PROPERTY, prop.name)
    for alias in schema.aliases:
        lexicon.add(alias.lemma, AxiomKind(alias.kind), alias.target)
    for individual, label in labels.items():
        lexicon.add(' '.join(label_lemmas(label)), AxiomKind.INDIVIDUAL, individual)
        lexicon.add(individual.local, AxiomKind.INDIVIDUAL, individual)
    return lexicon


def build_knowledge_base(
    schema: OntologySchema,
    instance_texts: Iterable[str],
    prefix_map: dict[str, str],
    label_lemmas: LabelLemmatizer = default_label_lemmas,
) -> KnowledgeBase:
    store = TripleStore()
    labels: dict[Iri, str] = {}

    for child, parent in sorted(schema.subclass_pairs):
        store.add(Triple(child, RDFS_SUBCLASS_OF, parent))

    for text in instance_texts:
        data = load_instances(text, schema, known=labels)
        labels.update(data.labels)
        for triple in data.triples:
            store.add(triple)

    gazetteer = Gazetteer()
    for individual, label in labels.items():
        gazetteer.add(label_lemmas(label), individual)

    kb = KnowledgeBase(
        schema=schema,
        store=store,
        lexicon=build_lexicalization(schema, labels, label_lemmas),
        gazetteer=gazetteer,
        prefix_map=dict(prefix_map),
        labels=labels,
        closed=False,
        asserted_count=len(store),
    )
    logger.info(f'Knowledge base loaded: {len(labels)} individuals, {len(store)} triples')
    return kb

from decimal import Decimal
from pathlib import Path

from rdflib import Graph, Namespace
from rdflib import Literal as RdfLiteral
from rdflib import URIRef
from rdflib.namespace import OWL, RDF, RDFS, XSD

from geoqa.kb.base import KnowledgeBase
from geoqa.kb.terms import Iri

_DATATYPES = {'int': XSD.integer, 'decimal': XSD.decimal, 'string': XSD.string}


def to_graph(kb: KnowledgeBase) -> Graph:
    """Render schema declarations and every stored triple as an rdflib graph."""
    graph = Graph()
    for prefix, base in kb.prefix_map.items():
        graph.bind(prefix, Namespace(base), override=True)

    def node(term):
        if isinstance(term, Iri):
            return URIRef(kb.expand(term))
        value = term.value
        if term.kind == 'decimal' and not isinstance(value, Decimal):
            value = Decimal(value)
        return RdfLiteral(value, datatype=_DATATYPES[term.kind])

    for cls, label in kb.schema.classes.items():
        graph.add((node(cls), RDF.type, OWL.Class))
        graph.add((node(cls), RDFS.label, RdfLiteral(label, lang='tr')))
    for prop in kb.schema.object_properties:
        graph.add((node(prop.name), RDF.type, OWL.ObjectProperty))
        if prop.symmetric:
            graph.add((node(prop.name), RDF.type, OWL.SymmetricProperty))
        if prop.inverse_of is not None:
            graph.add((node(prop.name), OWL.inverseOf, node(prop.inverse_of)))
    for prop in kb.schema.data_properties:
        graph.add((node(prop.name), RDF.type, OWL.DatatypeProperty))
        graph.add((node(prop.name), RDFS.range, _DATATYPES[prop.range]))
    for individual, label in kb.labels.items():
        graph.add((node(individual), RDFS.label, RdfLiteral(label, lang='tr')))

    for s, p, o in kb.store:
        graph.add((node(s), node(p), node(o)))
    return graph


def export_turtle(kb: KnowledgeBase, path: str | Path) -> int:
    graph = to_graph(kb)
    Path(path).write_text(graph.serialize(format='turtle'), encoding='utf-8')
    return len(graph)


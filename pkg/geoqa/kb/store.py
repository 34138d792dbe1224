from typing import Iterator

from geoqa.kb.terms import Iri, Term, Triple


class TripleStore:
    """
    In-memory triple set kept in three orderings (subject-, predicate- and object-first).
    Nested dicts stand in for ordered sets so iteration follows insertion order.
    """

    def __init__(self, triples=()):
        self._spo: dict[Iri, dict[Iri, dict[Term, None]]] = {}
        self._pos: dict[Iri, dict[Term, dict[Iri, None]]] = {}
        self._osp: dict[Term, dict[Iri, dict[Iri, None]]] = {}
        self._size = 0
        for triple in triples:
            self.add(triple)

    def add(self, triple: Triple) -> bool:
        s, p, o = triple
        objects = self._spo.setdefault(s, {}).setdefault(p, {})
        if o in objects:
            return False
        objects[o] = None
        self._pos.setdefault(p, {}).setdefault(o, {})[s] = None
        self._osp.setdefault(o, {}).setdefault(s, {})[p] = None
        self._size += 1
        return True

    def copy(self) -> 'TripleStore':
        return TripleStore(iter(self))

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[Triple]:
        for s, by_predicate in self._spo.items():
            for p, objects in by_predicate.items():
                for o in objects:
                    yield Triple(s, p, o)

    def __contains__(self, triple: Triple) -> bool:
        return self.in_spo(triple)

    def in_spo(self, triple: Triple) -> bool:
        s, p, o = triple
        return o in self._spo.get(s, {}).get(p, {})

    def in_pos(self, triple: Triple) -> bool:
        s, p, o = triple
        return s in self._pos.get(p, {}).get(o, {})

    def in_osp(self, triple: Triple) -> bool:
        s, p, o = triple
        return p in self._osp.get(o, {}).get(s, {})

    def triples(self, s: Iri | None = None, p: Iri | None = None, o: Term | None = None) -> Iterator[Triple]:
        """Match a pattern where None is a wildcard, choosing the index by the bound positions."""
        if s is not None:
            by_predicate = self._spo.get(s, {})
            predicates = [p] if p is not None else list(by_predicate)
            for predicate in predicates:
                objects = by_predicate.get(predicate, {})
                if o is not None:
                    if o in objects:
                        yield Triple(s, predicate, o)
                else:
                    for obj in objects:
                        yield Triple(s, predicate, obj)
        elif p is not None:
            by_object = self._pos.get(p, {})
            objects = [o] if o is not None else list(by_object)
            for obj in objects:
                for subject in by_object.get(obj, {}):
                    yield Triple(subject, p, obj)
        elif o is not None:
            for subject, predicates in self._osp.get(o, {}).items():
                for predicate in predicates:
                    yield Triple(subject, predicate, o)
        else:
            yield from iter(self)

    def objects(self, s: Iri, p: Iri) -> list[Term]:
        return list(self._spo.get(s, {}).get(p, {}))

    def subjects(self, p: Iri, o: Term) -> list[Iri]:
        return list(self._pos.get(p, {}).get(o, {}))

    def terms(self) -> list[Term]:
        seen: dict[Term, None] = {}
        for s, p, o in self:
            seen[s] = None
            seen[o] = None
        return list(seen)

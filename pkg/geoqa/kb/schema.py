from dataclasses import dataclass, field

from geoqa.kb.terms import Iri


@dataclass(frozen=True)
class ObjectProperty:
    name: Iri
    domain_pairs: tuple[tuple[Iri, Iri], ...]
    symmetric: bool = False
    inverse_of: Iri | None = None


@dataclass(frozen=True)
class DataProperty:
    name: Iri
    domains: tuple[Iri, ...]
    range: str


@dataclass(frozen=True)
class Alias:
    lemma: str
    kind: str
    target: Iri


@dataclass
class OntologySchema:
    classes: dict[Iri, str] = field(default_factory=dict)
    subclass_pairs: set[tuple[Iri, Iri]] = field(default_factory=set)
    object_properties: list[ObjectProperty] = field(default_factory=list)
    data_properties: list[DataProperty] = field(default_factory=list)
    aliases: list[Alias] = field(default_factory=list)

    def superclasses(self, cls: Iri) -> list[Iri]:
        """`cls` followed by its ancestors, nearest first."""
        ordered = [cls]
        index = 0
        while index < len(ordered):
            current = ordered[index]
            for child, parent in sorted(self.subclass_pairs):
                if child == current and parent not in ordered:
                    ordered.append(parent)
            index += 1
        return ordered

    def is_subclass(self, child: Iri, parent: Iri) -> bool:
        return parent in self.superclasses(child)

    def object_property(self, name: Iri) -> ObjectProperty | None:
        return next((prop for prop in self.object_properties if prop.name == name), None)

    def data_property(self, name: Iri) -> DataProperty | None:
        return next((prop for prop in self.data_properties if prop.name == name), None)

    def is_declared_predicate(self, name: Iri) -> bool:
        return self.object_property(name) is not None or self.data_property(name) is not None

    def class_by_name(self, name: str) -> Iri | None:
        return next((cls for cls in self.classes if cls.local == name), None)

    def property_by_name(self, name: str) -> ObjectProperty | DataProperty | None:
        for prop in [*self.object_properties, *self.data_properties]:
            if prop.name.local == name:
                return prop
        return None

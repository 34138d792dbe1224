from dataclasses import dataclass

from geoqa.kb.base import KnowledgeBase
from geoqa.kb.lookup import entity_class_of
from geoqa.kb.terms import Iri, instance_iri
from geoqa.modules.error import FormulationError, LookupFailure
from geoqa.modules.turkish import ascii_fold, fold, upper_first
from geoqa.nlp.sentence import AnnotatedSentence, EntitySpan


@dataclass(frozen=True)
class EntityRef:
    individual: Iri
    cls: Iri
    key: str  # folded lemma of the first token of the name
    surface: str = ''
    span: EntitySpan | None = None
    words: tuple[str, ...] = ()

    @property
    def display_literal(self) -> str:
        """First word of the name re-cased like the question ("Ankara", "Ege", "İzmir")."""
        return upper_first(self.key) if self.surface[:1].isupper() else self.key

    def filter_literal(self, kb: KnowledgeBase) -> str:
        """
        Regex text selecting the entity IRI

        Normally the re-cased first word. A first word that also occurs in a namespace base
        ("İç" folds into "semanticweb") would match every IRI, so the next words of the name
        are joined the way local names join them until it no longer does ("İçAnadolu").
        """
        literal = self.display_literal
        bases = [ascii_fold(base) for base in kb.prefix_map.values()]
        for word in self.words[1:]:
            if not any(ascii_fold(literal) in base for base in bases):
                break
            literal += upper_first(word)
        return literal


def resolve_entity(sentence: AnnotatedSentence, kb: KnowledgeBase) -> EntityRef | None:
    spans = sentence.entity_spans
    if len(spans) > 1:
        names = ', '.join(' '.join(span.lemmas) for span in spans)
        raise FormulationError(f'questions naming several entities are not supported ({names})')
    if not spans:
        return None
    span = spans[0]
    if span.individual is None:
        raise LookupFailure(f'"{" ".join(span.lemmas)}" names several individuals', span.candidates)
    return EntityRef(
        individual=span.individual,
        cls=entity_class_of(span.individual, kb),
        key=span.lemmas[0],
        surface=sentence.tokens[span.start - 1].surface,
        span=span,
        words=tuple(span.lemmas),
    )


def default_entity(name: str, kb: KnowledgeBase) -> EntityRef:
    individual = instance_iri(name)
    label = kb.labels.get(individual)
    if label is None:
        raise LookupFailure(f'default entity "{name}" is not an individual of the knowledge base')
    words = label.split()
    return EntityRef(individual, entity_class_of(individual, kb), fold(words[0]), words[0], words=tuple(words))

from dataclasses import dataclass

import numpy as np

from geoqa.formulation.frames import SuperlativeLexicon
from geoqa.kb.schema import OntologySchema
from geoqa.kb.terms import Iri
from geoqa.nlp.lexicon import PosLexicon
from geoqa.nlp.sentence import AnnotatedSentence

QUANTIFIER_FEATURES = ('kaç', 'toplam', 'ne kadar', 'en')


@dataclass(frozen=True)
class FeatureEncoder:
    """
    Fixed-width question encoding: bag of lexicon lemmas, quantifier indicators,
    the superlative adjective after "en" and the entity class, all one-hot.
    """
    vocabulary: tuple[str, ...]
    adjectives: tuple[str, ...]
    classes: tuple[str, ...]

    @classmethod
    def build(cls, lexicon: PosLexicon, superlatives: SuperlativeLexicon, schema: OntologySchema) -> 'FeatureEncoder':
        return cls(
            vocabulary=tuple(sorted(lexicon.lemmas())),
            adjectives=tuple(superlatives.adjectives()),
            classes=tuple(sorted(iri.local for iri in schema.classes)),
        )

    @property
    def size(self) -> int:
        return len(self.vocabulary) + len(QUANTIFIER_FEATURES) + len(self.adjectives) + len(self.classes)

    def names(self) -> list[str]:
        return [
            *(f'lemma={lemma}' for lemma in self.vocabulary),
            *(f'quantifier={word}' for word in QUANTIFIER_FEATURES),
            *(f'superlative={adjective}' for adjective in self.adjectives),
            *(f'entity_class={name}' for name in self.classes),
        ]

    def encode(self, sentence: AnnotatedSentence, entity_class: Iri | None) -> np.ndarray:
        keys = [analysis.key for analysis in sentence.analyses if analysis.pos != 'Punc']
        vector = np.zeros(self.size)

        offset = 0
        index = {lemma: position for position, lemma in enumerate(self.vocabulary)}
        for key in keys:
            if key in index:
                vector[offset + index[key]] = 1.0

        offset += len(self.vocabulary)
        bigrams = {' '.join(pair) for pair in zip(keys, keys[1:])}
        for position, word in enumerate(QUANTIFIER_FEATURES):
            if word in keys or word in bigrams:
                vector[offset + position] = 1.0

        offset += len(QUANTIFIER_FEATURES)
        adjective = self.superlative_after_en(keys)
        if adjective is not None:
            vector[offset + self.adjectives.index(adjective)] = 1.0

        offset += len(self.adjectives)
        if entity_class is not None and entity_class.local in self.classes:
            vector[offset + self.classes.index(entity_class.local)] = 1.0
        return vector

    def superlative_after_en(self, keys: list[str]) -> str | None:
        for position, key in enumerate(keys):
            if key != 'en':
                continue
            for size in (2, 1):
                candidate = ' '.join(keys[position + 1:position + 1 + size])
                if len(keys) > position + size and candidate in self.adjectives:
                    return candidate
        return None

    def to_dict(self) -> dict:
        return {'vocabulary': list(self.vocabulary), 'adjectives': list(self.adjectives), 'classes': list(self.classes)}

    @classmethod
    def from_dict(cls, data: dict) -> 'FeatureEncoder':
        return cls(tuple(data['vocabulary']), tuple(data['adjectives']), tuple(data['classes']))

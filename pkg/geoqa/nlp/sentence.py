from dataclasses import dataclass, field
from enum import Enum

from geoqa.kb.terms import Iri
from geoqa.modules.turkish import fold

POS_TAGS = ('Noun', 'Verb', 'Adj', 'Adv', 'Pron', 'Postp', 'Punc', 'Num', 'Conj', 'Det')
CASES = ('Nom', 'Acc', 'Dat', 'Loc', 'Abl', 'Gen')
POSSESSIVES = ('Pnon', 'P3sg', 'P3pl')
INTERROGATIVES = ('ne', 'hangi', 'nere', 'kim')
COPULA_SEGMENT = ('Verb', ('Zero', 'Pres', 'A3sg', 'Cop'))


@dataclass(frozen=True)
class Token:
    surface: str
    index: int

    def __post_init__(self):
        if not self.surface:
            raise ValueError('empty token')


@dataclass(frozen=True)
class MorphAnalysis:
    lemma: str
    pos: str
    features: tuple[str, ...] = ()
    derivations: tuple[tuple[str, tuple[str, ...]], ...] = ()
    # surface split used only for ranking: the stem as written and the suffix morphs after it
    stem: str = field(default='', compare=False)
    suffixes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def key(self) -> str:
        return fold(self.lemma)

    @property
    def feats(self) -> str:
        """FEATS column text: tags joined by `|`, each derivation opened by `^DB`."""
        text = '|'.join(self.features)
        for pos, tags in self.derivations:
            text += '^DB|' + '|'.join((pos, *tags))
        return text or '_'

    @property
    def final_pos(self) -> str:
        return self.derivations[-1][0] if self.derivations else self.pos

    @property
    def case(self) -> str | None:
        return next((tag for tag in self.features if tag in CASES), None)

    @property
    def possessive(self) -> str | None:
        return next((tag for tag in self.features if tag in POSSESSIVES), None)

    @property
    def is_possessed(self) -> bool:
        return self.possessive in ('P3sg', 'P3pl')

    @property
    def is_proper(self) -> bool:
        return 'Prop' in self.features

    @property
    def is_copular(self) -> bool:
        return any('Cop' in tags for _, tags in self.derivations)

    @property
    def is_participle(self) -> bool:
        return self.pos == 'Verb' and any('PresPart' in tags for _, tags in self.derivations)

    @property
    def is_relative(self) -> bool:
        return any('Rel' in tags for _, tags in self.derivations)

    @property
    def is_verbal(self) -> bool:
        return self.pos == 'Verb' or self.final_pos == 'Verb'

    @property
    def is_finite_verb(self) -> bool:
        return self.is_verbal and not self.is_participle

    @property
    def is_nominal(self) -> bool:
        return self.pos in ('Noun', 'Adj', 'Pron') and self.case is not None

    @property
    def is_bare_nominative(self) -> bool:
        return self.pos == 'Noun' and self.case == 'Nom' and self.possessive == 'Pnon' and not self.derivations

    @property
    def is_interrogative(self) -> bool:
        return self.pos == 'Pron' and self.key in INTERROGATIVES

    @classmethod
    def from_conll(cls, lemma: str, pos: str, feats: str) -> 'MorphAnalysis':
        if feats in ('', '_'):
            return cls(lemma, pos)
        head, *segments = feats.split('^DB')
        features = tuple(tag for tag in head.split('|') if tag)
        derivations = []
        for segment in segments:
            tags = [tag for tag in segment.split('|') if tag]
            if tags:
                derivations.append((tags[0], tuple(tags[1:])))
        return cls(lemma, pos, features, tuple(derivations))

    def __str__(self) -> str:
        return '+'.join([self.lemma, self.pos, *self.features]) + ''.join(
            '^DB+' + '+'.join((pos, *tags)) for pos, tags in self.derivations)


class NerLabel(str, Enum):
    BEGIN = 'B-LOCATION'
    INSIDE = 'I-LOCATION'
    OUTSIDE = 'O'


class Relation(str, Enum):
    SUBJECT = 'SUBJECT'
    OBJECT = 'OBJECT'
    MODIFIER = 'MODIFIER'
    POSSESSOR = 'POSSESSOR'
    ARGUMENT = 'ARGUMENT'
    PREDICATE = 'PREDICATE'
    PUNCTUATION = 'PUNCTUATION'
    CLASSIFIER = 'CLASSIFIER'


@dataclass(frozen=True)
class DepRow:
    id: int
    form: str
    lemma: str
    cpostag: str
    postag: str
    feats: str
    head: int
    relation: Relation
    phead: str = '_'
    pdeprel: str = '_'


@dataclass(frozen=True)
class EntitySpan:
    start: int
    end: int
    lemmas: tuple[str, ...]
    individual: Iri | None = None
    candidates: tuple[Iri, ...] = ()

    @property
    def indexes(self) -> range:
        return range(self.start, self.end + 1)

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) > 1


@dataclass
class AnnotatedSentence:
    text: str
    tokens: list[Token]
    analyses: list[MorphAnalysis]
    ner_labels: list[NerLabel] = field(default_factory=list)
    dep_rows: list[DepRow] = field(default_factory=list)
    entity_spans: list[EntitySpan] = field(default_factory=list)

    def __post_init__(self):
        if len(self.analyses) != len(self.tokens):
            raise ValueError('one analysis per token is required')
        for name in ('ner_labels', 'dep_rows'):
            value = getattr(self, name)
            if value and len(value) != len(self.tokens):
                raise ValueError(f'{name} must be parallel to tokens')

    def __len__(self) -> int:
        return len(self.tokens)

    def analysis(self, index: int) -> MorphAnalysis:
        return self.analyses[index - 1]

    def lemma(self, index: int) -> str:
        return self.analyses[index - 1].key

    def row(self, index: int) -> DepRow:
        return self.dep_rows[index - 1]

    def governor(self, index: int) -> int:
        return self.dep_rows[index - 1].head

    def dependents(self, index: int, relation: Relation | None = None) -> list[int]:
        return [
            row.id for row in self.dep_rows
            if row.head == index and (relation is None or row.relation == relation)
        ]

    def with_relation(self, relation: Relation) -> list[int]:
        return [row.id for row in self.dep_rows if row.relation == relation]

    def predicate(self) -> int | None:
        return next((row.id for row in self.dep_rows if row.relation == Relation.PREDICATE), None)

    def span_of(self, index: int) -> EntitySpan | None:
        return next((span for span in self.entity_spans if index in span.indexes), None)

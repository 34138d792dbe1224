"""
Suffix-stripping morphological analysis and the deterministic disambiguator

Suffix slots are peeled from the end of the word in this order: copula, relativizer `ki`,
case, possessive, plural; the remaining stem must be a lexicon lemma. Every slot lists its
harmonic allomorphs explicitly together with the context it may follow.
"""

import logging
from itertools import product
from typing import Iterator, NamedTuple

from geoqa.modules.turkish import fold
from geoqa.nlp.lexicon import PosLexicon
from geoqa.nlp.sentence import COPULA_SEGMENT, INTERROGATIVES, MorphAnalysis, Token

logger = logging.getLogger('geoqa.nlp')

VOWELS = set('aeıioöuüâîû')
APOSTROPHES = ("'", '’')
PUNCTUATION = set('?.,!;:')
NOMINAL_POS = ('Noun', 'Adj', 'Pron')
POS_PRIORITY = {'Noun': 0, 'Adj': 1, 'Verb': 2}


class Suffix(NamedTuple):
    form: str
    tag: str
    after: str = 'any'  # any | vowel | consonant | plain | possessive | vowel_or_possessive


def _table(tag: str, after: str, *forms: str) -> list[Suffix]:
    return [Suffix(form, tag, after) for form in forms]


COPULAS = _table('Cop', 'any', 'dır', 'dir', 'dur', 'dür', 'tır', 'tir', 'tur', 'tür')

RELATIVIZERS = _table('Rel', 'any', 'ki')

CASE_SUFFIXES = [
    *_table('Acc', 'consonant', 'ı', 'i', 'u', 'ü'),
    *_table('Acc', 'vowel', 'yı', 'yi', 'yu', 'yü'),
    *_table('Acc', 'possessive', 'nı', 'ni', 'nu', 'nü'),
    *_table('Dat', 'consonant', 'a', 'e'),
    *_table('Dat', 'vowel', 'ya', 'ye'),
    *_table('Dat', 'possessive', 'na', 'ne'),
    *_table('Loc', 'plain', 'da', 'de', 'ta', 'te'),
    *_table('Loc', 'possessive', 'nda', 'nde'),
    *_table('Abl', 'plain', 'dan', 'den', 'tan', 'ten'),
    *_table('Abl', 'possessive', 'ndan', 'nden'),
    *_table('Gen', 'consonant', 'ın', 'in', 'un', 'ün'),
    *_table('Gen', 'vowel_or_possessive', 'nın', 'nin', 'nun', 'nün'),
]

POSSESSIVE_SUFFIXES = [
    *_table('P3sg', 'consonant', 'ı', 'i', 'u', 'ü'),
    *_table('P3sg', 'vowel', 'sı', 'si', 'su', 'sü'),
    *_table('P3pl', 'any', 'ları', 'leri'),
]

PLURAL_SUFFIXES = _table('A3pl', 'any', 'lar', 'ler')

AORIST_SUFFIXES = [
    *_table('Aor', 'vowel', 'r'),
    *_table('Aor', 'consonant', 'ar', 'er', 'ır', 'ir', 'ur', 'ür'),
]

PARTICIPLE_SUFFIXES = [
    *_table('PresPart', 'consonant', 'an', 'en'),
    *_table('PresPart', 'vowel', 'yan', 'yen'),
]

QUESTION_PARTICLES: dict[str, str] = {}
for base, (person, endings) in product(('mi', 'mı', 'mu', 'mü'), (
        ('A3sg', ('',)),
        ('A2sg', ('sin', 'sın', 'sun', 'sün')),
        ('A2pl', ('siniz', 'sınız', 'sunuz', 'sünüz')),
        ('A3sg', ('dir', 'dır', 'dur', 'dür')))):
    for ending in endings:
        QUESTION_PARTICLES[base + ending] = person


def _ends_with_vowel(text: str) -> bool:
    return bool(text) and text[-1] in VOWELS


def _fits(suffix: Suffix, before: str, possessed: bool = False) -> bool:
    if suffix.after == 'any':
        return True
    if suffix.after == 'possessive':
        return possessed
    if suffix.after == 'vowel_or_possessive':
        return possessed or _ends_with_vowel(before)
    if possessed:
        return False
    if suffix.after == 'plain':
        return True
    if suffix.after == 'vowel':
        return _ends_with_vowel(before)
    return bool(before) and not _ends_with_vowel(before)


def _strip(text: str, table: list[Suffix]) -> Iterator[tuple[Suffix | None, str]]:
    yield None, text
    for suffix in table:
        if text.endswith(suffix.form) and len(text) > len(suffix.form):
            yield suffix, text[:-len(suffix.form)]


def _nominal_features(pos: str, lemma: str, proper: bool, plural, poss, case) -> tuple[str, ...]:
    if pos == 'Adj' and not (plural or poss or case):
        return ()
    tags = ['Prop'] if proper else []
    if pos == 'Pron' and lemma in INTERROGATIVES:
        tags.append('Ques')
    tags.append('A3pl' if plural else 'A3sg')
    tags.append(poss.tag if poss else 'Pnon')
    tags.append(case.tag if case else 'Nom')
    return tuple(tags)


def _nominal_analyses(word: str, apostrophe: int | None, accept) -> list[MorphAnalysis]:
    """
    Enumerate (stem, suffix) segmentations of `word` whose stem `accept` maps to (lemma, pos, proper) triples.
    With an apostrophe position, only segmentations with a morpheme boundary there survive.
    """
    found = []
    for cop, rest1 in _strip(word, COPULAS):
        for rel, rest2 in _strip(rest1, RELATIVIZERS):
            for case, rest3 in _strip(rest2, CASE_SUFFIXES):
                if rel and (case is None or case.tag != 'Loc'):
                    continue
                for poss, rest4 in _strip(rest3, POSSESSIVE_SUFFIXES):
                    if case and not _fits(case, rest3, possessed=poss is not None):
                        continue
                    if poss and not _fits(poss, rest4):
                        continue
                    for plural, stem in _strip(rest4, PLURAL_SUFFIXES):
                        if plural and poss and poss.tag == 'P3pl':
                            continue
                        morphs = [m.form for m in (plural, poss, case, rel, cop) if m]
                        if apostrophe is not None:
                            boundaries, position = {len(stem)}, len(stem)
                            for form in morphs:
                                position += len(form)
                                boundaries.add(position)
                            if apostrophe not in boundaries:
                                continue
                        for lemma, pos, proper in accept(stem):
                            if pos not in NOMINAL_POS:
                                continue
                            derivations = []
                            if rel:
                                derivations.append(('Adj', ('Rel',)))
                            if cop:
                                derivations.append(COPULA_SEGMENT)
                            found.append(MorphAnalysis(
                                lemma=lemma,
                                pos=pos,
                                features=_nominal_features(pos, fold(lemma), proper, plural, poss, case),
                                derivations=tuple(derivations),
                                stem=stem,
                                suffixes=tuple(morphs),
                            ))
    return found


def _verbal_analyses(word: str, lexicon: PosLexicon) -> list[MorphAnalysis]:
    found = []
    for entry in lexicon.stems(word):
        if entry.pos == 'Verb':
            found.append(MorphAnalysis(entry.lemma, 'Verb', ('Pos', 'Imp', 'A2sg'), stem=word))
    for suffix in AORIST_SUFFIXES:
        stem = word[:-len(suffix.form)]
        if word.endswith(suffix.form) and stem and _fits(suffix, stem):
            for entry in lexicon.stems(stem):
                if entry.pos == 'Verb':
                    found.append(MorphAnalysis(entry.lemma, 'Verb', ('Pos', 'Aor', 'A3sg'),
                                               stem=stem, suffixes=(suffix.form,)))
    for suffix in PARTICIPLE_SUFFIXES:
        stem = word[:-len(suffix.form)]
        if word.endswith(suffix.form) and stem and _fits(suffix, stem):
            for entry in lexicon.stems(stem):
                if entry.pos == 'Verb':
                    found.append(MorphAnalysis(entry.lemma, 'Verb', ('Pos',), (('Adj', ('PresPart',)),),
                                               stem=stem, suffixes=(suffix.form,)))
    return found


def _closed_class_analyses(word: str, lexicon: PosLexicon) -> list[MorphAnalysis]:
    found = []
    for cop, stem in _strip(word, COPULAS):
        for entry in lexicon.stems(stem):
            if entry.pos == 'Postp':
                derivations = (('Noun', ('Zero', 'A3sg', 'Pnon', 'Nom')), COPULA_SEGMENT) if cop else ()
                found.append(MorphAnalysis(entry.lemma, 'Postp', ('PCNom',), derivations,
                                           stem=stem, suffixes=(cop.form,) if cop else ()))
            elif entry.pos in ('Adv', 'Conj', 'Det', 'Num') and cop is None:
                found.append(MorphAnalysis(entry.lemma, entry.pos, stem=stem))
    return found


def analyze_morphology(token: Token, lexicon: PosLexicon) -> list[MorphAnalysis]:
    """
    All analyses of one token. Never empty: an unknown word becomes a proper noun whose lemma is the surface.
    """
    surface = token.surface
    if all(ch in PUNCTUATION for ch in surface):
        return [MorphAnalysis(surface, 'Punc', stem=surface)]
    if surface.isdigit():
        return [MorphAnalysis(surface, 'Num', stem=surface)]

    apostrophe = next((surface.index(mark) for mark in APOSTROPHES if mark in surface), None)
    plain = surface
    for mark in APOSTROPHES:
        plain = plain.replace(mark, '')
    word = fold(plain)

    if word in QUESTION_PARTICLES:
        return [MorphAnalysis('mi', 'Postp', ('Ques', 'Pres', QUESTION_PARTICLES[word]), stem=word[:2],
                              suffixes=(word[2:],) if len(word) > 2 else ())]

    def from_lexicon(stem: str):
        return [(entry.lemma, entry.pos, False) for entry in lexicon.stems(stem)]

    analyses = _nominal_analyses(word, apostrophe, from_lexicon)
    if apostrophe is None:
        analyses += _verbal_analyses(word, lexicon)
        analyses += _closed_class_analyses(word, lexicon)
    elif not analyses:
        left = surface[:apostrophe]

        def proper_stem(stem: str):
            return [(left, 'Noun', True)] if len(stem) == apostrophe else []

        analyses = _nominal_analyses(word, apostrophe, proper_stem)

    if not analyses:
        logger.debug(f'No lexicon stem for "{surface}", treating it as a proper noun')
        return [MorphAnalysis(surface, 'Noun', ('Prop', 'A3sg', 'Pnon', 'Nom'), stem=word)]
    return list(dict.fromkeys(analyses))


def _rank(analysis: MorphAnalysis, expect_possessive: bool) -> tuple:
    order = ('P3sg', 'P3pl', 'Pnon') if expect_possessive else ('Pnon', 'P3sg', 'P3pl')
    possessive = analysis.possessive
    return (
        -len(analysis.stem),
        POS_PRIORITY.get(analysis.pos, 3),
        order.index(possessive) if possessive else 0,
        -len(analysis.suffixes),
        0 if analysis.case not in (None, 'Nom') else 1,
        analysis.feats,
    )


def disambiguate(analyses_per_token: list[list[MorphAnalysis]]) -> list[MorphAnalysis]:
    """
    Pick one analysis per token: longest stem, then Noun > Adj > Verb > others, then a possessive
    reading when an earlier genitive is still unmatched or the previous word is a bare nominative
    noun, then more morphemes, then an overt case.
    """
    chosen: list[MorphAnalysis] = []
    pending_genitives = 0
    for options in analyses_per_token:
        if not options:
            raise ValueError('every token needs at least one analysis')
        previous = chosen[-1] if chosen else None
        expect_possessive = pending_genitives > 0 or (previous is not None and previous.is_bare_nominative)
        best = min(options, key=lambda analysis: _rank(analysis, expect_possessive))
        if best.is_possessed and pending_genitives:
            pending_genitives -= 1
        if best.case == 'Gen':
            pending_genitives += 1
        chosen.append(best)
    return chosen

"""
Part-of-speech lexicon the morphological analyzer checks candidate stems against
"""

import logging
from dataclasses import dataclass
from pathlib import Path

from geoqa.modules.error import abort
from geoqa.modules.turkish import fold
from geoqa.nlp.sentence import POS_TAGS

logger = logging.getLogger('geoqa.nlp')


@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    pos: str


class PosLexicon:
    def __init__(self):
        self.entries: dict[str, list[LexiconEntry]] = {}
        self.variants: dict[str, list[str]] = {}

    def add(self, lemma: str, pos: str, variants: tuple[str, ...] = ()):
        if pos not in POS_TAGS:
            raise ValueError(f'unknown part of speech "{pos}"')
        key = fold(lemma)
        bucket = self.entries.setdefault(key, [])
        entry = LexiconEntry(key, pos)
        if entry not in bucket:
            bucket.append(entry)
        for variant in variants:
            self.variants.setdefault(fold(variant), [])
            if key not in self.variants[fold(variant)]:
                self.variants[fold(variant)].append(key)

    def stems(self, form: str) -> list[LexiconEntry]:
        """Entries whose lemma is written `form`, directly or through a stem variant (şehr -> şehir)."""
        key = fold(form)
        found = list(self.entries.get(key, []))
        for lemma in self.variants.get(key, []):
            found.extend(self.entries.get(lemma, []))
        return found

    def pos_of(self, lemma: str) -> list[str]:
        return [entry.pos for entry in self.entries.get(fold(lemma), [])]

    def lemmas(self, pos: str | None = None) -> list[str]:
        return [key for key, bucket in self.entries.items() if pos is None or any(e.pos == pos for e in bucket)]

    def __contains__(self, lemma: str) -> bool:
        return fold(lemma) in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def parse_lexicon(text: str) -> PosLexicon:
    """
    Read `lemma<TAB>POS[<TAB>variant,...]` rows; blank lines and `#` comments are skipped.
    """
    lexicon = PosLexicon()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        cells = [cell.strip() for cell in raw.split('\t')]
        if len(cells) not in (2, 3) or not cells[0] or not cells[1]:
            abort('lexicon', f'line {number}: expected lemma<TAB>POS[<TAB>variants]')
        variants = tuple(v.strip() for v in cells[2].split(',') if v.strip()) if len(cells) == 3 else ()
        try:
            lexicon.add(cells[0], cells[1], variants)
        except ValueError as e:
            abort('lexicon', f'line {number}: {e}')
    logger.debug(f'POS lexicon: {len(lexicon)} lemmas')
    return lexicon


def load_lexicon(path: str | Path) -> PosLexicon:
    return parse_lexicon(Path(path).read_text(encoding='utf-8'))

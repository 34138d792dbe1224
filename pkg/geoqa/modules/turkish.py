"""
Turkish case folding helpers shared by lexicon keys, gazetteer keys and regex filters
"""

_UPPER_TO_LOWER = str.maketrans({'I': 'ı', 'İ': 'i'})
_LOWER_TO_UPPER = str.maketrans({'i': 'İ', 'ı': 'I'})
_TO_ASCII = str.maketrans({'ç': 'c', 'ğ': 'g', 'ı': 'i', 'ö': 'o', 'ş': 's', 'ü': 'u', 'â': 'a', 'î': 'i', 'û': 'u'})


def fold(text: str) -> str:
    return text.translate(_UPPER_TO_LOWER).lower()


def ascii_fold(text: str) -> str:
    return fold(text).translate(_TO_ASCII)


def upper_first(text: str) -> str:
    if not text:
        return text
    return text[0].translate(_LOWER_TO_UPPER).upper() + text[1:]

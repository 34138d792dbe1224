from geoqa.modules.error import GeoQAError
from geoqa.nlp.sentence import Token

TERMINAL_PUNCTUATION = '?.,!'


def tokenize(question: str) -> list[Token]:
    """Split on whitespace and detach trailing punctuation; apostrophe suffixes stay on their word."""
    if not question or not question.strip():
        raise GeoQAError('tokenize')
    surfaces = []
    for chunk in question.split():
        trailing = []
        while len(chunk) > 1 and chunk[-1] in TERMINAL_PUNCTUATION:
            trailing.append(chunk[-1])
            chunk = chunk[:-1]
        surfaces.append(chunk)
        surfaces.extend(reversed(trailing))
    return [Token(surface, index) for index, surface in enumerate(surfaces, start=1)]

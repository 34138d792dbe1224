class GeoQAError(Exception):
    exit_code = 2

    def __init__(self, stage: str, description: str | None = None):
        self.stage = stage
        self.description = description
        super().__init__(self.stage, self.description)

    def __str__(self) -> str:
        return f'[{self.stage}] {self.description or error_messages.get(self.stage) or "Unknown error"}'

class ConfigError(GeoQAError):
    def __init__(self, description: str | None = None):
        super().__init__('config', description)

class SchemaError(GeoQAError):
    def __init__(self, description: str | None = None, line: int | None = None):
        self.line = line
        if line is not None:
            description = f'line {line}: {description}'
        super().__init__('schema', description)

class InstanceError(GeoQAError):
    def __init__(self, description: str | None = None, line: int | None = None):
        self.line = line
        if line is not None:
            description = f'line {line}: {description}'
        super().__init__('instances', description)

class LookupFailure(GeoQAError):
    """Unknown individual, or a label shared by several individuals (`candidates` set)."""

    def __init__(self, description: str | None = None, candidates: tuple = ()):
        self.candidates = tuple(candidates)
        super().__init__('lookup', description)

class SparqlSyntaxError(GeoQAError):
    def __init__(self, description: str | None = None, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            description = f'at offset {offset}: {description}'
        super().__init__('sparql-parse', description)

class SerializationError(GeoQAError):
    def __init__(self, description: str | None = None):
        super().__init__('serialize', description)

class EvaluationError(GeoQAError):
    def __init__(self, description: str | None = None):
        super().__init__('evaluate', description)

class ConllError(GeoQAError):
    def __init__(self, description: str | None = None, row: int | None = None):
        self.row = row
        if row is not None:
            description = f'row {row}: {description}'
        super().__init__('conll', description)

class ParseError(GeoQAError):
    def __init__(self, description: str | None = None):
        super().__init__('dependencies', description)

class FormulationError(GeoQAError):
    def __init__(self, description: str | None = None, stage: str = 'formulation'):
        super().__init__(stage, description)

class ClassifierError(GeoQAError):
    def __init__(self, description: str | None = None):
        super().__init__('qt2-classifier', description)

class SuiteError(GeoQAError):
    def __init__(self, description: str | None = None):
        super().__init__('suite', description)

error_messages = {
    'config': 'Invalid configuration.',
    'schema': 'Invalid schema file.',
    'instances': 'Invalid instance file.',
    'lookup': 'Unknown or ambiguous individual.',
    'tokenize': 'Question is empty.',
    'morphology': 'Morphological analysis failed.',
    'lexicon': 'Invalid lexicon file.',
    'ner': 'Entity tagging failed.',
    'dependencies': 'No predicate found.',
    'conll': 'Malformed CoNLL-X input.',
    'formulation': 'Could not formulate a query.',
    'qt2-classifier': 'Invalid QT2 training data.',
    'serialize': 'Query cannot be serialized.',
    'sparql-parse': 'Query syntax error.',
    'evaluate': 'Query evaluation failed.',
    'suite': 'Malformed suite file.',
    'superlatives': 'Invalid superlative lexicon.',
}

def abort(stage: str, description: str | None = None):
    raise GeoQAError(stage, description)

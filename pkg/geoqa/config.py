from dataclasses import dataclass, field
from os import environ as env
from pathlib import Path

from dotenv import load_dotenv

from geoqa.modules.error import ConfigError

# Load .env file if it exists (never overrides variables already set)
_env_path = Path(__file__).parent.parent / '.env'
if _env_path.exists():
    load_dotenv(_env_path, override=False)

# OPTIONAL CONFIGURATION
# - GEOQA_CONFIG: path of the run configuration file (key = value lines)
# - GEOQA_SEED: default seed for training and splits
# - LOG_FILENAME / LOG_MAX_BYTES / LOG_BACKUP_COUNT / LOG_LEVEL

class Paths:
    DATA_DIR = Path(__file__).parent / 'data'
    DEFAULT_CONFIG = DATA_DIR / 'geoqa.conf'

    @staticmethod
    def config_file() -> Path:
        return Path(env.get("GEOQA_CONFIG") or Paths.DEFAULT_CONFIG)

class Pipeline:
    _seed_str = env.get("GEOQA_SEED") or "7"
    SEED = int(_seed_str)

    # re-entries allowed in generateSparql before giving up
    MAX_REENTRIES = int(env.get("GEOQA_MAX_REENTRIES") or "5")

DEFAULT_PREFIXES = {
    'rdf': 'http://www.w3.org/1999/02/22-rdf-syntax-ns#',
    'rdfs': 'http://www.w3.org/2000/01/rdf-schema#',
    'geo_turkce': 'http://www.semanticweb.org/geo-tr/ontology#',
    'ins': 'http://www.semanticweb.org/geo-tr/instances#',
}

_PATH_KEYS = {'schema', 'lexicon', 'superlatives', 'suite', 'qt2_frames', 'qt2_model', 'gold_conll'}
_REQUIRED_KEYS = {'schema', 'instances', 'lexicon', 'superlatives'}
_KNOWN_KEYS = _PATH_KEYS | {'instances', 'seed', 'default_entity'}
# written by train-qt2, may not exist yet
_OPTIONAL_PATHS = {'qt2_model'}


@dataclass
class Config:
    schema_path: Path
    instance_paths: list[Path]
    lexicon_path: Path
    superlative_lexicon_path: Path
    prefix_map: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_PREFIXES))
    seed: int = 7
    gold_conll_path: Path | None = None
    suite_path: Path | None = None
    qt2_frames_path: Path | None = None
    qt2_model_path: Path | None = None
    default_entity: str | None = None
    source: Path | None = None


def parse_config(text: str, base_dir: Path, source: Path | None = None) -> Config:
    """
    Parse `key = value` configuration text

    Args:
        text: file content
        base_dir: directory that relative paths resolve against
        source: file the text came from, for messages

    Returns:
        Config with every referenced path checked for existence
    """
    values: dict[str, str] = {}
    prefixes = dict(DEFAULT_PREFIXES)

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        if '=' not in line:
            raise ConfigError(f'line {number}: expected "key = value"')
        key, value = (part.strip() for part in line.split('=', 1))

        if key.startswith('prefix.'):
            name = key[len('prefix.'):]
            if not name or not value:
                raise ConfigError(f'line {number}: empty prefix binding')
            prefixes[name] = value
            continue
        if key not in _KNOWN_KEYS:
            raise ConfigError(f'line {number}: unknown key "{key}"')
        values[key] = value

    missing = sorted(_REQUIRED_KEYS - values.keys())
    if missing:
        raise ConfigError(f'missing required keys: {", ".join(missing)}')

    def resolve(value: str) -> Path:
        path = Path(value)
        return path if path.is_absolute() else (base_dir / path)

    def existing(key: str) -> Path | None:
        if not values.get(key):
            return None
        path = resolve(values[key])
        if key not in _OPTIONAL_PATHS and not path.exists():
            raise ConfigError(f'{key}: no such file "{path}"')
        return path

    instance_paths = [resolve(item.strip()) for item in values['instances'].split(',') if item.strip()]
    for path in instance_paths:
        if not path.exists():
            raise ConfigError(f'instances: no such file "{path}"')

    try:
        seed = int(values.get('seed') or Pipeline.SEED)
    except ValueError:
        raise ConfigError(f'seed must be an integer, got "{values["seed"]}"')

    return Config(
        schema_path=existing('schema'),
        instance_paths=instance_paths,
        lexicon_path=existing('lexicon'),
        superlative_lexicon_path=existing('superlatives'),
        prefix_map=prefixes,
        seed=seed,
        gold_conll_path=existing('gold_conll'),
        suite_path=existing('suite'),
        qt2_frames_path=existing('qt2_frames'),
        qt2_model_path=existing('qt2_model'),
        default_entity=values.get('default_entity') or None,
        source=source,
    )


def load_config(path: str | Path | None = None) -> Config:
    config_path = Path(path) if path else Paths.config_file()
    if not config_path.exists():
        raise ConfigError(f'config file not found: {config_path}')
    return parse_config(config_path.read_text(encoding='utf-8'), config_path.parent, config_path)


# LOGGING CONFIGURATION
LOG_FILENAME = env.get("LOG_FILENAME") or "geoqa-log.txt"
LOG_MAX_BYTES = int(env.get("LOG_MAX_BYTES") or "10485760")  # 10MB default
LOG_BACKUP_COUNT = int(env.get("LOG_BACKUP_COUNT") or "5")
LOG_LEVEL = env.get("LOG_LEVEL") or "WARNING"

LOGGER_CONFIG_JSON = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'default': {
            'format': '[%(asctime)s][%(name)s][%(levelname)s] -> %(message)s',
            'datefmt': '%d/%m/%Y %H:%M:%S'
        },
    },
    'handlers': {
        'file_handler': {
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_FILENAME,
            'maxBytes': LOG_MAX_BYTES,
            'backupCount': LOG_BACKUP_COUNT,
            'formatter': 'default',
            'delay': True
        },
        'stream_handler': {
            'class': 'logging.StreamHandler',
            'formatter': 'default',
            'stream': 'ext://sys.stderr'
        }
    },
    'loggers': {
        'geoqa': {
            'level': LOG_LEVEL,
            'handlers': ['file_handler', 'stream_handler']
        }
    }
}

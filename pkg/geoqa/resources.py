"""
Everything a run needs, loaded once from a Config
"""

import logging
from dataclasses import dataclass

from geoqa.config import Config
from geoqa.formulation.classifier import FrameClassifier, RuleBasedClassifier, StatisticalClassifier
from geoqa.formulation.frames import SuperlativeLexicon, load_superlatives
from geoqa.formulation.mlp import TrainedModel, load_model
from geoqa.formulation.pipeline import QAPipeline
from geoqa.kb.base import KnowledgeBase
from geoqa.kb.closure import apply_closure
from geoqa.kb.loader import build_knowledge_base, load_schema
from geoqa.modules.error import ConfigError
from geoqa.nlp.analyzer import Analyzer
from geoqa.nlp.lexicon import PosLexicon, load_lexicon

logger = logging.getLogger('geoqa')


@dataclass
class Resources:
    config: Config
    lexicon: PosLexicon
    analyzer: Analyzer
    kb: KnowledgeBase
    superlatives: SuperlativeLexicon
    model: TrainedModel | None = None
    gold_conll: str | None = None

    def classifier(self, statistical: bool | None = None) -> FrameClassifier:
        """Trained classifier when a model is loaded (or forced), the lexicon-driven one otherwise."""
        use_model = self.model is not None if statistical is None else statistical
        if use_model:
            if self.model is None:
                raise ConfigError('no trained QT2 model configured')
            return StatisticalClassifier(self.model, self.config.default_entity)
        return RuleBasedClassifier(self.superlatives, self.config.default_entity)

    def pipeline(self, gold_conll: str | None = None, statistical: bool | None = None) -> QAPipeline:
        return QAPipeline(self.kb, self.analyzer, self.classifier(statistical), gold_conll or self.gold_conll)


def _read(path) -> str:
    try:
        return path.read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigError(f'cannot read "{path}": {e}')


def load_resources(config: Config) -> Resources:
    lexicon = load_lexicon(config.lexicon_path)
    analyzer = Analyzer(lexicon)
    schema = load_schema(_read(config.schema_path))
    kb = build_knowledge_base(
        schema,
        [_read(path) for path in config.instance_paths],
        config.prefix_map,
        analyzer.label_lemmas,
    )
    kb = apply_closure(kb)
    superlatives = load_superlatives(config.superlative_lexicon_path, schema)

    model = None
    if config.qt2_model_path is not None and config.qt2_model_path.exists():
        model = load_model(config.qt2_model_path)
        logger.info(f'Using trained QT2 model {config.qt2_model_path}')

    gold_conll = _read(config.gold_conll_path) if config.gold_conll_path else None
    return Resources(config, lexicon, analyzer, kb, superlatives, model, gold_conll)

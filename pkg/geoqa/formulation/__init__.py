from geoqa.formulation.classifier import FrameClassifier, RuleBasedClassifier, StatisticalClassifier, orient
from geoqa.formulation.entities import EntityRef, default_entity, resolve_entity
from geoqa.formulation.features import FeatureEncoder
from geoqa.formulation.frames import QueryFrame, QuestionType, SuperlativeLexicon, load_superlatives, parse_superlatives
from geoqa.formulation.generator import QT1Result, generate_sparql
from geoqa.formulation.mlp import TrainedModel, load_model, predict_qt2, save_model, train_qt2
from geoqa.formulation.pipeline import Answer, QAPipeline
from geoqa.formulation.quantitative import is_quantitative
from geoqa.formulation.templates import instantiate_template
from geoqa.formulation.training import LabeledQuestion, load_frames, parse_frames, train_from_frames

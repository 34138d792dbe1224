"""
Multi-head perceptron for QT2 frame slots

One logistic hidden layer feeds one softmax head per frame attribute. Training is plain
per-sample SGD on the summed cross-entropy, shuffled by a seeded generator, so equal
seeds give equal weights. Models are stored as JSON documents that carry the feature
layout and category lists next to the weights.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from geoqa.config import Pipeline
from geoqa.formulation.features import FeatureEncoder
from geoqa.formulation.frames import QueryFrame
from geoqa.modules.error import ClassifierError

logger = logging.getLogger('geoqa.formulation')

MODEL_FORMAT = 'geoqa-qt2-mlp'
MODEL_VERSION = 1

_CLASSES = ('Sehir', 'Bolge', 'Ulke', 'Dag', 'Nehir', 'Gol', 'Ada', 'Ova', 'Deniz', 'Ilce', 'null')

# attribute -> allowed categories, "null" standing for an empty slot
CATEGORIES: dict[str, tuple[str, ...]] = {
    'target_class': _CLASSES,
    'entity_class': _CLASSES,
    'data_property': ('yuzolcumu', 'populasyon', 'yukseklik', 'derinlik', 'tuzluluk', 'ortYagis',
                      'sicaklik', 'enlemBoylam', 'bitkiOrtusu', 'baskent', 'iklim', 'null'),
    'object_property': ('konumlanir', 'konumVar', 'komsu', 'null'),
    'function_name': ('count', 'min', 'max', 'sum', 'null'),
}
HEADS = tuple(CATEGORIES)

HIDDEN_UNITS = 32
EPOCHS = 500
LEARNING_RATE = 0.05


def validate_labels(slots: dict[str, str], where: str = '') -> dict[str, str]:
    checked = {}
    for head in HEADS:
        value = slots.get(head, 'null')
        if value not in CATEGORIES[head]:
            raise ClassifierError(f'{where}unknown {head} category "{value}"')
        checked[head] = value
    return checked


def _sigmoid(z: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-z))


def _softmax(z: np.ndarray) -> np.ndarray:
    shifted = np.exp(z - z.max())
    return shifted / shifted.sum()


class MultiHeadMLP:
    def __init__(self, n_features: int, hidden: int = HIDDEN_UNITS, seed: int = Pipeline.SEED):
        rng = np.random.default_rng(seed)
        self.n_features = n_features
        self.hidden = hidden
        self.w1 = rng.normal(0.0, 0.1, (n_features, hidden))
        self.b1 = np.zeros(hidden)
        self.heads: dict[str, tuple[np.ndarray, np.ndarray]] = {}
        for head in HEADS:
            size = len(CATEGORIES[head])
            self.heads[head] = (rng.normal(0.0, 0.1, (hidden, size)), np.zeros(size))

    def _forward(self, x: np.ndarray) -> tuple[np.ndarray, dict[str, np.ndarray]]:
        h = _sigmoid(x @ self.w1 + self.b1)
        return h, {head: _softmax(h @ w + b) for head, (w, b) in self.heads.items()}

    def fit(self, features: np.ndarray, targets: dict[str, np.ndarray], epochs: int = EPOCHS,
            learning_rate: float = LEARNING_RATE, seed: int = Pipeline.SEED) -> 'MultiHeadMLP':
        rng = np.random.default_rng(seed)
        for _ in range(epochs):
            for row in rng.permutation(len(features)):
                x = features[row]
                h, probs = self._forward(x)
                grad_h = np.zeros(self.hidden)
                for head, (w, b) in self.heads.items():
                    delta = probs[head].copy()
                    delta[targets[head][row]] -= 1.0
                    grad_h += w @ delta
                    w -= learning_rate * np.outer(h, delta)
                    b -= learning_rate * delta
                grad_z = grad_h * h * (1.0 - h)
                self.w1 -= learning_rate * np.outer(x, grad_z)
                self.b1 -= learning_rate * grad_z
        return self

    def predict(self, x: np.ndarray) -> dict[str, str]:
        if x.shape != (self.n_features,):
            raise ClassifierError(f'expected {self.n_features} features, got {x.shape[-1]}')
        _, probs = self._forward(x)
        return {head: CATEGORIES[head][int(np.argmax(probs[head]))] for head in HEADS}

    def to_dict(self) -> dict:
        return {
            'hidden': self.hidden,
            'w1': self.w1.tolist(),
            'b1': self.b1.tolist(),
            'heads': {head: {'w': w.tolist(), 'b': b.tolist()} for head, (w, b) in self.heads.items()},
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'MultiHeadMLP':
        w1 = np.asarray(data['w1'], dtype=float)
        model = cls(w1.shape[0], int(data['hidden']))
        model.w1 = w1
        model.b1 = np.asarray(data['b1'], dtype=float)
        for head in HEADS:
            stored = data['heads'][head]
            model.heads[head] = (np.asarray(stored['w'], dtype=float), np.asarray(stored['b'], dtype=float))
        return model


@dataclass
class TrainedModel:
    encoder: FeatureEncoder
    network: MultiHeadMLP
    seed: int = Pipeline.SEED

    def predict(self, vector: np.ndarray) -> QueryFrame:
        return QueryFrame.from_slots(self.network.predict(vector))


@dataclass
class TrainingReport:
    train_size: int
    test_size: int
    per_attribute: dict[str, float] = field(default_factory=dict)
    exact_frame: float = 0.0


def _targets(labels: list[dict[str, str]]) -> dict[str, np.ndarray]:
    return {head: np.array([CATEGORIES[head].index(label[head]) for label in labels]) for head in HEADS}


def train_qt2(samples: list[tuple[np.ndarray, QueryFrame]], seed: int = Pipeline.SEED,
              epochs: int = EPOCHS, learning_rate: float = LEARNING_RATE, hidden: int = HIDDEN_UNITS) -> MultiHeadMLP:
    """
    Fit a fresh network on (feature vector, frame) pairs

    Raises:
        ClassifierError: empty input, or a frame slot outside the allowed categories
    """
    if not samples:
        raise ClassifierError('labeled set is empty')
    labels = [validate_labels(frame.slots(), f'sample {number}: ') for number, (_, frame) in enumerate(samples, 1)]
    features = np.vstack([vector for vector, _ in samples])
    network = MultiHeadMLP(features.shape[1], hidden, seed)
    network.fit(features, _targets(labels), epochs, learning_rate, seed)
    logger.info(f'Trained QT2 classifier on {len(samples)} frames ({epochs} epochs, seed {seed})')
    return network


def predict_qt2(network: MultiHeadMLP, vector: np.ndarray) -> QueryFrame:
    return QueryFrame.from_slots(network.predict(vector))


def split_samples(samples: list, train_fraction: float = 0.8, seed: int = Pipeline.SEED) -> tuple[list, list]:
    if not 0.0 < train_fraction < 1.0:
        raise ClassifierError(f'train fraction must be strictly between 0 and 1, got {train_fraction}')
    order = np.random.default_rng(seed).permutation(len(samples))
    cut = int(round(len(samples) * train_fraction))
    train = [samples[i] for i in order[:cut]]
    test = [samples[i] for i in order[cut:]]
    if not train or not test:
        raise ClassifierError('split leaves an empty training or test set')
    return train, test


def score(network: MultiHeadMLP, samples: list[tuple[np.ndarray, QueryFrame]]) -> TrainingReport:
    hits = {head: 0 for head in HEADS}
    exact = 0
    for vector, frame in samples:
        predicted = network.predict(vector)
        expected = validate_labels(frame.slots())
        matched = [predicted[head] == expected[head] for head in HEADS]
        for head, ok in zip(HEADS, matched):
            hits[head] += ok
        exact += all(matched)
    total = len(samples)
    return TrainingReport(
        train_size=0,
        test_size=total,
        per_attribute={head: hits[head] / total for head in HEADS},
        exact_frame=exact / total,
    )


def save_model(model: TrainedModel, path: str | Path) -> Path:
    path = Path(path)
    document = {
        'format': MODEL_FORMAT,
        'version': MODEL_VERSION,
        'seed': model.seed,
        'categories': {head: list(values) for head, values in CATEGORIES.items()},
        'features': model.encoder.to_dict(),
        'network': model.network.to_dict(),
    }
    path.write_text(json.dumps(document, sort_keys=True, ensure_ascii=False), encoding='utf-8')
    return path


def load_model(path: str | Path) -> TrainedModel:
    try:
        document = json.loads(Path(path).read_text(encoding='utf-8'))
    except (OSError, json.JSONDecodeError) as e:
        raise ClassifierError(f'cannot read model "{path}": {e}')
    if document.get('format') != MODEL_FORMAT or document.get('version') != MODEL_VERSION:
        raise ClassifierError(f'"{path}" is not a {MODEL_FORMAT} v{MODEL_VERSION} model')
    if document.get('categories') != {head: list(values) for head, values in CATEGORIES.items()}:
        raise ClassifierError(f'"{path}" was trained with different categories')
    encoder = FeatureEncoder.from_dict(document['features'])
    network = MultiHeadMLP.from_dict(document['network'])
    if network.n_features != encoder.size:
        raise ClassifierError(f'"{path}" feature layout does not match its weights')
    return TrainedModel(encoder, network, int(document.get('seed', Pipeline.SEED)))

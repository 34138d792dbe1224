import numpy as np
import pytest

from geoqa.formulation import QueryFrame, load_frames, load_model, parse_frames, save_model, train_from_frames, train_qt2
from geoqa.formulation.classifier import StatisticalClassifier
from geoqa.formulation.features import FeatureEncoder
from geoqa.formulation.mlp import CATEGORIES, HEADS, split_samples, validate_labels
from geoqa.formulation.training import encode_questions
from geoqa.kb.terms import class_iri
from geoqa.modules.error import ClassifierError


@pytest.fixture(scope='session')
def frames(config):
    return load_frames(config.qt2_frames_path)


@pytest.fixture(scope='session')
def trained(frames, resources, config):
    return train_from_frames(frames, resources.lexicon, resources.superlatives, resources.analyzer, resources.kb,
                             train_fraction=0.8, seed=7, default_entity_name=config.default_entity)


def test_bundled_frames(frames):
    assert len(frames) >= 60
    assert {record.frame.object_property.local for record in frames} == {'konumlanir'}


def test_held_out_exact_frame_accuracy(trained, frames):
    _, report = trained
    assert report.train_size + report.test_size == len(frames)
    assert report.test_size == len(frames) - round(len(frames) * 0.8)
    assert report.exact_frame >= 0.70
    assert set(report.per_attribute) == set(HEADS)
    assert all(report.per_attribute[head] >= report.exact_frame for head in HEADS)


def test_training_is_deterministic(frames, resources):
    model, _ = train_from_frames(frames[:20], resources.lexicon, resources.superlatives, resources.analyzer,
                                 resources.kb, seed=3, default_entity_name='Turkiye', epochs=20)
    again, _ = train_from_frames(frames[:20], resources.lexicon, resources.superlatives, resources.analyzer,
                                 resources.kb, seed=3, default_entity_name='Turkiye', epochs=20)
    assert np.array_equal(model.network.w1, again.network.w1)
    for head in HEADS:
        assert np.array_equal(model.network.heads[head][0], again.network.heads[head][0])


def test_different_seeds_differ(frames, resources):
    encoder = FeatureEncoder.build(resources.lexicon, resources.superlatives, resources.kb.schema)
    samples = encode_questions(frames[:10], encoder, resources.analyzer, resources.kb, 'Turkiye')
    first = train_qt2(samples, seed=1, epochs=5)
    second = train_qt2(samples, seed=2, epochs=5)
    assert not np.array_equal(first.w1, second.w1)


def test_empty_training_set():
    with pytest.raises(ClassifierError):
        train_qt2([])


def test_split_samples():
    train, test = split_samples(list(range(10)), 0.8, seed=7)
    assert len(train) == 8
    assert sorted(train + test) == list(range(10))
    assert split_samples(list(range(10)), 0.8, seed=7) == (train, test)


@pytest.mark.parametrize('fraction', [0.0, 1.0, 1.5])
def test_split_fraction_bounds(fraction):
    with pytest.raises(ClassifierError):
        split_samples(list(range(10)), fraction)


def test_length_is_not_a_classifier_category():
    assert 'uzunluk' not in CATEGORIES['data_property']
    with pytest.raises(ClassifierError) as info:
        validate_labels({'data_property': 'uzunluk'})
    assert 'unknown data_property category "uzunluk"' in str(info.value)


def test_validate_labels_fills_nulls():
    assert validate_labels({'function_name': 'count'}) == {
        'target_class': 'null', 'entity_class': 'null', 'data_property': 'null',
        'object_property': 'null', 'function_name': 'count'}


@pytest.mark.parametrize('text, message', [
    ('not json', 'line 1:'),
    ('["question"]', 'expected an object'),
    ('{"question": "x", "target_class": "Kita"}', 'unknown target_class category "Kita"'),
])
def test_parse_frames_errors(text, message):
    with pytest.raises(ClassifierError) as info:
        parse_frames(text)
    assert message in str(info.value)


def test_parse_frames():
    [record] = parse_frames('{"question": "Türkiye\'de kaç göl vardır?", "target_class": "Gol", '
                            '"entity_class": "Ulke", "object_property": "konumlanir", "function_name": "count"}')
    assert record.frame.target_class == class_iri('Gol')
    assert record.frame.data_property is None
    assert record.frame.function_name == 'count'


def test_model_round_trips_through_json(trained, resources, tmp_path):
    model, _ = trained
    path = save_model(model, tmp_path / 'qt2.json')
    loaded = load_model(path)
    assert loaded.encoder == model.encoder
    sentence = resources.analyzer.analyze("Ege Bölgesi'nde kaç şehir vardır?", resources.kb)
    vector = model.encoder.encode(sentence, class_iri('Bolge'))
    assert loaded.predict(vector) == model.predict(vector)


def test_load_model_rejects_other_files(tmp_path):
    path = tmp_path / 'other.json'
    path.write_text('{"format": "something-else", "version": 1}', encoding='utf-8')
    with pytest.raises(ClassifierError):
        load_model(path)
    with pytest.raises(ClassifierError):
        load_model(tmp_path / 'missing.json')


def test_statistical_classifier_takes_filter_from_question(trained, resources):
    model, _ = trained
    classifier = StatisticalClassifier(model, 'Turkiye')
    frame = classifier.classify(resources.analyzer.analyze("Ege Bölgesi'nde kaç şehir vardır?", resources.kb),
                                resources.kb)
    assert isinstance(frame, QueryFrame)
    assert frame.named_entity_filter == 'Ege'
    assert validate_labels(frame.slots())

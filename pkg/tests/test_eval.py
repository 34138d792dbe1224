import pytest
from conftest import SENTENCE_1, SENTENCE_3

from geoqa.eval import (METHOD1, METHOD2, EvalReport, QuestionResult, Scores, compare_methods, f_measure, load_suite,
                        macro_average, parse_suite, render_table, run_method1, run_method2, set_scores)
from geoqa.modules.error import SuiteError

REGION_OF_IZMIR = 'İzmir şehri hangi bölgededir?'
ATLANTIS = "Atlantis'in nüfusu ne kadardır?"


@pytest.fixture(scope='session')
def method1(suite, pipeline):
    return run_method1(suite, pipeline)


@pytest.fixture(scope='session')
def method2(suite, baseline):
    return run_method2(suite, baseline)


# -- metrics


def test_set_scores():
    assert set_scores({'a', 'b'}, {'a', 'b'}) == Scores(1.0, 1.0, 1.0)
    partial = set_scores({'a', 'x', 'y', 'z'}, {'a', 'b'})
    assert partial.precision == 0.25
    assert partial.recall == 0.5
    assert partial.f == pytest.approx(1 / 3)
    assert set_scores(set(), {'a'}) == Scores(0.0, 0.0, 0.0)
    assert set_scores({'x'}, {'a'}).f == 0.0


def test_unanswerable_scoring():
    assert set_scores(set(), set()) == Scores(1.0, 1.0, 1.0)
    assert set_scores({'ins:Atlantis'}, set()) == Scores(0.0, 0.0, 0.0)


def test_macro_average_means_per_question_f():
    average = macro_average([Scores(1.0, 0.5, f_measure(1.0, 0.5)), Scores(0.5, 1.0, f_measure(0.5, 1.0))])
    assert average.precision == 0.75
    assert average.recall == 0.75
    assert average.f == pytest.approx(2 / 3)
    assert macro_average([]) == Scores(0.0, 0.0, 0.0)


# -- suite files


def test_bundled_suite(suite):
    questions = [record.question for record in suite]
    assert SENTENCE_1 in questions
    assert len(questions) == len(set(questions))
    assert all(record.gold or record.unanswerable for record in suite)
    assert {record.question for record in suite if record.unanswerable} == {ATLANTIS, 'Zürafalar nerede yaşar?'}


@pytest.mark.parametrize('text, message', [
    ('', 'no questions'),
    ('{"question": "x"', 'line 1:'),
    ('{"gold": ["a"]}', '"question" must be a non-empty string'),
    ('{"question": "x", "gold": "a"}', '"gold" must be a list of strings'),
    ('{"question": "x", "gold": []}', 'empty gold set'),
    ('{"question": "x", "gold": ["a"], "tags": "QT1"}', '"tags" must be a list'),
    ('{"question": "x", "gold": ["a"], "goldQuery": 3}', '"goldQuery" must be a string'),
])
def test_parse_suite_errors(text, message):
    with pytest.raises(SuiteError) as info:
        parse_suite(text)
    assert message in str(info.value)


def test_parse_suite_keeps_gold_query():
    [record] = parse_suite('{"question": " x ", "gold": ["5"], "goldQuery": "SELECT ?y WHERE { ?y ?p ?o }"}\n\n')
    assert record.question == 'x'
    assert record.gold == frozenset({'5'})
    assert record.gold_query.startswith('SELECT')


def test_missing_suite_file(tmp_path):
    with pytest.raises(SuiteError):
        load_suite(tmp_path / 'absent.jsonl')


# -- method comparison


def test_hybrid_method_beats_baseline(method1, method2):
    assert method1.aggregate.f > method2.aggregate.f
    assert method1.questions == method2.questions


def test_possessive_chain_separates_methods(method1, method2):
    assert method1.row(SENTENCE_3).scores.f == 1.0
    assert method2.row(SENTENCE_3).scores.f < 1.0
    assert method1.row(SENTENCE_1).scores.f == 1.0


def test_baseline_flags_ambiguous_links(method1, method2):
    row = method2.row(REGION_OF_IZMIR)
    assert row.ambiguous
    assert set(row.eligible) == {'ins:komsu', 'ins:konumlanir'}
    assert method1.row(REGION_OF_IZMIR).returned == frozenset({'ins:EgeBolgesi'})


def test_pipeline_errors_score_as_empty_answers(method1):
    row = method1.row(ATLANTIS)
    assert row.error is not None
    assert row.returned == frozenset()
    assert row.scores == Scores(1.0, 1.0, 1.0)


def test_render_table(method1, method2):
    table = render_table([method1, method2], 'suite.jsonl')
    assert 'Results of comparison on suite.jsonl' in table
    assert METHOD1 in table
    assert METHOD2 in table
    assert f'{method1.aggregate.f:.2f}' in table


def test_compare_methods_lists_disagreements(method1, method2):
    text = compare_methods(method1, method2)
    assert 'Questions where the methods disagree:' in text
    assert f'- {SENTENCE_3}' in text
    assert '[ambiguous: ins:komsu, ins:konumlanir]' in text


def test_compare_methods_needs_the_same_suite():
    first = EvalReport(METHOD1, [QuestionResult('a', frozenset(), frozenset({'x'}), Scores(0.0, 0.0, 0.0))])
    second = EvalReport(METHOD2, [QuestionResult('b', frozenset(), frozenset({'x'}), Scores(0.0, 0.0, 0.0))])
    with pytest.raises(SuiteError) as info:
        compare_methods(first, second)
    assert 'reports cover different suites' in str(info.value)


def test_report_serializes(method1):
    data = method1.to_dict()
    assert data['method'] == METHOD1
    assert len(data['questions']) == len(method1.rows)
    assert set(data['aggregate']) == {'precision', 'recall', 'f'}

import json

import pytest
from click.testing import CliRunner
from conftest import SENTENCE_1

from geoqa.cli.commands import cli, parse_split
from geoqa.cli.output import format_bindings
from geoqa.kb.terms import Literal, instance_iri
from geoqa.modules.error import ClassifierError
from geoqa.sparql import SolutionSet, Var


@pytest.fixture
def runner():
    return CliRunner()


def test_ask_prints_query_and_answers(runner):
    result = runner.invoke(cli, ['ask', SENTENCE_1])
    assert result.exit_code == 0, result.output
    assert 'SELECT ?y WHERE {' in result.output
    for city in ('ins:Konya', 'ins:Eskisehir', 'ins:Kirikkale', 'ins:Bolu', 'ins:Aksaray'):
        assert city in result.output


def test_ask_sparql_only(runner):
    result = runner.invoke(cli, ['ask', '--sparql-only', SENTENCE_1])
    assert result.exit_code == 0, result.output
    assert 'FILTER(regex(str(?x),"Ankara", "i"))' in result.output
    assert 'ins:Konya' not in result.output


def test_ask_trace(runner):
    result = runner.invoke(cli, ['ask', '--trace', SENTENCE_1])
    assert result.exit_code == 0, result.output
    assert '# analysis' in result.output
    assert 'Ankara+Noun+Prop+A3sg+Pnon+Nom' in result.output
    assert '# dependencies' in result.output


def test_ask_json(runner):
    result = runner.invoke(cli, ['--json', 'ask', SENTENCE_1])
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data['question_type'] == 'QT1'
    assert ['ins:Konya'] in data['bindings']


def test_empty_question_exits_with_stage(runner):
    result = runner.invoke(cli, ['ask', ''])
    assert result.exit_code == 2
    assert '[tokenize]' in result.output


def test_eval_hybrid_beats_baseline(runner):
    result = runner.invoke(cli, ['eval', '--assert-m1-beats-m2'])
    assert result.exit_code == 0, result.output
    assert 'Results of comparison on suite.jsonl' in result.output
    assert 'Questions where the methods disagree:' in result.output


def test_eval_assertion_needs_both_methods(runner):
    result = runner.invoke(cli, ['eval', '--method', '1', '--assert-m1-beats-m2'])
    assert result.exit_code == 2


def test_load_check(runner, tmp_path):
    target = tmp_path / 'geo.ttl'
    result = runner.invoke(cli, ['load-check', '--export', str(target)])
    assert result.exit_code == 0, result.output
    assert 'Individuals: 82' in result.output
    assert 'Turtle written to' in result.output
    assert target.read_text(encoding='utf-8')


def test_missing_config_file(runner, tmp_path):
    result = runner.invoke(cli, ['--config', str(tmp_path / 'absent.conf'), 'load-check'])
    assert result.exit_code == 2
    assert 'config file not found' in result.output


def test_train_rejects_bad_split(runner):
    result = runner.invoke(cli, ['train-qt2', '--split', '0.5/0.2'])
    assert result.exit_code == 2
    assert 'must add up to 1' in result.output


@pytest.mark.parametrize('text', ['0.8', 'a/b', '0.8/0.3'])
def test_parse_split_errors(text):
    with pytest.raises(ClassifierError):
        parse_split(text)


def test_parse_split():
    assert parse_split('0.7/0.3') == pytest.approx(0.7)


def test_repl_keeps_going_after_errors(runner):
    session = '\n'.join([':sparql', "Atlantis'in nüfusu ne kadardır?", SENTENCE_1, ':quit']) + '\n'
    result = runner.invoke(cli, ['repl'], input=session)
    assert result.exit_code == 0, result.output
    assert 'SPARQL display on' in result.output
    assert 'error [formulation]' in result.output
    assert 'ins:Konya' in result.output
    assert result.output.rstrip().endswith('Goodbye.')


def test_repl_ends_on_end_of_input(runner):
    result = runner.invoke(cli, ['repl'], input='')
    assert result.exit_code == 0
    assert 'Goodbye.' in result.output


def test_answer_rows_are_printed_in_term_order():
    y = Var('y')
    solutions = SolutionSet((y,), [{y: Literal(10, 'int')}, {y: instance_iri('Konya')},
                                   {y: Literal(9, 'int')}, {y: instance_iri('Bolu')}])
    lines = format_bindings(solutions).splitlines()
    assert lines[2:] == ['ins:Bolu', 'ins:Konya', '9', '10']

import dataclasses

import pytest
from conftest import CONLL_DIR, SENTENCE_1, SENTENCE_2, SENTENCE_3

from geoqa.kb.terms import instance_iri
from geoqa.modules.error import ConllError, GeoQAError, ParseError
from geoqa.nlp import (MorphAnalysis, NerLabel, Relation, Token, index_by_question, is_tree, is_well_formed,
                       parse_dependencies, question_hash, read_conllx, read_conllx_file, spans_from_labels, tokenize,
                       write_conllx)
from geoqa.nlp.conllx import format_row
from geoqa.nlp.lexicon import parse_lexicon

B, I, O = NerLabel.BEGIN, NerLabel.INSIDE, NerLabel.OUTSIDE


# -- tokenizer


def test_tokenize_detaches_trailing_punctuation():
    tokens = tokenize(SENTENCE_2)
    assert [token.surface for token in tokens] == ['Ege', "Bölgesi'nin", 'yüzölçümü', 'ne', 'kadardır', '?']
    assert [token.index for token in tokens] == [1, 2, 3, 4, 5, 6]


def test_tokenize_keeps_punctuation_order():
    assert [token.surface for token in tokenize('Nerede?!')] == ['Nerede', '?', '!']
    assert [token.surface for token in tokenize('?')] == ['?']


@pytest.mark.parametrize('question', ['', '   '])
def test_tokenize_rejects_empty_question(question):
    with pytest.raises(GeoQAError) as info:
        tokenize(question)
    assert info.value.stage == 'tokenize'


# -- morphology


@pytest.mark.parametrize('sentence, expected', [
    (SENTENCE_1, ['Ankara+Noun+Prop+A3sg+Pnon+Nom', 'il+Noun+A3sg+P3sg+Dat', 'komşu+Adj',
                  'ol+Verb+Pos^DB+Adj+PresPart', 'il+Noun+A3pl+Pnon+Acc', 'göster+Verb+Pos+Aor+A3sg',
                  'mi+Postp+Ques+Pres+A2sg', '?+Punc']),
    (SENTENCE_2, ['ege+Noun+A3sg+Pnon+Nom', 'bölge+Noun+A3sg+P3sg+Gen', 'yüzölçüm+Noun+A3sg+P3sg+Nom',
                  'ne+Pron+Ques+A3sg+Pnon+Nom',
                  'kadar+Postp+PCNom^DB+Noun+Zero+A3sg+Pnon+Nom^DB+Verb+Zero+Pres+A3sg+Cop', '?+Punc']),
    (SENTENCE_3, ['ege+Noun+A3sg+Pnon+Nom', 'bölge+Noun+A3sg+P3sg+Loc^DB+Adj+Rel', 'şehir+Noun+A3pl+Pnon+Gen',
                  'nüfus+Noun+A3pl+P3sg+Acc', 'göster+Verb+Pos+Aor+A3sg', 'mi+Postp+Ques+Pres+A2sg', '?+Punc']),
])
def test_morphology_of_reference_sentences(analyzer, sentence, expected):
    analyses = analyzer.morphology(tokenize(sentence))
    assert [str(analysis) for analysis in analyses] == expected


def test_unknown_word_with_apostrophe_is_a_proper_noun(analyzer):
    [analysis] = analyzer.morphology([Token("Atlantis'in", 1)])
    assert str(analysis) == 'Atlantis+Noun+Prop+A3sg+Pnon+Gen'
    assert analysis.is_proper
    assert analysis.key == 'atlantis'


def test_unknown_word_keeps_its_surface_as_lemma(analyzer):
    [analysis] = analyzer.morphology([Token('Zürafalar', 1)])
    assert analysis.lemma == 'Zürafalar'
    assert analysis.features == ('Prop', 'A3sg', 'Pnon', 'Nom')


def test_label_lemmas(analyzer):
    assert analyzer.label_lemmas('Ege Bölgesi') == ('ege', 'bölge')
    assert analyzer.label_lemmas('İzmir') == ('izmir',)


def test_feats_column_round_trips():
    feats = 'PCNom^DB|Noun|Zero|A3sg|Pnon|Nom^DB|Verb|Zero|Pres|A3sg|Cop'
    analysis = MorphAnalysis.from_conll('kadar', 'Postp', feats)
    assert analysis.feats == feats
    assert analysis.is_copular
    assert MorphAnalysis.from_conll('komşu', 'Adj', '_').feats == '_'


# -- dependencies


@pytest.mark.parametrize('position, sentence', enumerate([SENTENCE_1, SENTENCE_2, SENTENCE_3]))
def test_parser_reproduces_reference_trees(analyzer, reference_conll, position, sentence):
    tokens = tokenize(sentence)
    rows = parse_dependencies(tokens, analyzer.morphology(tokens))
    assert rows == read_conllx(reference_conll)[position]
    assert is_tree(rows)


def test_parse_without_predicate(analyzer):
    tokens = tokenize('Ege Bölgesi')
    with pytest.raises(ParseError):
        parse_dependencies(tokens, analyzer.morphology(tokens))


def test_is_tree_rejects_cycles_and_double_roots(reference_conll):
    rows = read_conllx(reference_conll)[1]
    assert is_tree(rows)
    cyclic = [dataclasses.replace(row, head=2) if row.id == 3 else row for row in rows]
    assert not is_tree(cyclic)
    rooted_twice = [dataclasses.replace(row, head=0) if row.id == 1 else row for row in rows]
    assert not is_tree(rooted_twice)


# -- entities


def test_tag_entities_multiword_label(analyzer, kb):
    sentence = analyzer.analyze(SENTENCE_2, kb)
    assert sentence.ner_labels == [B, I, O, O, O, O]
    [span] = sentence.entity_spans
    assert (span.start, span.end) == (1, 2)
    assert span.individual == instance_iri('EgeBolgesi')
    assert is_well_formed(sentence.ner_labels)


def test_tag_entities_single_word(analyzer, kb):
    sentence = analyzer.analyze(SENTENCE_1, kb)
    assert sentence.ner_labels == [B, O, O, O, O, O, O, O]
    assert [span.individual for span in sentence.entity_spans] == [instance_iri('Ankara')]


def test_unknown_place_has_no_span(analyzer, kb):
    sentence = analyzer.analyze("Atlantis'in nüfusu ne kadardır?", kb)
    assert sentence.entity_spans == []
    assert set(sentence.ner_labels) == {O}


def test_spans_from_labels(kb):
    spans = spans_from_labels([B, I, O, B], ['ege', 'bölge', 'ne', 'ankara'], kb)
    assert [(span.start, span.end) for span in spans] == [(1, 2), (4, 4)]
    assert [span.individual for span in spans] == [instance_iri('EgeBolgesi'), instance_iri('Ankara')]
    assert spans_from_labels([O, O], ['a', 'b']) == []


def test_is_well_formed():
    assert is_well_formed([B, I, O, B])
    assert not is_well_formed([O, I])
    assert not is_well_formed([I])


# -- CoNLL-X


def test_both_layouts_read_the_same_rows(reference_conll):
    shifted = read_conllx_file(CONLL_DIR / 'shifted.conll')
    assert shifted[0] == read_conllx(reference_conll)[0]
    assert shifted[0][6].relation == Relation.PREDICATE


def test_write_conllx_reproduces_reference(reference_conll):
    assert write_conllx(read_conllx(reference_conll)) == reference_conll


@pytest.mark.parametrize('text, message', [
    ('1\tEge\tege\tNoun\tNoun\t_\t0\tPREDICATE\t_', 'expected 10 columns'),
    ('1\tEge\tege\tNoun\tNoun\t_\t0\tPREDICATE\t_\t_\n3\t?\t?\tPunc\tPunc\t_\t1\tPUNCTUATION\t_\t_', '1..n'),
    ('1\tEge\tege\tNoun\tNoun\t_\t0\tPREDICATE\t_\t_\n2\t?\t?\tPunc\tPunc\t_\t0\tPREDICATE\t_\t_', 'exactly one'),
    ('1\tEge\tege\tNoun\tNoun\t_\t0\tSUBJECT\t_\t_', 'exactly one'),
    ('1\tEge\tege\tNoun\tNoun\t_\t0\tROOT\t_\t_', 'unknown relation'),
    ('1\tEge\tege\tNoun\tNoun\t_\tx\tPREDICATE\t_\t_', 'non-numeric head index'),
    ('1\tEge\tege\tNoun\tNoun\t_\t0\tPREDICATE\t_\t_\n2\t?\t?\tPunc\tPunc\t_\t5\tPUNCTUATION\t_\t_', 'invalid head'),
])
def test_conllx_errors(text, message):
    with pytest.raises(ConllError) as info:
        read_conllx(text)
    assert message in str(info.value)
    assert info.value.row is not None


def test_conllx_error_reports_line_number():
    text = '# comment\n1\tEge\tege\tNoun\tNoun\t_\t0\tPREDICATE\t_\t_\n2\tx\tx\tNoun\tNoun\t_\t1\tSUBJECT\t_'
    with pytest.raises(ConllError) as info:
        read_conllx(text)
    assert info.value.row == 3


def test_format_row(reference_conll):
    first = read_conllx(reference_conll)[0][0]
    assert format_row(first) == '1\tAnkara\tAnkara\tNoun\tNoun\tProp|A3sg|Pnon|Nom\t2\tPOSSESSOR\t_\t_'


# -- gold analyses


@pytest.mark.parametrize('sentence', [SENTENCE_1, SENTENCE_2, SENTENCE_3])
def test_gold_analysis_matches_builtin_pipeline(analyzer, kb, reference_conll, sentence):
    gold = analyzer.from_gold(sentence, reference_conll, kb)
    built = analyzer.analyze(sentence, kb)
    assert gold.analyses == built.analyses
    assert gold.dep_rows == built.dep_rows
    assert gold.entity_spans == built.entity_spans


def test_from_gold_needs_a_matching_sentence(analyzer, kb, reference_conll):
    with pytest.raises(ConllError):
        analyzer.from_gold('Türkiye nerededir?', reference_conll, kb)


def test_gold_lookup_is_keyed_by_question_hash(analyzer, kb, reference_conll):
    gold = read_conllx(reference_conll)
    index = index_by_question(gold)
    assert index[question_hash([row.form for row in gold[1]])] == gold[1]
    # spacing before the question mark does not change the key
    attached = analyzer.from_gold(SENTENCE_1.replace(' ?', '?'), reference_conll, kb)
    assert attached.dep_rows == gold[0]


# -- POS lexicon


@pytest.mark.parametrize('text, message', [
    ('derin', 'line 1: expected lemma<TAB>POS'),
    ('# header\nderin\tAdjective', 'line 2: unknown part of speech "Adjective"'),
])
def test_lexicon_errors(text, message):
    with pytest.raises(GeoQAError) as info:
        parse_lexicon(text)
    assert info.value.stage == 'lexicon'
    assert message in str(info.value)


def test_lexicon_stem_variants():
    lexicon = parse_lexicon('şehir\tNoun\tşehr\nkomşu\tAdj')
    assert [entry.lemma for entry in lexicon.stems('şehr')] == ['şehir']
    assert lexicon.pos_of('Komşu') == ['Adj']


def test_bundled_lexicon(resources):
    lexicon = resources.lexicon
    assert len(lexicon) >= 500
    assert lexicon.pos_of('ege') == ['Noun']
    assert 'izmir' not in lexicon
    assert 'ankara' not in lexicon


# -- bundled suite


def test_suite_questions_are_well_formed(analyzer, kb, suite):
    for record in suite:
        sentence = analyzer.analyze(record.question, kb)
        assert is_well_formed(sentence.ner_labels), record.question
        assert is_tree(sentence.dep_rows), record.question


def test_analysis_is_deterministic(analyzer, kb, suite):
    for record in suite:
        first = analyzer.analyze(record.question, kb)
        second = analyzer.analyze(record.question, kb)
        assert first.analyses == second.analyses
        assert first.ner_labels == second.ner_labels
        assert first.dep_rows == second.dep_rows
        assert first.entity_spans == second.entity_spans

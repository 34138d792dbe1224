from geoqa.nlp.analyzer import Analyzer
from geoqa.nlp.conllx import index_by_question, question_hash, read_conllx, read_conllx_file, write_conllx
from geoqa.nlp.dependency import is_tree, parse_dependencies
from geoqa.nlp.lexicon import PosLexicon, load_lexicon, parse_lexicon
from geoqa.nlp.morphology import analyze_morphology, disambiguate
from geoqa.nlp.ner import is_well_formed, spans_from_labels, tag_entities
from geoqa.nlp.sentence import (AnnotatedSentence, DepRow, EntitySpan, MorphAnalysis, NerLabel, Relation,
                                Token)
from geoqa.nlp.tokenizer import tokenize

from pathlib import Path

import pytest

from geoqa.config import DEFAULT_PREFIXES, Paths, load_config
from geoqa.eval.baseline import OntologyBaseline
from geoqa.eval.suite import load_suite
from geoqa.kb.closure import apply_closure
from geoqa.kb.loader import build_knowledge_base, load_schema
from geoqa.resources import load_resources

CONLL_DIR = Paths.DATA_DIR / 'conll'

SENTENCE_1 = 'Ankara iline komşu olan illeri gösterir misin ?'
SENTENCE_2 = "Ege Bölgesi'nin yüzölçümü ne kadardır?"
SENTENCE_3 = "Ege Bölgesi'ndeki şehirlerin nüfuslarını gösterir misin ?"

SMALL_SCHEMA = """
class Sehir Şehir
class Ilce İlçe
class Bolge Bölge
subclass Ilce Sehir
objprop komsu domain Sehir->Sehir symmetric
objprop konumlanir domain Sehir->Bolge,Ilce->Sehir inverse konumVar
objprop konumVar domain Bolge->Sehir inverse konumlanir
dataprop populasyon domains Sehir,Ilce,Bolge range int
dataprop yuzolcumu domains Sehir,Bolge range decimal
alias il Class Sehir
"""

SMALL_INSTANCES = """
individual\tIzmir\tSehir\tİzmir
individual\tManisa\tSehir\tManisa
individual\tKonak\tIlce\tKonak
individual\tEgeBolgesi\tBolge\tEge Bölgesi
assert\tIzmir\tkomsu\tManisa
assert\tIzmir\tkonumlanir\tEgeBolgesi
assert\tManisa\tkonumlanir\tEgeBolgesi
assert\tKonak\tkonumlanir\tIzmir
assert\tIzmir\tpopulasyon\t4462056
assert\tManisa\tpopulasyon\t1468279
assert\tEgeBolgesi\tyuzolcumu\t79000.0
"""


@pytest.fixture(scope='session')
def config():
    return load_config(Paths.DEFAULT_CONFIG)


@pytest.fixture(scope='session')
def resources(config):
    return load_resources(config)


@pytest.fixture(scope='session')
def kb(resources):
    return resources.kb


@pytest.fixture(scope='session')
def analyzer(resources):
    return resources.analyzer


@pytest.fixture(scope='session')
def pipeline(resources):
    return resources.pipeline(statistical=False)


@pytest.fixture(scope='session')
def suite(config):
    return load_suite(config.suite_path)


@pytest.fixture(scope='session')
def baseline(resources):
    return OntologyBaseline(resources.kb, resources.analyzer, resources.superlatives,
                            resources.config.default_entity)


@pytest.fixture
def small_schema():
    return load_schema(SMALL_SCHEMA)


@pytest.fixture
def small_kb(small_schema):
    return build_knowledge_base(small_schema, [SMALL_INSTANCES], DEFAULT_PREFIXES)


@pytest.fixture
def small_closed_kb(small_kb):
    return apply_closure(small_kb)


@pytest.fixture(scope='session')
def reference_conll() -> str:
    return Path(CONLL_DIR / 'reference.conll').read_text(encoding='utf-8')

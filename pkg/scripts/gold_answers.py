"""
Recompute the bundled suite's gold answers straight from instances.tsv

Each question has a recipe over the raw assertions: plain scans with komsu made symmetric and
konumVar read as the inverse of konumlanir. No query engine is involved, so the output is an
independent check on the evaluator.

    python scripts/gold_answers.py            # print the suite with regenerated gold
    python scripts/gold_answers.py --check    # exit 1 when the committed gold differs
"""

import json
import logging
from collections import defaultdict
from decimal import Decimal
from pathlib import Path

import click

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / 'geoqa' / 'data'


class Facts:
    def __init__(self, path: Path):
        self.cls: dict[str, str] = {}
        self.values: dict[tuple[str, str], str] = {}
        self.links: dict[str, set[tuple[str, str]]] = defaultdict(set)
        for line in path.read_text(encoding='utf-8').splitlines():
            if not line.strip() or line.startswith('#'):
                continue
            kind, *rest = line.split('\t')
            if kind == 'individual':
                self.cls[rest[0]] = rest[1]
            elif rest[1] in ('komsu', 'konumlanir'):
                self.links[rest[1]].add((rest[0], rest[2]))
            else:
                self.values[(rest[0], rest[1])] = rest[2]

    def of(self, cls: str) -> list[str]:
        return [name for name, c in self.cls.items() if c == cls]

    def neighbours(self, name: str) -> list[str]:
        pairs = self.links['komsu']
        return [b for a, b in pairs if a == name] + [a for a, b in pairs if b == name]

    def inside(self, cls: str, place: str) -> list[str]:
        return [name for name in self.of(cls) if (name, place) in self.links['konumlanir']]

    def containers(self, name: str, cls: str) -> list[str]:
        return [b for a, b in self.links['konumlanir'] if a == name and self.cls.get(b) == cls]

    def value(self, name: str, prop: str) -> str:
        return self.values[(name, prop)]

    def column(self, cls: str, place: str, prop: str) -> list[str]:
        return [self.value(name, prop) for name in self.inside(cls, place) if (name, prop) in self.values]

    def extreme(self, cls: str, place: str, prop: str, fn) -> list[str]:
        best = fn(Decimal(v) for v in self.column(cls, place, prop))
        return [name for name in self.of(cls) if (name, prop) in self.values
                and Decimal(self.value(name, prop)) == best]

    def total(self, cls: str, place: str, prop: str) -> str:
        return str(sum((Decimal(v) for v in self.column(cls, place, prop)), Decimal(0)))


def ins(names: list[str]) -> list[str]:
    return [f'ins:{name}' for name in names]


RECIPES = {
    "Ankara iline komşu olan illeri gösterir misin ?": lambda f: ins(f.neighbours('Ankara')),
    "Ege Bölgesi'nin yüzölçümü ne kadardır?": lambda f: [f.value('EgeBolgesi', 'yuzolcumu')],
    "Ege Bölgesi'ndeki şehirlerin nüfuslarını gösterir misin ?":
        lambda f: f.column('Sehir', 'EgeBolgesi', 'populasyon'),
    "İzmir iline komşu olan illeri gösterir misin ?": lambda f: ins(f.neighbours('Izmir')),
    "Manisa iline komşu olan illeri gösterir misin ?": lambda f: ins(f.neighbours('Manisa')),
    "Konya iline komşu olan illeri gösterir misin ?": lambda f: ins(f.neighbours('Konya')),
    "Rize iline komşu olan illeri gösterir misin ?": lambda f: ins(f.neighbours('Rize')),
    "Akdeniz Bölgesi'ndeki dağları gösterir misin ?": lambda f: ins(f.inside('Dag', 'AkdenizBolgesi')),
    "Ege Bölgesi'ndeki nehirleri gösterir misin ?": lambda f: ins(f.inside('Nehir', 'EgeBolgesi')),
    "Ege Bölgesi'ndeki şehirleri listele .": lambda f: ins(f.inside('Sehir', 'EgeBolgesi')),
    "İzmir'deki dağları gösterir misin ?": lambda f: ins(f.inside('Dag', 'Izmir')),
    "İzmir'deki ilçeleri gösterir misin ?": lambda f: ins(f.inside('Ilce', 'Izmir')),
    "Ankara'daki ilçeleri gösterir misin ?": lambda f: ins(f.inside('Ilce', 'Ankara')),
    "Türkiye'deki gölleri gösterir misin ?": lambda f: ins(f.inside('Gol', 'Turkiye')),
    "Türkiye'nin nüfusu ne kadardır?": lambda f: [f.value('Turkiye', 'populasyon')],
    "İzmir'in nüfusu ne kadardır?": lambda f: [f.value('Izmir', 'populasyon')],
    "Van Gölü'nün derinliği ne kadardır?": lambda f: [f.value('VanGolu', 'derinlik')],
    "Türkiye'nin başkenti nedir?": lambda f: [f.value('Turkiye', 'baskent')],
    "Ankara'nın yüzölçümü ne kadardır?": lambda f: [f.value('Ankara', 'yuzolcumu')],
    "Rize'nin yağışı ne kadardır?": lambda f: [f.value('Rize', 'ortYagis')],
    "Ağrı Dağı'nın yüksekliği ne kadardır?": lambda f: [f.value('AgriDagi', 'yukseklik')],
    "İstanbul Boğazı'nın uzunluğu ne kadardır?": lambda f: [f.value('IstanbulBogazi', 'uzunluk')],
    "Marmara Bölgesi'ndeki şehirlerin nüfuslarını gösterir misin ?":
        lambda f: f.column('Sehir', 'MarmaraBolgesi', 'populasyon'),
    "Akdeniz Bölgesi'ndeki şehirlerin yüzölçümlerini gösterir misin ?":
        lambda f: f.column('Sehir', 'AkdenizBolgesi', 'yuzolcumu'),
    "İzmir şehri hangi bölgededir?": lambda f: ins(f.containers('Izmir', 'Bolge')),
    "Konya şehri hangi bölgededir?": lambda f: ins(f.containers('Konya', 'Bolge')),
    "Rize şehri hangi bölgededir?": lambda f: ins(f.containers('Rize', 'Bolge')),
    "Türkiye'nin en derin denizi hangisidir?": lambda f: ins(f.extreme('Deniz', 'Turkiye', 'derinlik', max)),
    "Türkiye'nin en sığ denizi hangisidir?": lambda f: ins(f.extreme('Deniz', 'Turkiye', 'derinlik', min)),
    "Türkiye'nin en tuzlu denizi hangisidir?": lambda f: ins(f.extreme('Deniz', 'Turkiye', 'tuzluluk', max)),
    "Türkiye'nin en yüksek dağı hangisidir?": lambda f: ins(f.extreme('Dag', 'Turkiye', 'yukseklik', max)),
    "Türkiye'nin en alçak dağı hangisidir?": lambda f: ins(f.extreme('Dag', 'Turkiye', 'yukseklik', min)),
    "Türkiye'nin en uzun nehri hangisidir?": lambda f: ins(f.extreme('Nehir', 'Turkiye', 'uzunluk', max)),
    "Türkiye'nin en büyük gölü hangisidir?": lambda f: ins(f.extreme('Gol', 'Turkiye', 'yuzolcumu', max)),
    "Türkiye'nin en derin gölü hangisidir?": lambda f: ins(f.extreme('Gol', 'Turkiye', 'derinlik', max)),
    "Türkiye'nin en kalabalık şehri hangisidir?": lambda f: ins(f.extreme('Sehir', 'Turkiye', 'populasyon', max)),
    "Türkiye'nin en küçük şehri hangisidir?": lambda f: ins(f.extreme('Sehir', 'Turkiye', 'yuzolcumu', min)),
    "Türkiye'nin en yağışlı şehri hangisidir?": lambda f: ins(f.extreme('Sehir', 'Turkiye', 'ortYagis', max)),
    "Türkiye'nin en az yağış alan şehri hangisidir?": lambda f: ins(f.extreme('Sehir', 'Turkiye', 'ortYagis', min)),
    "Ege Bölgesi'nin en kalabalık şehri hangisidir?":
        lambda f: ins(f.extreme('Sehir', 'EgeBolgesi', 'populasyon', max)),
    "İzmir'in en yüksek dağı hangisidir?": lambda f: ins(f.extreme('Dag', 'Izmir', 'yukseklik', max)),
    "Ege Bölgesi'nde kaç şehir vardır?": lambda f: [str(len(f.inside('Sehir', 'EgeBolgesi')))],
    "Marmara Bölgesi'nde kaç şehir vardır?": lambda f: [str(len(f.inside('Sehir', 'MarmaraBolgesi')))],
    "Türkiye'de kaç şehir vardır?": lambda f: [str(len(f.inside('Sehir', 'Turkiye')))],
    "Türkiye'de kaç göl vardır?": lambda f: [str(len(f.inside('Gol', 'Turkiye')))],
    "Ege Bölgesi'nde kaç dağ vardır?": lambda f: [str(len(f.inside('Dag', 'EgeBolgesi')))],
    "Ege Bölgesi'ndeki şehirlerin toplam nüfusu ne kadardır?":
        lambda f: [f.total('Sehir', 'EgeBolgesi', 'populasyon')],
    "Türkiye'deki göllerin toplam yüzölçümü ne kadardır?": lambda f: [f.total('Gol', 'Turkiye', 'yuzolcumu')],
    "Türkiye'deki şehirleri listele .": lambda f: ins(f.inside('Sehir', 'Turkiye')),
    "Ege Bölgesi'ndeki nehirlerin uzunluklarını gösterir misin ?":
        lambda f: f.column('Nehir', 'EgeBolgesi', 'uzunluk'),
    "Türkiye'de en fazla yağış alan il hangisidir?": lambda f: ins(f.extreme('Sehir', 'Turkiye', 'ortYagis', max)),
    "Atlantis'in nüfusu ne kadardır?": lambda f: [],
    "Zürafalar nerede yaşar?": lambda f: [],
}


@click.command()
@click.option('--instances', type=click.Path(exists=True, dir_okay=False), default=str(DATA_DIR / 'instances.tsv'))
@click.option('--suite', type=click.Path(exists=True, dir_okay=False), default=str(DATA_DIR / 'suite.jsonl'))
@click.option('--check', is_flag=True, help='Compare against the committed gold instead of printing.')
def main(instances: str, suite: str, check: bool):
    facts = Facts(Path(instances))
    records = [json.loads(line) for line in Path(suite).read_text(encoding='utf-8').splitlines() if line.strip()]
    mismatches = 0
    for record in records:
        recipe = RECIPES.get(record['question'])
        if recipe is None:
            logger.warning(f'No recipe for "{record["question"]}", gold left as is')
            continue
        gold = recipe(facts)
        if check and set(gold) != set(record['gold']):
            mismatches += 1
            click.echo(f'{record["question"]}\n  committed: {sorted(record["gold"])}\n  computed:  {sorted(gold)}')
        record['gold'] = gold

    if check:
        logger.info(f'{len(records) - mismatches}/{len(records)} questions agree')
        raise SystemExit(1 if mismatches else 0)
    for record in records:
        click.echo(json.dumps(record, ensure_ascii=False))


if __name__ == '__main__':
    main()

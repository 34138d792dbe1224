"""
Command-line entry point

Exit codes: 0 success, 1 failed assertion, 2 input or pipeline error.
"""

import json
import logging
from dataclasses import dataclass, replace
from functools import wraps
from pathlib import Path

import click

from geoqa.cli.output import format_answer
from geoqa.cli.repl import start_repl
from geoqa.config import Config, load_config
from geoqa.eval.baseline import OntologyBaseline
from geoqa.eval.report import compare_methods, render_table
from geoqa.eval.runner import run_method1, run_method2
from geoqa.eval.suite import load_suite
from geoqa.formulation.mlp import HEADS, save_model
from geoqa.formulation.training import load_frames, train_from_frames
from geoqa.kb.export import export_turtle
from geoqa.modules.error import ClassifierError, ConfigError, GeoQAError
from geoqa.modules.static import ErrorLine, LoadCheckText, TrainReportText
from geoqa.resources import Resources, load_resources

logger = logging.getLogger('geoqa.cli')

EXIT_ASSERTION = 1


@dataclass
class CliState:
    config_path: str | None = None
    as_json: bool = False
    seed: int | None = None
    _resources: Resources | None = None

    def config(self) -> Config:
        config = load_config(self.config_path)
        return replace(config, seed=self.seed) if self.seed is not None else config

    def resources(self) -> Resources:
        if self._resources is None:
            self._resources = load_resources(self.config())
        return self._resources


def pipeline_errors(func):
    """Report GeoQAError as a stage-tagged line on stderr and exit with its code."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except GeoQAError as e:
            logger.debug(f'Command failed: {e}')
            click.echo(ErrorLine % {'message': e}, err=True)
            raise SystemExit(e.exit_code)

    return wrapper


def emit_json(data):
    click.echo(json.dumps(data, ensure_ascii=False, indent=2))


@click.group()
@click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
              help='Run configuration (defaults to $GEOQA_CONFIG or the bundled geoqa.conf).')
@click.option('--json', 'as_json', is_flag=True, help='Emit machine-readable JSON.')
@click.option('--seed', type=int, default=None, help='Override the configured seed.')
@click.pass_context
def cli(ctx: click.Context, config_path: str | None, as_json: bool, seed: int | None):
    """Turkish geography question answering over the GEO-TR knowledge base."""
    ctx.obj = CliState(config_path, as_json, seed)


@cli.command()
@click.argument('question')
@click.option('--sparql-only', is_flag=True, help='Print the query without evaluating it.')
@click.option('--trace', is_flag=True, help='Print tokens, morphology, entity tags, dependencies and the frame.')
@click.option('--gold-conll', type=click.Path(exists=True, dir_okay=False), default=None,
              help='CoNLL-X file whose matching sentence replaces the built-in analysis.')
@click.pass_obj
@pipeline_errors
def ask(state: CliState, question: str, sparql_only: bool, trace: bool, gold_conll: str | None):
    """Answer one question."""
    resources = state.resources()
    gold_text = Path(gold_conll).read_text(encoding='utf-8') if gold_conll else None
    answer = resources.pipeline(gold_text).answer(question, run_query=not sparql_only)
    if state.as_json:
        emit_json(answer.to_dict())
    elif sparql_only and not trace:
        click.echo(answer.query_text.rstrip('\n'))
    else:
        click.echo(format_answer(answer, show_sparql=True, show_trace=trace))


@cli.command()
@click.pass_obj
@pipeline_errors
def repl(state: CliState):
    """Interactive session, one question per line."""
    start_repl(state.resources().pipeline())


@cli.command(name='eval')
@click.argument('suite_path', required=False, type=click.Path(dir_okay=False))
@click.option('--method', type=click.Choice(['1', '2', 'both']), default='both', show_default=True)
@click.option('--assert-m1-beats-m2', is_flag=True, help='Exit 1 unless Method 1 has the higher F-measure.')
@click.pass_obj
@pipeline_errors
def evaluate_suite(state: CliState, suite_path: str | None, method: str, assert_m1_beats_m2: bool):
    """Run a question suite through both methods and print the comparison."""
    if assert_m1_beats_m2 and method != 'both':
        raise click.UsageError('--assert-m1-beats-m2 needs both methods')
    resources = state.resources()
    path = Path(suite_path) if suite_path else resources.config.suite_path
    if path is None:
        raise ConfigError('no suite given and none configured')
    suite = load_suite(path)

    reports = []
    if method in ('1', 'both'):
        reports.append(run_method1(suite, resources.pipeline()))
    if method in ('2', 'both'):
        baseline = OntologyBaseline(resources.kb, resources.analyzer, resources.superlatives,
                                    resources.config.default_entity)
        reports.append(run_method2(suite, baseline))

    if state.as_json:
        emit_json({'suite': str(path), 'reports': [report.to_dict() for report in reports]})
    elif len(reports) == 2:
        click.echo(compare_methods(reports[0], reports[1], path.name), nl=False)
    else:
        click.echo(render_table(reports, path.name), nl=False)

    if assert_m1_beats_m2 and not reports[0].aggregate.f > reports[1].aggregate.f:
        click.echo(f'Method 1 F-measure {reports[0].aggregate.f:.2f} does not exceed '
                   f'Method 2 F-measure {reports[1].aggregate.f:.2f}', err=True)
        raise SystemExit(EXIT_ASSERTION)


def parse_split(text: str) -> float:
    try:
        train, test = (float(part) for part in text.split('/'))
    except ValueError:
        raise ClassifierError(f'split must look like 0.8/0.2, got "{text}"')
    if abs(train + test - 1.0) > 1e-9:
        raise ClassifierError(f'split parts must add up to 1, got "{text}"')
    return train


@cli.command(name='train-qt2')
@click.argument('frames_path', required=False, type=click.Path(dir_okay=False))
@click.option('--split', 'split_text', default='0.8/0.2', show_default=True, help='Train/test proportions.')
@click.option('--output', type=click.Path(dir_okay=False), default=None,
              help='Model file (defaults to the configured qt2_model, else qt2_model.json).')
@click.pass_obj
@pipeline_errors
def train_qt2_command(state: CliState, frames_path: str | None, split_text: str, output: str | None):
    """Train the QT2 frame classifier and report held-out accuracy."""
    train_fraction = parse_split(split_text)
    resources = state.resources()
    config = resources.config
    path = Path(frames_path) if frames_path else config.qt2_frames_path
    if path is None:
        raise ConfigError('no labeled frame file given and none configured')

    model, report = train_from_frames(
        load_frames(path), resources.lexicon, resources.superlatives, resources.analyzer, resources.kb,
        train_fraction, config.seed, config.default_entity,
    )
    target = Path(output) if output else (config.qt2_model_path or Path('qt2_model.json'))
    save_model(model, target)

    if state.as_json:
        emit_json({
            'model': str(target),
            'seed': config.seed,
            'train_size': report.train_size,
            'test_size': report.test_size,
            'per_attribute': report.per_attribute,
            'exact_frame': report.exact_frame,
        })
        return
    click.echo(TrainReportText.strip('\n') % {'train': report.train_size, 'test': report.test_size, 'seed': config.seed})
    for head in HEADS:
        click.echo(f'  {head:<16}{report.per_attribute[head]:.2f}')
    click.echo(f'  {"exact frame":<16}{report.exact_frame:.2f}')
    click.echo(f'Model written to {target}')


@cli.command(name='load-check')
@click.option('--export', 'export_path', type=click.Path(dir_okay=False), default=None,
              help='Also write the closed knowledge base as Turtle.')
@click.pass_obj
@pipeline_errors
def load_check(state: CliState, export_path: str | None):
    """Load the knowledge base and print closure statistics."""
    kb = state.resources().kb
    stats = {
        'classes': len(kb.schema.classes),
        'object_properties': len(kb.schema.object_properties),
        'data_properties': len(kb.schema.data_properties),
        'individuals': len(kb.labels),
        'asserted': kb.asserted_count,
        'closed': len(kb.store),
        'entailed': len(kb.store) - kb.asserted_count,
        'lexicon': len(kb.lexicon),
        'gazetteer': len(kb.gazetteer),
    }
    if export_path:
        stats['exported_triples'] = export_turtle(kb, export_path)
    if state.as_json:
        emit_json(stats)
        return
    click.echo(LoadCheckText.strip('\n') % stats)
    if export_path:
        click.echo(f'Turtle written to {export_path} ({stats["exported_triples"]} triples)')

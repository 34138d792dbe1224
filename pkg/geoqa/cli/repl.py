import logging

import click

from geoqa.cli.output import format_answer
from geoqa.formulation.pipeline import QAPipeline
from geoqa.modules.error import GeoQAError
from geoqa.modules.static import ErrorLine, ReplBanner, ReplGoodbye, ReplPrompt, ToggleText

logger = logging.getLogger('geoqa.cli')

QUIT_COMMANDS = (':quit', ':q', ':exit')


def start_repl(pipeline: QAPipeline, show_sparql: bool = False, show_trace: bool = False):
    """Read one question per line until `:quit` or end of input; errors are printed and the loop goes on."""
    click.echo(ReplBanner.strip('\n'))
    while True:
        try:
            line = input(ReplPrompt).strip()
        except (EOFError, KeyboardInterrupt):
            click.echo()
            break
        if not line:
            continue
        if line in QUIT_COMMANDS:
            break
        if line == ':sparql':
            show_sparql = not show_sparql
            click.echo(ToggleText % {'name': 'SPARQL', 'state': 'on' if show_sparql else 'off'})
            continue
        if line == ':trace':
            show_trace = not show_trace
            click.echo(ToggleText % {'name': 'Trace', 'state': 'on' if show_trace else 'off'})
            continue
        try:
            answer = pipeline.answer(line)
        except GeoQAError as e:
            logger.debug(f'REPL question failed: {e}')
            click.echo(ErrorLine % {'message': e})
            continue
        click.echo(format_answer(answer, show_sparql, show_trace))
    click.echo(ReplGoodbye)

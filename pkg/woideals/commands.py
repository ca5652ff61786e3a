"""
Shared click plumbing for the command modules: graph input options, JSON
output, error reporting and the fixture seeding command.
"""
import functools
import json
import logging
from typing import Any, Callable, Dict, List, Optional

import click

from woideals.errors import ParseError, WoIdealsError
from woideals.limits import DEFAULT_LIMITS, Limits
from woideals.models.graph import WeightedOrientedGraph
from woideals.seeders import FIXTURES, get_fixture, seed_fixtures
from woideals.services.families import FAMILIES, make_family

log = logging.getLogger(__name__)


def parse_int_list(text: Optional[str], what: str) -> Optional[List[int]]:
    """Parse '1,2,1' into [1, 2, 1]."""
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ParseError(f"{what} must be a comma-separated list of integers, got {text!r}") from None


def emit(data: Any) -> None:
    """Write a report as indented JSON on stdout."""
    click.echo(json.dumps(data, indent=2))


def current_limits() -> Limits:
    ctx = click.get_current_context(silent=True)
    if ctx is None or not ctx.obj:
        return DEFAULT_LIMITS
    return ctx.obj['limits']


def current_config() -> Dict:
    ctx = click.get_current_context(silent=True)
    return ctx.obj['config'] if ctx is not None and ctx.obj else {}


def reports_errors(f: Callable) -> Callable:
    """
    Answer WoIdealsError with an {'error', 'type'} JSON payload and the error's exit code.
    """
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except WoIdealsError as e:
            log.error("%s: %s", type(e).__name__, e)
            emit(e.to_dict())
            click.get_current_context().exit(e.exit_code)
    return wrapper


def resolve_graph(graph_file: Optional[str], fixture: Optional[str], family: Optional[str],
                  n: Optional[int], m: Optional[int], parts: Optional[str],
                  weights: Optional[str], orient: Optional[str]) -> WeightedOrientedGraph:
    """
    Build the input graph from exactly one of a JSON file, a fixture name or a family.

    Returns:
        WeightedOrientedGraph: The graph.
    """
    given = [source for source in (graph_file, fixture, family) if source is not None]
    if len(given) != 1:
        raise ParseError("Give exactly one graph source: a GRAPH file, --fixture or --family")
    if graph_file is not None:
        return WeightedOrientedGraph.load(graph_file)
    if fixture is not None:
        return get_fixture(fixture)
    return make_family(
        family, n=n, m=m,
        parts=parse_int_list(parts, '--parts'),
        weights=parse_int_list(weights, '--weights'),
        orientation=orient
    )


_GRAPH_OPTIONS = [
    click.argument('graph_file', required=False, type=click.Path(dir_okay=False)),
    click.option('--fixture', type=click.Choice(sorted(FIXTURES)), help='Use a named fixture graph.'),
    click.option('--family', type=click.Choice(FAMILIES), help='Build a family graph.'),
    click.option('--n', 'n', type=int, help='Family size parameter.'),
    click.option('--m', 'm', type=int, help='Second clique-sum parameter.'),
    click.option('--parts', help='Multipartite part sizes, e.g. 2,1,1.'),
    click.option('--weights', help='Comma-separated vertex weights in family vertex order.'),
    click.option('--orient', default='natural', show_default=True,
                 help='natural, seeded:<int> or explicit:<+/- per edge>.'),
]


def graph_input(f: Callable) -> Callable:
    """
    Add the graph source options to a command and pass the built graph as `graph`.
    """
    @functools.wraps(f)
    def wrapper(*args, graph_file=None, fixture=None, family=None, n=None, m=None,
                parts=None, weights=None, orient='natural', **kwargs):
        graph = resolve_graph(graph_file, fixture, family, n, m, parts, weights, orient)
        return f(*args, graph=graph, **kwargs)

    for option in reversed(_GRAPH_OPTIONS):
        wrapper = option(wrapper)
    return wrapper


@click.command('seed-fixtures')
@click.argument('directory', default='fixtures', type=click.Path(file_okay=False))
def seed_fixtures_command(directory: str) -> None:
    """Write every named fixture graph as JSON into DIRECTORY."""
    for path in seed_fixtures(directory):
        click.echo(path, err=True)
    emit({'written': sorted(FIXTURES)})

"""
Verification command: theorem sweeps over graph families, or one theorem on one graph.
"""
from typing import List, Optional, Tuple

import click

from woideals.commands import (current_config, current_limits, emit, parse_int_list, reports_errors,
                               resolve_graph)
from woideals.errors import ParseError
from woideals.models.report import SweepSpec
from woideals.seeders import FIXTURES
from woideals.services.sweep import DEFAULT_SIZES, SWEEP_FAMILIES, run_sweep
from woideals.services.theorems import TAGS, theorem_predicate

_MIN_SIZE = {
    'odd-cycle': 3,
    'natural-cycle': 3,
    'even-cycle': 4,
    'star': 2,
    'path': 3,
    'oracle': 2,
}


def _sizes(family: str, sizes: Optional[str], n_min: Optional[int], n_max: Optional[int]) -> Tuple[int, ...]:
    if sizes is not None:
        return tuple(parse_int_list(sizes, '--sizes'))
    if n_max is None:
        return DEFAULT_SIZES.get(family, ())
    if family == 'oracle':
        return (n_max,)
    low = n_min if n_min is not None else _MIN_SIZE.get(family, 3)
    chosen = range(low, n_max + 1)
    if family == 'odd-cycle':
        return tuple(n for n in chosen if n % 2 == 1)
    if family == 'even-cycle':
        return tuple(n for n in chosen if n % 2 == 0)
    return tuple(chosen)


def _parts(text: Optional[str]) -> Tuple[Tuple[int, ...], ...]:
    """Parse '1,1,1;2,1,1' into ((1, 1, 1), (2, 1, 1))."""
    if text is None:
        return ()
    groups: List[Tuple[int, ...]] = []
    for group in text.split(';'):
        if group.strip():
            groups.append(tuple(parse_int_list(group, '--parts')))
    return tuple(groups)


@click.command('verify')
@click.argument('family', type=click.Choice(sorted(set(SWEEP_FAMILIES) | set(TAGS))))
@click.option('--sizes', help='Comma-separated family sizes.')
@click.option('--n-min', type=int, help='Smallest family size.')
@click.option('--n-max', type=int, help='Largest family size.')
@click.option('--parts', help="Part sizes separated by ';' (multipartite) or n,m pairs (clique-sum).")
@click.option('--weights', default='1,2', show_default=True, help='Weight alphabet.')
@click.option('--samples', type=int, default=10, show_default=True, help='Seeded instances per size.')
@click.option('--seed', type=int, default=0, show_default=True, help='Instance generator seed.')
@click.option('--s-max', type=int, default=3, show_default=True, help='Largest power tested.')
@click.option('--graph', 'graph_file', type=click.Path(dir_okay=False),
              help='Evaluate the theorem FAMILY on this graph file instead of sweeping.')
@click.option('--fixture', type=click.Choice(sorted(FIXTURES)),
              help='Evaluate the theorem FAMILY on a named fixture instead of sweeping.')
@click.option('--timings', is_flag=True, help='Include elapsed_ms in the comparisons.')
@reports_errors
def verify_command(family: str, sizes: Optional[str], n_min: Optional[int], n_max: Optional[int],
                   parts: Optional[str], weights: str, samples: int, seed: int, s_max: int,
                   graph_file: Optional[str], fixture: Optional[str], timings: bool) -> None:
    """
    Check a family theorem on a seeded sweep of instances.

    With --graph or --fixture, FAMILY names a theorem and it is evaluated on
    that single graph. Exits 1 when any instance violates its theorem.
    """
    limits = current_limits()
    if graph_file is not None or fixture is not None:
        if family not in TAGS:
            raise ParseError(f"'{family}' is not a theorem tag; expected one of {', '.join(TAGS)}")
        graph = resolve_graph(graph_file, fixture, None, None, None, None, None, None)
        verdict = theorem_predicate(graph, family, s_max, limits)
        emit(verdict.to_dict(timings=timings))
        if not verdict.satisfied:
            click.get_current_context().exit(1)
        return

    if family not in SWEEP_FAMILIES:
        raise ParseError(f"'{family}' cannot be swept; expected one of {', '.join(SWEEP_FAMILIES)}")
    spec = SweepSpec(
        family=family,
        sizes=_sizes(family, sizes, n_min, n_max),
        parts=_parts(parts),
        weights=tuple(parse_int_list(weights, '--weights')),
        samples=samples,
        seed=seed,
        s_max=s_max,
        jobs=int(current_config().get('JOBS', 1))
    )
    report = run_sweep(spec, limits, timings=timings)
    emit(report.to_dict())
    if not report.passed:
        click.get_current_context().exit(1)


commands = [verify_command]

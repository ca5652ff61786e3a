"""
Power commands: symbolic powers, power comparison and the two transform checks.
"""
import click

from woideals.commands import current_limits, emit, graph_input, reports_errors
from woideals.models.graph import WeightedOrientedGraph
from woideals.services.symbolic import (clamp_structure_report, compare_powers, ordinary_power,
                                        phi_commutation_report, symbolic_power, symbolic_power_grouped,
                                        symbolic_power_localized)

_METHODS = {
    'checked': symbolic_power,
    'grouped': symbolic_power_grouped,
    'localized': symbolic_power_localized,
}


@click.command('symbolic')
@click.option('-s', 's', type=int, required=True, help='The power.')
@click.option('--method', type=click.Choice(sorted(_METHODS)), default='checked', show_default=True,
              help='Grouped formula, localization, or both checked against each other.')
@click.option('--ordinary', is_flag=True, help='Print the ordinary power instead.')
@reports_errors
@graph_input
def symbolic_command(graph: WeightedOrientedGraph, s: int, method: str, ordinary: bool) -> None:
    """Print the generators of I(D)^(s) (or I(D)^s with --ordinary)."""
    limits = current_limits()
    ideal = ordinary_power(graph, s, limits) if ordinary else _METHODS[method](graph, s, limits)
    emit({
        's': s,
        'kind': 'ordinary' if ordinary else 'symbolic',
        'count': len(ideal),
        'generators': ideal.texts()
    })


@click.command('compare')
@click.option('-s', 's', type=int, required=True, help='The power.')
@reports_errors
@graph_input
def compare_command(graph: WeightedOrientedGraph, s: int) -> None:
    """
    Compare I(D)^(s) with I(D)^s.

    Exits 0 when they are equal and 1 when a witness separates them.
    """
    report = compare_powers(graph, s, current_limits())
    emit(report.to_dict(timings=True))
    if not report.equal:
        click.get_current_context().exit(1)


@click.command('phi-check')
@click.option('-s', 's', type=int, required=True, help='The power.')
@reports_errors
@graph_input
def phi_check_command(graph: WeightedOrientedGraph, s: int) -> None:
    """Check that resetting weighted sinks to 1 commutes with the powers up to substitution."""
    report = phi_commutation_report(graph, s, current_limits())
    emit(report)
    if not report['holds']:
        click.get_current_context().exit(1)


@click.command('clamp-check')
@click.option('-s', 's', type=int, required=True, help='The power.')
@reports_errors
@graph_input
def clamp_check_command(graph: WeightedOrientedGraph, s: int) -> None:
    """Check that clamping weights to 2 keeps the strong covers and the grouped formula."""
    report = clamp_structure_report(graph, s, current_limits())
    emit(report)
    if not report['holds']:
        click.get_current_context().exit(1)


commands = [symbolic_command, compare_command, phi_check_command, clamp_check_command]

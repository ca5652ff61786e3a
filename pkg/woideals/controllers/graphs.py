"""
Graph commands: edge ideal of a graph and family construction.
"""
import click

from woideals.commands import emit, graph_input, reports_errors
from woideals.models.graph import WeightedOrientedGraph


@click.command('edge-ideal')
@reports_errors
@graph_input
def edge_ideal_command(graph: WeightedOrientedGraph) -> None:
    """
    Print the edge ideal I(D) of a graph.

    The report lists the generators in canonical order and the sources whose
    input weight was reset to 1.
    """
    ideal = graph.edge_ideal()
    emit({
        'graph': graph.to_dict(),
        'normalized_sources': graph.universe.ordered(graph.normalized),
        'edge_ideal': ideal.to_text(),
        'generators': ideal.texts()
    })


@click.command('family')
@reports_errors
@graph_input
def family_command(graph: WeightedOrientedGraph) -> None:
    """Print a family or fixture graph as graph JSON."""
    emit(graph.to_dict())


commands = [edge_ideal_command, family_command]

"""
Cover commands: the cover census and the irreducible decomposition.
"""
import click

from woideals.commands import current_limits, emit, graph_input, reports_errors
from woideals.models.graph import WeightedOrientedGraph
from woideals.services.covers import (enumerate_covers, enumerate_strong_covers, irreducible_decomposition,
                                      irreducible_ideal, is_total_cover_strong)


@click.command('covers')
@click.option('--all', 'show_all', is_flag=True, help='Include covers that are not strong.')
@reports_errors
@graph_input
def covers_command(graph: WeightedOrientedGraph, show_all: bool) -> None:
    """
    List the strong vertex covers of a graph with their L1/L2/L3 partitions,
    irreducible ideals and maximal groups.
    """
    limits = current_limits()
    census = enumerate_strong_covers(graph, limits)
    listed = enumerate_covers(graph, limits) if show_all else census.strong_covers

    covers = []
    for partition in listed:
        entry = partition.to_dict()
        entry['irreducible_ideal'] = irreducible_ideal(graph, partition, limits.max_generators).to_text()
        covers.append(entry)

    emit({
        'covers': covers,
        'maximal': [list(p.cover) for p in census.maximal()],
        'groups': [[list(p.cover) for p in group] for group in census.groups()],
        'total_cover_strong': is_total_cover_strong(graph),
        'minimal_strong': all(p.is_minimal for p in census.strong_covers)
    })


@click.command('decompose')
@reports_errors
@graph_input
def decompose_command(graph: WeightedOrientedGraph) -> None:
    """Print I(D) as the intersection of the irreducible ideals of its strong covers."""
    components = irreducible_decomposition(graph, current_limits())
    emit({
        'edge_ideal': graph.edge_ideal().to_text(),
        'components': [
            {'cover': list(partition.cover), 'ideal': ideal.to_text()} for partition, ideal in components
        ],
        'verified': True
    })


commands = [covers_command, decompose_command]

"""
Named fixture graphs: the worked examples the test suite and the CLI refer to.
"""
import json
import os
from typing import Callable, Dict, List

from woideals.errors import ParseError
from woideals.models.graph import WeightedOrientedGraph
from woideals.services.families import make_cycle, make_path


def square_one_weight(w2: int = 2) -> WeightedOrientedGraph:
    """Natural 4-cycle with a single weighted vertex x2."""
    return make_cycle(4, (1, w2, 1, 1))


def pentagon_weighted_sinks(w2: int = 2, w4: int = 2) -> WeightedOrientedGraph:
    """
    5-cycle with sinks x2, x4 of weight >= 2 and the non-sink x5 of weight 2.

    I(D) = (x1*x2^w2, x2^w2*x3, x3*x4^w4, x4^w4*x5, x1*x5^2).
    """
    edges = [('x1', 'x2'), ('x3', 'x2'), ('x3', 'x4'), ('x5', 'x4'), ('x1', 'x5')]
    return WeightedOrientedGraph.build(['x1', 'x2', 'x3', 'x4', 'x5'], [1, w2, 1, w4, 2], edges)


def pentagon_unit_sinks() -> WeightedOrientedGraph:
    """The weighted-sinks pentagon with its sinks reset to weight 1."""
    reduced, _ = pentagon_weighted_sinks().sink_weights_to_one()
    return reduced


def path_heavy_second() -> WeightedOrientedGraph:
    """Natural path x1 -> x2 -> x3 -> x4 with w(x2) = 2 and every other weight 1."""
    return make_path(3, (1, 2, 1, 1))


def path_heavy_interior() -> WeightedOrientedGraph:
    """Natural path x0 -> x1 -> x2 -> x3 with both interior weights 2."""
    return make_path(3, (1, 2, 2, 1), start=0)


def square_two_weights(w2: int = 3, w3: int = 4) -> WeightedOrientedGraph:
    """Natural 4-cycle with x2 and x3 weighted."""
    return make_cycle(4, (1, w2, w3, 1))


def pentagon_one_weight() -> WeightedOrientedGraph:
    """Natural 5-cycle with only x2 weighted."""
    return make_cycle(5, (1, 2, 1, 1, 1))


def pentagon_all_heavy() -> WeightedOrientedGraph:
    """Natural 5-cycle with every weight 2; V(D) is a strong cover."""
    return make_cycle(5, (2, 2, 2, 2, 2))


def hexagon_one_weight() -> WeightedOrientedGraph:
    """Natural 6-cycle with only x2 weighted."""
    return make_cycle(6, (1, 2, 1, 1, 1, 1))


FIXTURES: Dict[str, Callable[[], WeightedOrientedGraph]] = {
    'square_one_weight': square_one_weight,
    'pentagon_weighted_sinks': pentagon_weighted_sinks,
    'pentagon_unit_sinks': pentagon_unit_sinks,
    'path_heavy_second': path_heavy_second,
    'path_heavy_interior': path_heavy_interior,
    'square_two_weights': square_two_weights,
    'pentagon_one_weight': pentagon_one_weight,
    'pentagon_all_heavy': pentagon_all_heavy,
    'hexagon_one_weight': hexagon_one_weight,
}


def get_fixture(name: str) -> WeightedOrientedGraph:
    """
    Build a named fixture graph.

    Args:
        name: A key of FIXTURES.

    Returns:
        WeightedOrientedGraph: The fixture.
    """
    if name not in FIXTURES:
        raise ParseError(f"Unknown fixture '{name}'; available: {', '.join(sorted(FIXTURES))}")
    return FIXTURES[name]()


def seed_fixtures(directory: str) -> List[str]:
    """Write every fixture as <name>.json into `directory` and return the paths."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for name in FIXTURES:
        path = os.path.join(directory, f"{name}.json")
        with open(path, 'w', encoding='utf-8') as handle:
            json.dump(get_fixture(name).to_dict(), handle, indent=2)
            handle.write('\n')
        written.append(path)
    return written

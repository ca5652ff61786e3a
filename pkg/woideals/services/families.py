"""
Constructors for the named graph families, orientation strings and seeded random graphs.

Every family is built from a base list of undirected edges, each written in its
natural direction. An orientation string then keeps ('+') or reverses ('-')
every base edge:

    natural             all '+'
    seeded:<int>        one numpy draw per base edge
    explicit:<+/-...>   one character per base edge
"""
import logging
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from woideals.errors import GraphError
from woideals.models.graph import Edge, WeightedOrientedGraph

log = logging.getLogger(__name__)

FAMILIES = ('cycle', 'path', 'star', 'clique-sum', 'multipartite')


def parse_orientation(orient: Optional[str], count: int) -> str:
    """
    Resolve an orientation string into one '+' or '-' per base edge.

    Args:
        orient: 'natural', 'seeded:<int>' or 'explicit:<+/- string>'; None means natural.
        count: Number of base edges.

    Returns:
        str: A string of length `count` over '+' and '-'.
    """
    if orient is None or orient == 'natural':
        return '+' * count
    mode, _, value = orient.partition(':')
    if mode == 'seeded':
        try:
            seed = int(value)
        except ValueError:
            raise GraphError(f"Orientation seed must be an integer, got {value!r}") from None
        flips = np.random.default_rng(seed).integers(0, 2, size=count)
        return ''.join('-' if flip else '+' for flip in flips)
    if mode == 'explicit':
        if len(value) != count or set(value) - {'+', '-'}:
            raise GraphError(
                f"Explicit orientation needs exactly {count} characters from '+-', got {value!r}"
            )
        return value
    raise GraphError(f"Unknown orientation {orient!r}; use natural, seeded:<int> or explicit:<+/->")


def orient_edges(base: Sequence[Edge], orient: Optional[str]) -> List[Edge]:
    signs = parse_orientation(orient, len(base))
    return [(t, h) if sign == '+' else (h, t) for (t, h), sign in zip(base, signs)]


def _weights(names: Sequence[str], weights: Optional[Sequence[int]]) -> List[int]:
    if weights is None:
        return [1] * len(names)
    weights = list(weights)
    if len(weights) != len(names):
        raise GraphError(f"Family has {len(names)} vertices but {len(weights)} weights were given")
    return weights


def cycle_edges(names: Sequence[str]) -> List[Edge]:
    """Base edges of the cycle through `names` in order, closing back to the first."""
    return [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))]


def make_cycle(n: int, weights: Optional[Sequence[int]] = None,
               orientation: Optional[str] = 'natural') -> WeightedOrientedGraph:
    """
    Build the cycle C_n on x1..xn; natural orientation is x_i -> x_{i+1}, x_n -> x_1.

    Args:
        n: Cycle length, at least 3.
        weights: Weights of x1..xn.
        orientation: Orientation string.

    Returns:
        WeightedOrientedGraph: The oriented cycle.
    """
    if n < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {n}")
    names = [f"x{i}" for i in range(1, n + 1)]
    return WeightedOrientedGraph.build(names, _weights(names, weights), orient_edges(cycle_edges(names), orientation))


def make_path(n: int, weights: Optional[Sequence[int]] = None,
              orientation: Optional[str] = 'natural', start: int = 1) -> WeightedOrientedGraph:
    """
    Build the path of length n on x_start..x_{start+n}.

    Args:
        n: Number of edges, at least 1.
        weights: Weights of the n + 1 vertices.
        orientation: Orientation string; natural is x_i -> x_{i+1}.
        start: Index of the first vertex.

    Returns:
        WeightedOrientedGraph: The oriented path.
    """
    if n < 1:
        raise GraphError(f"A path needs at least one edge, got length {n}")
    names = [f"x{i}" for i in range(start, start + n + 1)]
    base = [(names[i], names[i + 1]) for i in range(n)]
    return WeightedOrientedGraph.build(names, _weights(names, weights), orient_edges(base, orientation))


def make_star(n: int, weights: Optional[Sequence[int]] = None,
              orientation: Optional[str] = 'natural') -> WeightedOrientedGraph:
    """
    Build the star S_n: hub x0 joined to leaves x1..xn; '+' orients x0 -> x_i.

    Args:
        n: Number of leaves, at least 1.
        weights: Weights of x0, x1, ..., xn.
        orientation: Orientation string.

    Returns:
        WeightedOrientedGraph: The oriented star.
    """
    if n < 1:
        raise GraphError(f"A star needs at least one leaf, got {n}")
    star = nx.star_graph(n)
    names = [f"x{i}" for i in range(n + 1)]
    base = [(f"x{u}", f"x{v}") for u, v in sorted(tuple(sorted(e)) for e in star.edges)]
    return WeightedOrientedGraph.build(names, _weights(names, weights), orient_edges(base, orientation))


def make_clique_sum(n: int, m: int, weights: Optional[Sequence[int]] = None,
                    orientation: Optional[str] = 'natural') -> WeightedOrientedGraph:
    """
    Glue the odd cycles C_{2n+1} on x1..x_{2n+1} and C'_{2m+1} on x1, y2..y_{2m+1} at x1.

    Base edges are those of the first cycle followed by those of the second,
    each cycle in its natural direction.

    Args:
        n: Half the length of the first cycle, rounded down; at least 1.
        m: Half the length of the second cycle, rounded down; at least 1.
        weights: Weights of x1..x_{2n+1} then y2..y_{2m+1}.
        orientation: Orientation string.

    Returns:
        WeightedOrientedGraph: The clique sum.
    """
    if n < 1 or m < 1:
        raise GraphError(f"Clique sum needs n, m >= 1, got n={n}, m={m}")
    first = [f"x{i}" for i in range(1, 2 * n + 2)]
    second = ['x1'] + [f"y{i}" for i in range(2, 2 * m + 2)]
    names = first + second[1:]
    base = cycle_edges(first) + cycle_edges(second)
    return WeightedOrientedGraph.build(names, _weights(names, weights), orient_edges(base, orientation))


def multipartite_names(part_sizes: Sequence[int]) -> List[List[str]]:
    return [[f"x{i}_{j}" for j in range(1, size + 1)] for i, size in enumerate(part_sizes, start=1)]


def make_complete_multipartite(part_sizes: Sequence[int], weights: Optional[Sequence[int]] = None,
                               orientation: Optional[str] = 'natural') -> WeightedOrientedGraph:
    """
    Build the complete multipartite graph: every pair of vertices in different parts is an edge.

    Vertex x{i}_{j} is the j-th vertex of part i. Base edges run from the lower
    part to the higher one and are listed in vertex order.

    Args:
        part_sizes: Size of each part; at least two non-empty parts.
        weights: Weights in vertex order (part by part).
        orientation: Orientation string.

    Returns:
        WeightedOrientedGraph: The oriented multipartite graph.
    """
    part_sizes = list(part_sizes)
    if len(part_sizes) < 2 or any(size < 1 for size in part_sizes):
        raise GraphError(f"Need at least two non-empty parts, got {part_sizes}")
    parts = multipartite_names(part_sizes)
    names = [name for part in parts for name in part]
    # Nodes of the networkx graph are numbered part by part, matching `names`.
    complete = nx.complete_multipartite_graph(*part_sizes)
    base = [(names[u], names[v]) for u, v in sorted(tuple(sorted(e)) for e in complete.edges)]
    return WeightedOrientedGraph.build(names, _weights(names, weights), orient_edges(base, orientation))


def make_family(family: str, n: Optional[int] = None, m: Optional[int] = None,
                parts: Optional[Sequence[int]] = None, weights: Optional[Sequence[int]] = None,
                orientation: Optional[str] = 'natural') -> WeightedOrientedGraph:
    """
    Dispatch to a family constructor by name.

    Args:
        family: One of FAMILIES.
        n: Size parameter (cycle length, path length, star leaves, first clique-sum half).
        m: Second clique-sum half.
        parts: Multipartite part sizes.
        weights: Vertex weights in the family's vertex order.
        orientation: Orientation string.

    Returns:
        WeightedOrientedGraph: The family graph.
    """
    if family == 'multipartite':
        if not parts:
            raise GraphError("The multipartite family needs --parts")
        return make_complete_multipartite(parts, weights, orientation)
    if n is None:
        raise GraphError(f"The {family} family needs --n")
    if family == 'cycle':
        return make_cycle(n, weights, orientation)
    if family == 'path':
        return make_path(n, weights, orientation)
    if family == 'star':
        return make_star(n, weights, orientation)
    if family == 'clique-sum':
        if m is None:
            raise GraphError("The clique-sum family needs --m")
        return make_clique_sum(n, m, weights, orientation)
    raise GraphError(f"Unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def random_weights(rng: np.random.Generator, count: int, alphabet: Sequence[int]) -> List[int]:
    """Draw `count` weights uniformly from `alphabet`."""
    return [int(alphabet[i]) for i in rng.integers(0, len(alphabet), size=count)]


def random_orientation(rng: np.random.Generator, count: int) -> str:
    """An explicit orientation string drawn from `rng`."""
    return 'explicit:' + ''.join('-' if flip else '+' for flip in rng.integers(0, 2, size=count))


def random_graph(rng: np.random.Generator, n: int, max_weight: int = 3,
                 edge_probability: float = 0.5) -> WeightedOrientedGraph:
    """
    Random weighted oriented graph on x1..xn.

    Each vertex pair becomes an edge with the given probability and a random
    direction. A graph with no edge at all gets the edge x1 -> x2.

    Args:
        rng: The numpy generator.
        n: Number of vertices, at least 2.
        max_weight: Weights are drawn from 1..max_weight.
        edge_probability: Chance that a pair is joined.

    Returns:
        WeightedOrientedGraph: The graph, source weights normalized silently.
    """
    if n < 2:
        raise GraphError(f"A random graph needs at least 2 vertices, got {n}")
    names = [f"x{i}" for i in range(1, n + 1)]
    pairs = nx.gnp_random_graph(n, edge_probability, seed=int(rng.integers(0, 2 ** 31)))
    edges: List[Tuple[str, str]] = []
    for u, v in sorted(tuple(sorted(e)) for e in pairs.edges):
        edges.append((names[u], names[v]) if rng.integers(0, 2) == 0 else (names[v], names[u]))
    if not edges:
        edges.append((names[0], names[1]))
    weights = [int(w) for w in rng.integers(1, max_weight + 1, size=n)]
    return WeightedOrientedGraph.build(names, weights, edges, warn=False)

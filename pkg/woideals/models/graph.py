"""
Weighted oriented graph model D = (V, E, w).
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

import networkx as nx

from woideals.errors import GraphError, ParseError
from woideals.models.ideal import MonomialIdeal
from woideals.models.monomial import VariableUniverse

log = logging.getLogger(__name__)

Edge = Tuple[str, str]


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """
    A weighted oriented graph with one variable per vertex.

    Attributes:
        universe: The vertices, in canonical variable order.
        weights: Positive weight of each vertex, aligned with the universe. Sources carry weight 1.
        edges: Directed edges (tail, head) sorted by the positions of tail then head.
        normalized: Sources whose input weight was reset to 1 when the graph was built.
    """
    universe: VariableUniverse
    weights: Tuple[int, ...]
    edges: Tuple[Edge, ...]
    normalized: FrozenSet[str] = field(default=frozenset(), compare=False)
    _out: Dict[str, FrozenSet[str]] = field(init=False, compare=False, repr=False)
    _in: Dict[str, FrozenSet[str]] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        out = {name: set() for name in self.universe.names}
        inc = {name: set() for name in self.universe.names}
        for tail, head in self.edges:
            out[tail].add(head)
            inc[head].add(tail)
        object.__setattr__(self, '_out', {k: frozenset(v) for k, v in out.items()})
        object.__setattr__(self, '_in', {k: frozenset(v) for k, v in inc.items()})

    def __hash__(self) -> int:
        return hash((self.universe, self.weights, self.edges))

    @staticmethod
    def build(names: Sequence[str], weights: Sequence[int], edges: Iterable[Edge],
              warn: bool = True) -> 'WeightedOrientedGraph':
        """
        Validate and build a weighted oriented graph.

        Every source vertex gets weight 1; the vertices whose weight changed are
        recorded in `normalized` and reported as a warning when `warn` is set.

        Args:
            names: Vertex names; their order is the variable order.
            weights: Positive integer weight per vertex.
            edges: Directed edges as (tail, head) pairs.
            warn: Log a warning when a source weight is normalized.

        Returns:
            WeightedOrientedGraph: The validated graph.
        """
        universe = VariableUniverse(tuple(names))
        weights = list(weights)
        if len(weights) != len(universe):
            raise GraphError(f"Got {len(weights)} weights for {len(universe)} vertices")
        for name, weight in zip(universe.names, weights):
            if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
                raise GraphError(f"Weight of {name} must be a positive integer, got {weight!r}")

        seen = set()
        for edge in edges:
            if len(edge) != 2:
                raise GraphError(f"Edge {edge!r} is not a (tail, head) pair")
            tail, head = edge
            for end in (tail, head):
                if end not in universe.index:
                    raise GraphError(f"Edge ({tail}, {head}) references unknown vertex '{end}'")
            if tail == head:
                raise GraphError(f"Loop at vertex '{tail}' is not allowed")
            if (tail, head) in seen:
                raise GraphError(f"Duplicate edge ({tail}, {head})")
            if (head, tail) in seen:
                raise GraphError(f"Anti-parallel edges ({head}, {tail}) and ({tail}, {head})")
            seen.add((tail, head))
        ordered = tuple(sorted(seen, key=lambda e: (universe.index[e[0]], universe.index[e[1]])))

        heads = {head for _, head in ordered}
        normalized = []
        for i, name in enumerate(universe.names):
            if name not in heads and weights[i] != 1:
                normalized.append(name)
                weights[i] = 1
        if normalized and warn:
            log.warning("Source vertices %s normalized to weight 1", ', '.join(normalized))
        return WeightedOrientedGraph(universe, tuple(weights), ordered, frozenset(normalized))

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.universe.names

    def _known(self, v: str) -> None:
        if v not in self.universe.index:
            raise GraphError(f"Unknown vertex '{v}'")

    def weight(self, v: str) -> int:
        self._known(v)
        return self.weights[self.universe.index[v]]

    def weight_map(self) -> Dict[str, int]:
        return dict(zip(self.universe.names, self.weights))

    def out_neighbors(self, v: str) -> FrozenSet[str]:
        self._known(v)
        return self._out[v]

    def in_neighbors(self, v: str) -> FrozenSet[str]:
        self._known(v)
        return self._in[v]

    def neighbors(self, v: str) -> FrozenSet[str]:
        self._known(v)
        return self._out[v] | self._in[v]

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def v_plus(self) -> FrozenSet[str]:
        """Vertices of non-trivial weight."""
        return frozenset(name for name, w in zip(self.universe.names, self.weights) if w >= 2)

    def sources(self) -> FrozenSet[str]:
        return frozenset(name for name in self.universe.names if not self._in[name])

    def sinks(self) -> FrozenSet[str]:
        return frozenset(name for name in self.universe.names if not self._out[name])

    def is_sink_only_vplus(self) -> bool:
        """True iff every vertex of non-trivial weight is a sink."""
        return self.v_plus() <= self.sinks()

    def out_neighborhood(self, vertices: Iterable[str]) -> FrozenSet[str]:
        result = set()
        for v in vertices:
            result |= self.out_neighbors(v)
        return frozenset(result)

    def edge_ideal(self) -> MonomialIdeal:
        """
        The edge ideal I(D), one generator x_tail * x_head^{w(head)} per edge.

        Returns:
            MonomialIdeal: I(D), minimalized.
        """
        gens = []
        for tail, head in self.edges:
            gens.append(self.universe.monomial({tail: 1, head: self.weight(head)}))
        return MonomialIdeal.minimalize(self.universe, gens)

    def delete_vertices(self, removed: Iterable[str]) -> 'WeightedOrientedGraph':
        """
        Induced subgraph on the remaining vertices; new sources get weight 1.

        Args:
            removed: Vertices to delete with their incident edges.

        Returns:
            WeightedOrientedGraph: D minus the removed vertices.
        """
        removed = set(removed)
        for v in removed:
            self._known(v)
        names = [v for v in self.universe.names if v not in removed]
        weights = [self.weight(v) for v in names]
        edges = [(t, h) for t, h in self.edges if t not in removed and h not in removed]
        return WeightedOrientedGraph.build(names, weights, edges, warn=False)

    def with_weights(self, weights: Mapping[str, int]) -> 'WeightedOrientedGraph':
        """Copy of the graph with some weights replaced, orientation unchanged."""
        merged = self.weight_map()
        merged.update(weights)
        return WeightedOrientedGraph.build(
            self.universe.names, [merged[v] for v in self.universe.names], self.edges, warn=False
        )

    def sink_weights_to_one(self) -> Tuple['WeightedOrientedGraph', FrozenSet[str]]:
        """
        Reset the weight of every weighted sink to 1.

        Returns:
            Tuple: The graph D' and the set U of weighted sinks that were reset.
        """
        reset = self.sinks() & self.v_plus()
        return self.with_weights({v: 1 for v in reset}), reset

    def clamp_weights_to_two(self) -> 'WeightedOrientedGraph':
        """Assign weight 2 to every vertex of weight at least 2."""
        return self.with_weights({v: min(w, 2) for v, w in self.weight_map().items()})

    def underlying(self) -> nx.Graph:
        """The underlying simple graph G."""
        graph = nx.Graph()
        graph.add_nodes_from(self.universe.names)
        graph.add_edges_from(self.edges)
        return graph

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.underlying())

    def edge_masks(self) -> List[int]:
        """One bitmask per edge with the bits of its two ends set."""
        index = self.universe.index
        return [(1 << index[t]) | (1 << index[h]) for t, h in self.edges]

    def to_dict(self) -> Dict:
        """
        Convert the graph to its JSON file form.

        Returns:
            Dict: Vertices with weights in variable order, and the edge list.
        """
        return {
            'vertices': [{'name': name, 'weight': w} for name, w in zip(self.universe.names, self.weights)],
            'edges': [[t, h] for t, h in self.edges]
        }

    @staticmethod
    def from_dict(data: Dict, warn: bool = True) -> 'WeightedOrientedGraph':
        """
        Create a graph from its JSON file form.

        Args:
            data: Dictionary with 'vertices' and 'edges'.
            warn: Log a warning when a source weight is normalized.

        Returns:
            WeightedOrientedGraph: The validated graph.
        """
        if not isinstance(data, dict):
            raise ParseError("Graph JSON must be an object with 'vertices' and 'edges'")
        try:
            vertices = data['vertices']
            names = [vertex['name'] for vertex in vertices]
            weights = [vertex.get('weight', 1) for vertex in vertices]
            edges = [tuple(edge) for edge in data['edges']]
        except KeyError as e:
            raise ParseError(f"Graph JSON is missing the key {e}") from None
        except (TypeError, AttributeError) as e:
            raise ParseError(f"Malformed graph JSON: {e}") from None
        return WeightedOrientedGraph.build(names, weights, edges, warn=warn)

    @staticmethod
    def load(path: str) -> 'WeightedOrientedGraph':
        """
        Read a graph JSON file.

        Args:
            path: Path to the file.

        Returns:
            WeightedOrientedGraph: The validated graph.
        """
        try:
            with open(path, encoding='utf-8') as handle:
                data = json.load(handle)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None
        except OSError as e:
            raise ParseError(f"Cannot read {path}: {e.strerror}") from None
        return WeightedOrientedGraph.from_dict(data)
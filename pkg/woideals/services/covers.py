"""
Vertex covers of a weighted oriented graph: enumeration, the L1/L2/L3 partition,
strong covers and the irreducible decomposition of the edge ideal.

Covers are handled internally as bitmasks over the variable positions. The
enumeration walks every vertex subset in numpy chunks and keeps the ones that
meet every edge mask.
"""
import logging
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from woideals.errors import CapExceededError, GraphError, OracleDisagreementError
from woideals.limits import DEFAULT_LIMITS, Limits
from woideals.models.cover import CoverPartition, StrongCoverCensus
from woideals.models.graph import WeightedOrientedGraph
from woideals.models.ideal import MonomialIdeal, intersect_all

log = logging.getLogger(__name__)

_CHUNK = 1 << 18
# Subsets are held in int64 arrays.
_HARD_CAP = 62


def _popcount(mask: int) -> int:
    return bin(mask).count('1')


def _positions(mask: int) -> Tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def subset_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Canonical subset order: by size, then by the sorted tuple of positions."""
    return (_popcount(mask), _positions(mask))


def _vertex_mask(D: WeightedOrientedGraph, C: Iterable[str]) -> int:
    mask = 0
    for v in C:
        if v not in D.universe.index:
            raise GraphError(f"Unknown vertex '{v}' in cover")
        mask |= 1 << D.universe.index[v]
    return mask


def _names(D: WeightedOrientedGraph, mask: int) -> Tuple[str, ...]:
    return tuple(name for i, name in enumerate(D.vertices) if mask >> i & 1)


class _Adjacency:
    """Out-, in-neighbour and V+ bitmasks of a graph."""

    def __init__(self, D: WeightedOrientedGraph):
        index = D.universe.index
        self.full = (1 << len(D.vertices)) - 1
        self.out = [0] * len(D.vertices)
        self.inc = [0] * len(D.vertices)
        for tail, head in D.edges:
            self.out[index[tail]] |= 1 << index[head]
            self.inc[index[head]] |= 1 << index[tail]
        self.v_plus = _vertex_mask(D, D.v_plus())

    def split(self, cover: int) -> Tuple[int, int, int]:
        outside = self.full & ~cover
        l1 = l2 = l3 = 0
        for i in _positions(cover):
            bit = 1 << i
            if self.out[i] & outside:
                l1 |= bit
            elif self.inc[i] & outside:
                l2 |= bit
            else:
                l3 |= bit
        return l1, l2, l3

    def strong(self, cover: int, l1: int, l3: int) -> bool:
        allowed = self.v_plus & cover & ~l1
        return all(self.inc[i] & allowed for i in _positions(l3))


def _check_cap(D: WeightedOrientedGraph, limits: Limits) -> None:
    n = len(D.vertices)
    if n > _HARD_CAP:
        raise CapExceededError(f"Cover enumeration supports at most {_HARD_CAP} vertices, got {n}")
    if n > limits.cover_cap and not limits.allow_large:
        raise CapExceededError(
            f"Graph has {n} vertices, above the cover enumeration cap of {limits.cover_cap} "
            f"(pass --allow-large or raise WOIDEALS_COVER_CAP)"
        )


def is_vertex_cover(D: WeightedOrientedGraph, C: Iterable[str]) -> bool:
    """
    Check whether C meets every edge of D.

    Args:
        D: The graph.
        C: Vertex names.

    Returns:
        bool: True iff every edge has its tail or head in C.
    """
    cover = _vertex_mask(D, C)
    return all(cover & edge for edge in D.edge_masks())


def _partition_of_mask(D: WeightedOrientedGraph, adjacency: _Adjacency, cover: int) -> CoverPartition:
    l1, l2, l3 = adjacency.split(cover)
    return CoverPartition(
        cover=_names(D, cover),
        l1=_names(D, l1),
        l2=_names(D, l2),
        l3=_names(D, l3),
        is_minimal=l3 == 0,
        is_strong=adjacency.strong(cover, l1, l3)
    )


def partition_L(D: WeightedOrientedGraph, C: Iterable[str]) -> CoverPartition:
    """
    Split a vertex cover into L1, L2 and L3.

    L1 holds the vertices with an out-neighbour outside C, L2 the remaining
    ones with an in-neighbour outside C, and L3 the rest.

    Args:
        D: The graph.
        C: A vertex cover of D.

    Returns:
        CoverPartition: The partition with its minimal and strong flags.
    """
    C = list(C)
    if not is_vertex_cover(D, C):
        raise GraphError(f"{D.universe.ordered(C)} is not a vertex cover")
    return _partition_of_mask(D, _Adjacency(D), _vertex_mask(D, C))


def is_strong(D: WeightedOrientedGraph, partition: CoverPartition) -> bool:
    """
    Check the strong condition on a partition: every L3 vertex has an
    in-neighbour of weight at least 2 inside C minus L1.

    Args:
        D: The graph the partition was computed for.
        partition: The cover partition.

    Returns:
        bool: Whether the cover is strong.
    """
    allowed = (partition.vertices - set(partition.l1)) & D.v_plus()
    return all(D.in_neighbors(x) & allowed for x in partition.l3)


def enumerate_cover_masks(D: WeightedOrientedGraph, limits: Limits = DEFAULT_LIMITS) -> List[int]:
    """
    Enumerate every vertex cover of D as a bitmask, in canonical subset order.

    Args:
        D: The graph.
        limits: Resource caps; the cover cap bounds the vertex count.

    Returns:
        List[int]: Cover bitmasks.
    """
    _check_cap(D, limits)
    total = 1 << len(D.vertices)
    edges = np.array(D.edge_masks(), dtype=np.int64)
    found: List[int] = []
    for start in range(0, total, _CHUNK):
        subsets = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        covered = np.ones(subsets.shape, dtype=bool)
        for edge in edges:
            covered &= (subsets & edge) != 0
        found.extend(int(mask) for mask in subsets[covered])
    found.sort(key=subset_key)
    log.debug("Enumerated %d vertex covers out of %d subsets", len(found), total)
    return found


def enumerate_covers(D: WeightedOrientedGraph, limits: Limits = DEFAULT_LIMITS) -> List[CoverPartition]:
    """Every vertex cover of D, strong or not, with its partition."""
    adjacency = _Adjacency(D)
    return [_partition_of_mask(D, adjacency, mask) for mask in enumerate_cover_masks(D, limits)]


def enumerate_strong_covers(D: WeightedOrientedGraph, limits: Limits = DEFAULT_LIMITS) -> StrongCoverCensus:
    """
    Enumerate the strong covers of D and group them under the maximal ones.

    Maximality is taken within the strong covers. A strong cover contained in
    several maximal strong covers is listed in every such group.

    Args:
        D: The graph.
        limits: Resource caps.

    Returns:
        StrongCoverCensus: Strong covers in canonical order plus the maximal groups.
    """
    adjacency = _Adjacency(D)
    masks: List[int] = []
    partitions: List[CoverPartition] = []
    for mask in enumerate_cover_masks(D, limits):
        partition = _partition_of_mask(D, adjacency, mask)
        if partition.is_strong:
            masks.append(mask)
            partitions.append(partition)

    groups = []
    for top_index, top in enumerate(masks):
        if any(other != top and top & other == top for other in masks):
            continue
        members = tuple(i for i, mask in enumerate(masks) if mask & top == mask)
        groups.append((top_index, members))
    log.debug("%d strong covers, %d maximal", len(masks), len(groups))
    return StrongCoverCensus(tuple(partitions), tuple(groups))


def is_total_cover_strong(D: WeightedOrientedGraph) -> bool:
    """
    True iff the out-neighbourhood of V+(D) is all of V(D), which is exactly
    when V(D) is a strong vertex cover.
    """
    return D.out_neighborhood(D.v_plus()) == frozenset(D.vertices)


def has_minimal_strong_property(D: WeightedOrientedGraph, limits: Limits = DEFAULT_LIMITS) -> bool:
    """
    Check whether every strong vertex cover of D is minimal.

    Args:
        D: The graph.
        limits: Resource caps.

    Returns:
        bool: The minimal-strong property.
    """
    return all(p.is_minimal for p in enumerate_strong_covers(D, limits).strong_covers)


def minimal_covers_underlying(D: WeightedOrientedGraph) -> Set[FrozenSet[str]]:
    """
    Minimal vertex covers of the underlying simple graph, computed by networkx
    as complements of maximal independent sets (maximal cliques of the complement).
    """
    graph = D.underlying()
    everything = frozenset(graph.nodes)
    if graph.number_of_nodes() == 0:
        return {frozenset()}
    return {everything - frozenset(clique) for clique in nx.find_cliques(nx.complement(graph))}


def irreducible_ideal(D: WeightedOrientedGraph, partition: CoverPartition,
                      max_generators: Optional[int] = None) -> MonomialIdeal:
    """
    The irreducible ideal I_C generated by the L1 variables and by x^{w(x)} for x in L2 and L3.

    Args:
        D: The graph.
        partition: Partition of a cover of D; strong covers are the ones that matter.
        max_generators: Ceiling on the generating set.

    Returns:
        MonomialIdeal: I_C; the zero ideal for the empty cover.
    """
    if not partition.is_strong:
        log.debug("Irreducible ideal requested for non-strong cover %s", list(partition.cover))
    gens = [D.universe.variable(x) for x in partition.l1]
    gens += [D.universe.variable(x, D.weight(x)) for x in partition.l2 + partition.l3]
    return MonomialIdeal.minimalize(D.universe, gens, max_generators)


def irreducible_decomposition(D: WeightedOrientedGraph,
                              limits: Limits = DEFAULT_LIMITS) -> List[Tuple[CoverPartition, MonomialIdeal]]:
    """
    Decompose I(D) as the intersection of the irreducible ideals of its strong covers.

    The intersection is recomputed and compared against the edge ideal; a
    mismatch raises OracleDisagreementError.

    Args:
        D: The graph.
        limits: Resource caps.

    Returns:
        List: (strong cover partition, I_C) pairs in canonical cover order.
    """
    census = enumerate_strong_covers(D, limits)
    components = [(p, irreducible_ideal(D, p, limits.max_generators)) for p in census.strong_covers]
    recovered = intersect_all(D.universe, (ideal for _, ideal in components), limits.max_generators)
    expected = D.edge_ideal()
    if recovered.gens != expected.gens:
        log.error("Strong-cover decomposition %s does not reproduce I(D) = %s", recovered, expected)
        raise OracleDisagreementError(
            f"Intersection of irreducible components {recovered} differs from the edge ideal {expected}"
        )
    return components

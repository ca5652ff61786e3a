"""
Theorem predicates: evaluate a family theorem's hypothesis and conclusion on a
concrete graph for s = 2..s_max.

Each tag validates the structural clause of its theorem first and raises
FamilyPreconditionError naming the failed clause. The verdict never claims
more than the tested powers show: when s_max is below the power at which a
biconditional's converse is witnessed, that direction is reported 'untested'.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx

from woideals.errors import FamilyPreconditionError, ParseError, PowerError
from woideals.limits import DEFAULT_LIMITS, Limits
from woideals.models.graph import WeightedOrientedGraph
from woideals.models.monomial import Monomial
from woideals.models.report import ConstructionWitness, EqualityReport, TheoremVerdict
from woideals.services.covers import (enumerate_strong_covers, has_minimal_strong_property,
                                      is_total_cover_strong)
from woideals.services.symbolic import (check_power, clamp_structure_report, compare_powers,
                                        ordinary_power, symbolic_power)

log = logging.getLogger(__name__)

IMPLICATION = 'implication'
BICONDITIONAL = 'biconditional'

TAGS = ('odd-cycle', 'clique-sum', 'multipartite', 'even-cycle', 'natural-cycle',
        'star', 'path', 'total-cover', 'sink-bipartite', 'clamp-equivalence')


def _fail(tag: str, clause: str) -> None:
    raise FamilyPreconditionError(f"{tag}: graph does not satisfy '{clause}'")


# Structural recognizers on the underlying simple graph.

def is_cycle(D: WeightedOrientedGraph) -> bool:
    G = D.underlying()
    return (G.number_of_nodes() >= 3 and nx.is_connected(G)
            and all(d == 2 for _, d in G.degree()))


def is_natural_cycle(D: WeightedOrientedGraph) -> bool:
    """Underlying cycle with every vertex having exactly one in- and one out-neighbour."""
    return is_cycle(D) and all(
        len(D.in_neighbors(v)) == 1 and len(D.out_neighbors(v)) == 1 for v in D.vertices
    )


def cycle_order(D: WeightedOrientedGraph) -> List[str]:
    """Vertices of a natural cycle in edge direction, starting at the first vertex."""
    order = [D.vertices[0]]
    while len(order) < len(D.vertices):
        (nxt,) = D.out_neighbors(order[-1])
        order.append(nxt)
    return order


def clique_sum_halves(D: WeightedOrientedGraph) -> Optional[Tuple[int, int]]:
    """
    (n, m) when the underlying graph is C_{2n+1} and C_{2m+1} glued at one vertex, else None.
    """
    G = D.underlying()
    if G.number_of_nodes() < 5 or not nx.is_connected(G):
        return None
    if G.number_of_edges() != G.number_of_nodes() + 1:
        return None
    degrees = sorted(d for _, d in G.degree())
    if degrees[-1] != 4 or degrees[-2] != 2 or degrees[0] != 2:
        return None
    cycles = nx.cycle_basis(G)
    if len(cycles) != 2 or any(len(c) % 2 == 0 for c in cycles):
        return None
    if len(set(cycles[0]) & set(cycles[1])) != 1:
        return None
    n, m = sorted((len(c) - 1) // 2 for c in cycles)
    return n, m


def multipartite_parts(D: WeightedOrientedGraph) -> Optional[List[List[str]]]:
    """The parts when the underlying graph is complete multipartite, else None."""
    G = D.underlying()
    if G.number_of_nodes() == 0:
        return None
    complement = nx.complement(G)
    parts = []
    for component in nx.connected_components(complement):
        k = len(component)
        if complement.subgraph(component).number_of_edges() != k * (k - 1) // 2:
            return None
        parts.append(D.universe.ordered(component))
    parts.sort(key=lambda part: D.universe.position(part[0]))
    return parts


def star_hub(D: WeightedOrientedGraph) -> Optional[str]:
    """The hub of a star S_n with n >= 2, else None."""
    G = D.underlying()
    if G.number_of_nodes() < 3 or not nx.is_tree(G):
        return None
    hubs = [v for v, d in G.degree() if d == G.number_of_nodes() - 1]
    return hubs[0] if len(hubs) == 1 else None


def natural_path_order(D: WeightedOrientedGraph) -> Optional[List[str]]:
    """Vertices of a naturally oriented path from its source to its sink, else None."""
    G = D.underlying()
    if G.number_of_nodes() < 2 or not nx.is_tree(G) or max(d for _, d in G.degree()) > 2:
        return None
    if any(len(D.out_neighbors(v)) > 1 or len(D.in_neighbors(v)) > 1 for v in D.vertices):
        return None
    (start,) = D.sources()
    order = [start]
    while D.out_neighbors(order[-1]):
        (nxt,) = D.out_neighbors(order[-1])
        order.append(nxt)
    return order


@dataclass
class _Claim:
    """The pieces a tag contributes to a verdict."""
    relation: str
    hypothesis: bool
    witness_power: Optional[int] = None
    witness: Optional[Monomial] = None
    extra_ok: bool = True
    notes: Tuple[str, ...] = ()


def _total_weight_monomial(D: WeightedOrientedGraph) -> Monomial:
    return D.universe.monomial(D.weight_map())


def _odd_cycle(D: WeightedOrientedGraph, limits: Limits) -> _Claim:
    if not is_cycle(D) or len(D.vertices) % 2 == 0:
        _fail('odd-cycle', 'underlying graph is an odd cycle')
    k = (len(D.vertices) - 1) // 2
    hypothesis = is_total_cover_strong(D)
    return _Claim(BICONDITIONAL, hypothesis, k + 1,
                  None if hypothesis else _total_weight_monomial(D))


def _clique_sum(D: WeightedOrientedGraph, limits: Limits) -> _Claim:
    halves = clique_sum_halves(D)
    if halves is None:
        _fail('clique-sum', 'underlying graph is two odd cycles joined at one vertex')
    n, m = halves
    hypothesis = is_total_cover_strong(D)
    return _Claim(BICONDITIONAL, hypothesis, n + m + 1,
                  None if hypothesis else _total_weight_monomial(D))


def _multipartite_witness(D: WeightedOrientedGraph, parts: List[List[str]]) -> Monomial:
    """
    x_a^{w_a} x_b^{w_b} x_c^{w_c} over three distinct parts, with a outside N+(V+).

    b is an in-neighbour of a when a is not a source, so w_b = 1.
    """
    part_of = {v: i for i, part in enumerate(parts) for v in part}
    reached = D.out_neighborhood(D.v_plus())
    a = next(v for v in D.vertices if v not in reached)
    into = D.universe.ordered(D.in_neighbors(a))
    if into:
        b = into[0]
    else:
        b = next(part[0] for i, part in enumerate(parts) if i != part_of[a])
    c = next(part[0] for i, part in enumerate(parts) if i not in (part_of[a], part_of[b]))
    return D.universe.monomial({v: D.weight(v) for v in (a, b, c)})


def _multipartite(D: WeightedOrientedGraph, limits: Limits) -> _Claim:
    parts = multipartite_parts(D)
    if parts is None or len(parts) < 3:
        _fail('multipartite', 'underlying graph is complete m-partite with m >= 3')
    hypothesis = is_total_cover_strong(D)
    return _Claim(BICONDITIONAL, hypothesis, 2,
                  None if hypothesis else _multipartite_witness(D, parts),
                  notes=(f"parts: {[len(p) for p in parts]}",))


def _even_cycle(D: WeightedOrientedGraph, limits: Limits) -> _Claim:
    if not is_cycle(D) or len(D.vertices) % 2 == 1:
        _fail('even-cycle', 'underlying graph is an even cycle')
    total = is_total_cover_strong(D)
    minimal_strong = has_minimal_strong_property(D, limits)
    sinks_only = D.is_sink_only_vplus()
    notes = (
        f"V(D) strong: {total}",
        f"minimal-strong property: {minimal_strong}",
        f"V+ vertices are sinks: {sinks_only}",
    )
    return _Claim(IMPLICATION, total or minimal_strong, extra_ok=minimal_strong == sinks_only, notes=notes)


def _natural_cycle_witnesses(D: WeightedOrientedGraph) -> Tuple[int, Optional[Monomial]]:
    order = cycle_order(D)
    n = len(order)
    power = 3 if n == 6 else 2
    v_plus = D.v_plus()
    for i, v in enumerate(order):
        nxt = order[(i + 1) % n]
        if v in v_plus and nxt not in v_plus:
            prev = order[i - 1]
            powers = {prev: D.weight(prev), v: D.weight(v), nxt: 1}
            if n >= 7:
                far = order[(i + 4) % n]
                powers[far] = D.weight(far)
            elif n == 6:
                after = order[(i + 2) % n]
                powers[nxt] = 2
                powers[after] = D.weight(after)
            return power, D.universe.monomial(powers)
    return power, None


def _natural_cycle(D: WeightedOrientedGraph, limits: Limits) -> _Claim:
    if not is_natural_cycle(D):
        _fail('natural-cycle', 'naturally oriented cycle')
    if len(D.vertices) == 4:
        _fail('natural-cycle', 'cycle length is not 4')
    if not D.v_plus():
        _fail('natural-cycle', 'at least one vertex has non-trivial weight')
    hypothesis = D.v_plus() == frozenset(D.vertices)
    power, witness = _natural_cycle_witnesses(D)
    return _Claim(BICONDITIONAL, hypothesis, power, None if hypothesis else witness,
                  notes=(f"cycle order: {cycle_order(D)}",))


def _star(D: WeightedOrientedGraph, limits: Limits) -> _Claim:
    hub = star_hub(D)
    if hub is None:
        _fail('star', 'underlying graph is a star S_n with n >= 2')
    return _Claim(IMPLICATION, True, notes=(f"hub: {hub}",))


def _path(D: WeightedOrientedGraph, limits: Limits) -> _Claim:
    order = natural_path_order(D)
    if order is None:
        _fail('path', 'naturally oriented path')
    if len(order) - 1 < 3:
        _fail('path', 'path length n >= 3')
    if any(D.weight(v) < 2 for v in order[1:-1]):
        _fail('path', 'interior vertices have weight >= 2')
    return _Claim(IMPLICATION, True, notes=(f"path order: {order}",))


def _total_cover(D: WeightedOrientedGraph, limits: Limits) -> _Claim:
    return _Claim(IMPLICATION, is_total_cover_strong(D))


def _sink_bipartite(D: WeightedOrientedGraph, limits: Limits) -> _Claim:
    if not D.is_bipartite():
        _fail('sink-bipartite', 'underlying graph is bipartite')
    return _Claim(IMPLICATION, D.is_sink_only_vplus())


_CLAIMS: Dict[str, Callable[[WeightedOrientedGraph, Limits], _Claim]] = {
    'odd-cycle': _odd_cycle,
    'clique-sum': _clique_sum,
    'multipartite': _multipartite,
    'even-cycle': _even_cycle,
    'natural-cycle': _natural_cycle,
    'star': _star,
    'path': _path,
    'total-cover': _total_cover,
    'sink-bipartite': _sink_bipartite,
}


def _construction_witness(D: WeightedOrientedGraph, witness: Monomial, s: int,
                          limits: Limits) -> ConstructionWitness:
    ordinary = ordinary_power(D, s, limits)
    return ConstructionWitness(
        monomial=witness,
        s=s,
        in_symbolic=symbolic_power(D, s, limits, ordinary=ordinary).contains(witness),
        in_ordinary=ordinary.contains(witness)
    )


def _comparisons(D: WeightedOrientedGraph, s_max: int, limits: Limits) -> Tuple[EqualityReport, ...]:
    census = enumerate_strong_covers(D, limits)
    return tuple(compare_powers(D, s, limits, census) for s in range(2, s_max + 1))


def _judge(relation: str, hypothesis: bool, conclusion: bool,
           witness_power: Optional[int], s_max: int) -> Tuple[str, bool]:
    if relation == IMPLICATION:
        return 'not-applicable', (not hypothesis) or conclusion
    converse = 'checked' if witness_power is not None and s_max >= witness_power else 'untested'
    if hypothesis:
        return converse, conclusion
    return converse, (not conclusion) if converse == 'checked' else True


def _clamp_equivalence(D: WeightedOrientedGraph, s_max: int, limits: Limits) -> TheoremVerdict:
    halves = clique_sum_halves(D)
    parts = multipartite_parts(D)
    if is_cycle(D) and len(D.vertices) % 2 == 1:
        witness_power = (len(D.vertices) - 1) // 2 + 1
    elif halves is not None:
        witness_power = halves[0] + halves[1] + 1
    elif parts is not None and len(parts) >= 3:
        witness_power = 2
    else:
        _fail('clamp-equivalence', 'odd cycle, clique sum of two odd cycles or complete m-partite graph')

    clamped = D.clamp_weights_to_two()
    comparisons = _comparisons(D, s_max, limits)
    clamped_comparisons = _comparisons(clamped, s_max, limits)
    structure = [clamp_structure_report(D, s, limits) for s in range(2, s_max + 1)]
    structure_ok = all(report['holds'] for report in structure)

    hypothesis = all(report.equal for report in clamped_comparisons)
    conclusion = all(report.equal for report in comparisons)
    converse = 'checked' if s_max >= witness_power else 'untested'
    if converse == 'checked':
        satisfied = hypothesis == conclusion
    else:
        # Below the witness power only the strong case is forced: both sides equal.
        satisfied = not is_total_cover_strong(D) or (hypothesis and conclusion)
    return TheoremVerdict(
        family='clamp-equivalence',
        relation=BICONDITIONAL,
        hypothesis=hypothesis,
        conclusion=conclusion,
        comparisons=comparisons,
        converse=converse,
        satisfied=satisfied and structure_ok,
        notes=(
            f"clamped weights: {list(clamped.weights)}",
            f"strong covers and groups preserved: {structure_ok}",
        )
    )


def theorem_predicate(D: WeightedOrientedGraph, tag: str, s_max: int = 3,
                      limits: Limits = DEFAULT_LIMITS) -> TheoremVerdict:
    """
    Evaluate a family theorem on D for s = 2..s_max.

    Args:
        D: The graph.
        tag: One of TAGS.
        s_max: Largest power tested, at least 2.
        limits: Resource caps.

    Returns:
        TheoremVerdict: Hypothesis, conclusion and whether the claim holds on the tested range.
    """
    if isinstance(s_max, bool) or not isinstance(s_max, int) or s_max < 2:
        raise PowerError(f"s_max must be an integer >= 2, got {s_max!r}")
    check_power(s_max, limits)
    if tag == 'clamp-equivalence':
        return _clamp_equivalence(D, s_max, limits)
    if tag not in _CLAIMS:
        raise ParseError(f"Unknown theorem tag {tag!r}; expected one of {', '.join(TAGS)}")

    claim = _CLAIMS[tag](D, limits)
    comparisons = _comparisons(D, s_max, limits)
    conclusion = all(report.equal for report in comparisons)
    converse, satisfied = _judge(claim.relation, claim.hypothesis, conclusion, claim.witness_power, s_max)

    witness = None
    if claim.witness is not None and claim.witness_power is not None and claim.witness_power <= s_max:
        witness = _construction_witness(D, claim.witness, claim.witness_power, limits)

    satisfied = satisfied and claim.extra_ok and (witness is None or witness.verified)
    if not satisfied:
        log.info("%s violated on %s", tag, D.to_dict())
    return TheoremVerdict(
        family=tag,
        relation=claim.relation,
        hypothesis=claim.hypothesis,
        conclusion=conclusion,
        comparisons=comparisons,
        converse=converse,
        satisfied=satisfied,
        construction_witness=witness,
        notes=claim.notes
    )

"""
Ordinary and symbolic powers of edge ideals.

Two independent pipelines compute I(D)^(s):

- grouped: for each maximal strong cover, intersect the irreducible ideals of
  the strong covers it contains, raise that intersection to the s-th power,
  then intersect over the maximal covers;
- localized: intersect, over the maximal strong covers C, the contraction of
  I(D)^s localized at the prime (C).

Every comparison runs both and raises OracleDisagreementError when they differ.
"""
import logging
import time
from typing import Dict, List, Optional

from woideals.errors import OracleDisagreementError, PowerError
from woideals.limits import DEFAULT_LIMITS, Limits
from woideals.models.cover import StrongCoverCensus
from woideals.models.graph import WeightedOrientedGraph
from woideals.models.ideal import MonomialIdeal, intersect_all
from woideals.models.report import EqualityReport
from woideals.services.covers import enumerate_strong_covers, irreducible_ideal

log = logging.getLogger(__name__)


def check_power(s: int, limits: Limits = DEFAULT_LIMITS) -> None:
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise PowerError(f"Power must be a positive integer, got {s!r}")
    if s > limits.max_power:
        raise PowerError(f"Power {s} is above the maximum of {limits.max_power} (pass --max-power or raise WOIDEALS_MAX_POWER)")


def edge_ideal(D: WeightedOrientedGraph) -> MonomialIdeal:
    """I(D) = (x_i x_j^{w_j} : (x_i, x_j) in E(D))."""
    return D.edge_ideal()


def ordinary_power(D: WeightedOrientedGraph, s: int, limits: Limits = DEFAULT_LIMITS) -> MonomialIdeal:
    check_power(s, limits)
    return D.edge_ideal().power(s, limits.max_generators)


def symbolic_power_grouped(D: WeightedOrientedGraph, s: int, limits: Limits = DEFAULT_LIMITS,
                           census: Optional[StrongCoverCensus] = None) -> MonomialIdeal:
    """
    Compute I(D)^(s) from the irreducible ideals grouped under the maximal strong covers.

    Args:
        D: The graph.
        s: The power.
        limits: Resource caps.
        census: Strong covers of D, when already enumerated.

    Returns:
        MonomialIdeal: The symbolic power.
    """
    check_power(s, limits)
    census = census or enumerate_strong_covers(D, limits)
    components: Dict[int, MonomialIdeal] = {}

    def component(i: int) -> MonomialIdeal:
        if i not in components:
            components[i] = irreducible_ideal(D, census.strong_covers[i], limits.max_generators)
        return components[i]

    powered: List[MonomialIdeal] = []
    for _, members in census.maximal_groups:
        grouped = intersect_all(D.universe, (component(i) for i in members), limits.max_generators)
        powered.append(grouped.power(s, limits.max_generators))
    return intersect_all(D.universe, powered, limits.max_generators)


def symbolic_power_localized(D: WeightedOrientedGraph, s: int, limits: Limits = DEFAULT_LIMITS,
                             census: Optional[StrongCoverCensus] = None,
                             ordinary: Optional[MonomialIdeal] = None) -> MonomialIdeal:
    """
    Compute I(D)^(s) by localizing I(D)^s at each maximal strong cover.

    Args:
        D: The graph.
        s: The power.
        limits: Resource caps.
        census: Strong covers of D, when already enumerated.
        ordinary: I(D)^s, when already computed.

    Returns:
        MonomialIdeal: The symbolic power.
    """
    check_power(s, limits)
    census = census or enumerate_strong_covers(D, limits)
    if ordinary is None:
        ordinary = D.edge_ideal().power(s, limits.max_generators)
    contractions = (ordinary.localize_contract(cover.cover, limits.max_generators) for cover in census.maximal())
    return intersect_all(D.universe, contractions, limits.max_generators)


def symbolic_power(D: WeightedOrientedGraph, s: int, limits: Limits = DEFAULT_LIMITS,
                   census: Optional[StrongCoverCensus] = None,
                   ordinary: Optional[MonomialIdeal] = None) -> MonomialIdeal:
    """
    The symbolic power, checked against the localization oracle.

    Args:
        D: The graph.
        s: The power.
        limits: Resource caps.
        census: Strong covers of D, when already enumerated.
        ordinary: I(D)^s, when already computed.

    Returns:
        MonomialIdeal: I(D)^(s).
    """
    census = census or enumerate_strong_covers(D, limits)
    grouped = symbolic_power_grouped(D, s, limits, census)
    localized = symbolic_power_localized(D, s, limits, census, ordinary)
    if grouped.gens != localized.gens:
        log.error("Grouped formula %s and localization %s disagree at s=%d", grouped, localized, s)
        raise OracleDisagreementError(
            f"Symbolic power at s={s}: grouped formula gives {len(grouped)} generators, "
            f"localization gives {len(localized)}"
        )
    return grouped


def compare_powers(D: WeightedOrientedGraph, s: int, limits: Limits = DEFAULT_LIMITS,
                   census: Optional[StrongCoverCensus] = None) -> EqualityReport:
    """
    Compare I(D)^(s) with I(D)^s.

    When they differ, the witness is the canonically smallest minimal generator
    of the symbolic power outside the ordinary power, re-checked by membership.

    Args:
        D: The graph.
        s: The power.
        limits: Resource caps.
        census: Strong covers of D, when already enumerated.

    Returns:
        EqualityReport: The verdict with generator counts and witness.
    """
    started = time.perf_counter()
    ordinary = ordinary_power(D, s, limits)
    symbolic = symbolic_power(D, s, limits, census, ordinary)
    if not ordinary.is_subset(symbolic):
        log.error("I^%d = %s is not contained in I^(%d) = %s", s, ordinary, s, symbolic)
        raise OracleDisagreementError(f"Ordinary power at s={s} is not contained in the symbolic power")

    equal = ordinary.gens == symbolic.gens
    witness = None
    if not equal:
        witness = next(g for g in symbolic.gens if not ordinary.contains(g))
        if not symbolic.contains(witness) or ordinary.contains(witness):
            raise OracleDisagreementError(f"Witness {witness} failed membership re-verification at s={s}")
    elapsed = (time.perf_counter() - started) * 1000.0
    log.debug("s=%d: %d ordinary / %d symbolic generators in %.1f ms", s, len(ordinary), len(symbolic), elapsed)
    return EqualityReport(
        s=s,
        ordinary_gens=len(ordinary),
        symbolic_gens=len(symbolic),
        equal=equal,
        witness=witness,
        method_agreement=True,
        elapsed_ms=elapsed
    )


def phi_commutation_report(D: WeightedOrientedGraph, s: int, limits: Limits = DEFAULT_LIMITS) -> Dict:
    """
    Transport the powers of I(D') back to D through the substitution x_j -> x_j^{w_j}.

    D' is D with its weighted sinks U reset to weight 1. Both the symbolic and
    the ordinary power of I(D') are mapped generator by generator and compared
    with the powers computed directly on D.

    Args:
        D: The graph.
        s: The power.
        limits: Resource caps.

    Returns:
        Dict: U, both comparisons and the joint verdict.
    """
    reduced, sinks = D.sink_weights_to_one()
    sink_weights = {u: D.weight(u) for u in sinks}

    def transport(m):
        return m.phi(sink_weights)

    reduced_ordinary = ordinary_power(reduced, s, limits)
    ordinary_direct = ordinary_power(D, s, limits)
    symbolic_image = symbolic_power(reduced, s, limits, ordinary=reduced_ordinary).map_generators(
        transport, limits.max_generators)
    ordinary_image = reduced_ordinary.map_generators(transport, limits.max_generators)
    symbolic_direct = symbolic_power(D, s, limits, ordinary=ordinary_direct)
    symbolic_equal = symbolic_image.gens == symbolic_direct.gens
    ordinary_equal = ordinary_image.gens == ordinary_direct.gens
    return {
        's': s,
        'U': D.universe.ordered(sinks),
        'reduced_weights': list(reduced.weights),
        'symbolic_commutes': symbolic_equal,
        'ordinary_commutes': ordinary_equal,
        'holds': symbolic_equal and ordinary_equal,
        'symbolic_image': symbolic_image.texts()
    }


def phi_commutation_check(D: WeightedOrientedGraph, s: int, limits: Limits = DEFAULT_LIMITS) -> bool:
    return phi_commutation_report(D, s, limits)['holds']


def clamp_structure_report(D: WeightedOrientedGraph, s: int, limits: Limits = DEFAULT_LIMITS) -> Dict:
    """
    Compare D with the graph whose weights >= 2 are all clamped to 2.

    Checks that both graphs have the same strong covers and the same maximal
    groups, and that the grouped formula matches the localization oracle on
    each. Whether I^(s) = I^s holds on each side is reported alongside.

    Args:
        D: The graph.
        s: The power.
        limits: Resource caps.

    Returns:
        Dict: The structural comparison and the joint verdict.
    """
    clamped = D.clamp_weights_to_two()
    census = enumerate_strong_covers(D, limits)
    clamped_census = enumerate_strong_covers(clamped, limits)
    covers_match = census.cover_sets() == clamped_census.cover_sets()
    groups_match = census.maximal_groups == clamped_census.maximal_groups
    original = compare_powers(D, s, limits, census)
    reduced = compare_powers(clamped, s, limits, clamped_census)
    return {
        's': s,
        'clamped_weights': list(clamped.weights),
        'strong_covers_match': covers_match,
        'maximal_groups_match': groups_match,
        'methods_agree': original.method_agreement and reduced.method_agreement,
        'equal': original.equal,
        'clamped_equal': reduced.equal,
        'holds': covers_match and groups_match and original.method_agreement and reduced.method_agreement
    }


def clamp_structure_check(D: WeightedOrientedGraph, s: int, limits: Limits = DEFAULT_LIMITS) -> bool:
    return clamp_structure_report(D, s, limits)['holds']

"""
Theorem sweeps: build the instances of a family, evaluate each one and merge
the verdicts in instance order.

Instances are independent; with jobs > 1 they run in a process pool and the
results are merged in submission order, so a fixed seed gives the same report
whatever the parallelism degree.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from woideals.errors import FamilyPreconditionError, GraphError, WoIdealsError
from woideals.limits import DEFAULT_LIMITS, Limits
from woideals.models.graph import WeightedOrientedGraph
from woideals.models.ideal import MonomialIdeal
from woideals.models.report import SweepReport, SweepSpec
from woideals.services import families
from woideals.services.covers import (enumerate_covers, enumerate_strong_covers, has_minimal_strong_property,
                                      irreducible_decomposition, irreducible_ideal, is_total_cover_strong,
                                      minimal_covers_underlying, partition_L)
from woideals.services.symbolic import (edge_ideal, ordinary_power, phi_commutation_check,
                                        symbolic_power_grouped, symbolic_power_localized)
from woideals.services.theorems import theorem_predicate

log = logging.getLogger(__name__)

SWEEP_FAMILIES = ('odd-cycle', 'clique-sum', 'multipartite', 'natural-cycle', 'even-cycle',
                  'star', 'path', 'oracle')

DEFAULT_SIZES = {
    'odd-cycle': (5,),
    'natural-cycle': (5, 7),
    'even-cycle': (4, 6),
    'star': (3, 4),
    'path': (3, 4, 5),
    'oracle': (7,),
}

DEFAULT_PARTS = {
    'clique-sum': ((1, 1),),
    'multipartite': ((1, 1, 1), (2, 1, 1)),
}

# (label, graph, predicate tag)
Instance = Tuple[str, WeightedOrientedGraph, str]


def _pattern(weights: Sequence[int]) -> str:
    return ''.join(str(w) for w in weights)


def _all_weights(count: int, alphabet: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    return itertools.product(alphabet, repeat=count)


def _cycle_instances(spec: SweepSpec, rng: np.random.Generator, tag: str) -> Iterator[Instance]:
    for n in spec.sizes:
        if tag in ('natural-cycle', 'odd-cycle'):
            for weights in _all_weights(n, spec.weights):
                if tag == 'natural-cycle' and max(weights) < 2:
                    continue
                yield f"C{n} w={_pattern(weights)} natural", families.make_cycle(n, weights), tag
        if tag == 'natural-cycle':
            continue
        for _ in range(spec.samples):
            weights = families.random_weights(rng, n, spec.weights)
            orient = families.random_orientation(rng, n)
            graph = families.make_cycle(n, weights, orient)
            yield f"C{n} w={_pattern(weights)} {orient}", graph, tag


def _clique_sum_instances(spec: SweepSpec, rng: np.random.Generator) -> Iterator[Instance]:
    for pair in spec.parts:
        n, m = pair
        size = 2 * n + 2 * m + 1
        for weights in _all_weights(size, spec.weights):
            yield f"clique-sum({n},{m}) w={_pattern(weights)} natural", families.make_clique_sum(n, m, weights), 'clique-sum'
        for _ in range(spec.samples):
            weights = families.random_weights(rng, size, spec.weights)
            orient = families.random_orientation(rng, size + 1)
            graph = families.make_clique_sum(n, m, weights, orient)
            yield f"clique-sum({n},{m}) w={_pattern(weights)} {orient}", graph, 'clique-sum'


def _multipartite_instances(spec: SweepSpec, rng: np.random.Generator) -> Iterator[Instance]:
    for parts in spec.parts:
        size = sum(parts)
        edges = sum(a * b for a, b in itertools.combinations(parts, 2))
        label = 'K(' + ','.join(str(p) for p in parts) + ')'
        for weights in _all_weights(size, spec.weights):
            graph = families.make_complete_multipartite(parts, weights)
            yield f"{label} w={_pattern(weights)} natural", graph, 'multipartite'
        for _ in range(spec.samples):
            weights = families.random_weights(rng, size, spec.weights)
            orient = families.random_orientation(rng, edges)
            graph = families.make_complete_multipartite(parts, weights, orient)
            yield f"{label} w={_pattern(weights)} {orient}", graph, 'multipartite'


def _star_instances(spec: SweepSpec, rng: np.random.Generator) -> Iterator[Instance]:
    for n in spec.sizes:
        for _ in range(spec.samples):
            weights = families.random_weights(rng, n + 1, spec.weights)
            orient = families.random_orientation(rng, n)
            yield f"S{n} w={_pattern(weights)} {orient}", families.make_star(n, weights, orient), 'star'


def _path_instances(spec: SweepSpec, rng: np.random.Generator) -> Iterator[Instance]:
    interior_alphabet = [w for w in spec.weights if w >= 2] or [2]
    end_alphabet = [w for w in spec.weights if w <= 2] or [1]
    for n in spec.sizes:
        for interior in _all_weights(n - 1, interior_alphabet):
            for end in end_alphabet:
                weights = (1,) + interior + (end,)
                graph = families.make_path(n, weights, start=0)
                yield f"P{n} w={_pattern(weights)} natural", graph, 'path'


def _oracle_instances(spec: SweepSpec, rng: np.random.Generator) -> Iterator[Instance]:
    max_weight = max(spec.weights)
    for n in spec.sizes:
        for i in range(spec.samples):
            size = int(rng.integers(2, n + 1))
            graph = families.random_graph(rng, size, max_weight)
            yield f"random#{i} n={size}", graph, 'oracle'


def build_instances(spec: SweepSpec) -> List[Instance]:
    """
    Expand a sweep spec into its ordered instance list.

    Args:
        spec: The sweep parameters.

    Returns:
        List[Instance]: (label, graph, predicate tag) triples.
    """
    rng = np.random.default_rng(spec.seed)
    if spec.family in ('odd-cycle', 'natural-cycle', 'even-cycle'):
        return list(_cycle_instances(spec, rng, spec.family))
    if spec.family == 'clique-sum':
        return list(_clique_sum_instances(spec, rng))
    if spec.family == 'multipartite':
        return list(_multipartite_instances(spec, rng))
    if spec.family == 'star':
        return list(_star_instances(spec, rng))
    if spec.family == 'path':
        return list(_path_instances(spec, rng))
    if spec.family == 'oracle':
        return list(_oracle_instances(spec, rng))
    raise GraphError(f"Unknown sweep family {spec.family!r}; expected one of {', '.join(SWEEP_FAMILIES)}")


def with_defaults(spec: SweepSpec) -> SweepSpec:
    """Fill in the family's default sizes or parts when none were given."""
    sizes = spec.sizes or DEFAULT_SIZES.get(spec.family, ())
    parts = spec.parts or DEFAULT_PARTS.get(spec.family, ())
    return SweepSpec(spec.family, tuple(sizes), tuple(tuple(p) for p in parts), tuple(spec.weights),
                     spec.samples, spec.seed, spec.s_max, spec.jobs)


def oracle_checks(D: WeightedOrientedGraph, s_max: int, limits: Limits = DEFAULT_LIMITS) -> Dict[str, bool]:
    """
    Run the invariant suite on one graph.

    Args:
        D: The graph.
        s_max: Largest power checked (from s = 1).
        limits: Resource caps.

    Returns:
        Dict[str, bool]: One entry per invariant.
    """
    census = enumerate_strong_covers(D, limits)
    covers = enumerate_covers(D, limits)
    I = edge_ideal(D)
    checks = {}

    agree = contained = True
    for s in range(1, s_max + 1):
        grouped = symbolic_power_grouped(D, s, limits, census)
        localized = symbolic_power_localized(D, s, limits, census)
        agree = agree and grouped.gens == localized.gens
        contained = contained and ordinary_power(D, s, limits).is_subset(grouped)
        if s == 1:
            checks['first_power_is_edge_ideal'] = grouped.gens == I.gens
    checks['grouped_matches_localized'] = agree
    checks['ordinary_within_symbolic'] = contained

    try:
        irreducible_decomposition(D, limits)
        checks['decomposition_recovers_edge_ideal'] = True
    except WoIdealsError:
        checks['decomposition_recovers_edge_ideal'] = False

    checks['minimal_implies_strong'] = all(p.is_strong for p in covers if p.is_minimal)
    checks['empty_l3_iff_minimal'] = all((not p.l3) == p.is_minimal for p in covers)
    checks['minimal_covers_match_underlying'] = (
        {p.vertices for p in covers if p.is_minimal} == minimal_covers_underlying(D)
    )
    checks['sink_only_vplus_gives_minimal_strong'] = (
        not D.is_sink_only_vplus() or has_minimal_strong_property(D, limits)
    )
    checks['total_cover_matches_partition'] = is_total_cover_strong(D) == partition_L(D, D.vertices).is_strong

    radicals_ok = True
    for p in census.strong_covers:
        radical = irreducible_ideal(D, p, limits.max_generators).radical()
        radicals_ok = radicals_ok and radical.gens == MonomialIdeal.of_variables(D.universe, p.cover).gens
    checks['radical_is_cover_prime'] = radicals_ok

    strong = census.cover_sets()
    reduced, _ = D.sink_weights_to_one()
    checks['strong_covers_invariant_under_clamp'] = (
        enumerate_strong_covers(D.clamp_weights_to_two(), limits).cover_sets() == strong
    )
    checks['strong_covers_invariant_under_sink_reset'] = (
        enumerate_strong_covers(reduced, limits).cover_sets() == strong
    )
    checks['phi_commutes'] = all(phi_commutation_check(D, s, limits) for s in range(1, s_max + 1))
    return checks


def run_instance(label: str, graph: Dict, tag: str, s_max: int, limits: Limits,
                 timings: bool = False) -> Dict:
    """
    Evaluate one sweep instance from its serialized graph.

    Args:
        label: Instance label.
        graph: Graph JSON dict.
        tag: Theorem tag, or 'oracle' for the invariant suite.
        s_max: Largest power tested.
        limits: Resource caps.
        timings: Keep elapsed_ms in the comparisons.

    Returns:
        Dict: label, graph, status ('satisfied', 'violated' or 'skipped') and verdict.
    """
    entry = {'label': label, 'graph': graph}
    D = WeightedOrientedGraph.from_dict(graph, warn=False)
    try:
        if tag == 'oracle':
            checks = oracle_checks(D, s_max, limits)
            entry['verdict'] = {'family': 'oracle', 'checks': checks, 'satisfied': all(checks.values())}
        else:
            entry['verdict'] = theorem_predicate(D, tag, s_max, limits).to_dict(timings=timings)
        entry['status'] = 'satisfied' if entry['verdict']['satisfied'] else 'violated'
    except FamilyPreconditionError as e:
        entry['status'] = 'skipped'
        entry['verdict'] = e.to_dict()
    except WoIdealsError as e:
        if e.exit_code != 1:
            raise
        entry['status'] = 'violated'
        entry['verdict'] = e.to_dict()
    return entry


def _run_packed(args: Tuple) -> Dict:
    return run_instance(*args)


def run_sweep(spec: SweepSpec, limits: Limits = DEFAULT_LIMITS, timings: bool = False) -> SweepReport:
    """
    Run a sweep and aggregate its verdicts.

    Args:
        spec: The sweep parameters.
        limits: Resource caps.
        timings: Keep elapsed_ms in the comparisons; off for byte-identical reports.

    Returns:
        SweepReport: Counts, per-instance verdicts and replayable failures.
    """
    spec = with_defaults(spec)
    check = [(label, D.to_dict(), tag, spec.s_max, limits, timings) for label, D, tag in build_instances(spec)]
    log.info("Sweeping %d %s instances with %d job(s)", len(check), spec.family, spec.jobs)

    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            entries = list(pool.map(_run_packed, check))
    else:
        entries = [_run_packed(args) for args in check]

    report = SweepReport(spec)
    for index, entry in enumerate(entries, start=1):
        log.info("[%d/%d] %s: %s", index, len(entries), entry['label'], entry['status'])
        report.instances.append(entry)
        if entry['status'] == 'satisfied':
            report.satisfied += 1
        elif entry['status'] == 'skipped':
            report.skipped += 1
        else:
            report.violated += 1
            report.failures.append({'label': entry['label'], 'graph': entry['graph'], 'verdict': entry['verdict']})
    return report

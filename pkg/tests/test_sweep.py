import json

import pytest

from woideals.errors import GraphError
from woideals.limits import DEFAULT_LIMITS
from woideals.models.report import SweepSpec
from woideals.services.sweep import build_instances, oracle_checks, run_instance, run_sweep, with_defaults


def test_odd_cycle_instances_cover_every_weight_pattern():
    instances = build_instances(SweepSpec('odd-cycle', sizes=(5,), samples=3))
    assert len(instances) == 32 + 3
    assert instances[0][0] == 'C5 w=11111 natural'
    assert all(tag == 'odd-cycle' for _, _, tag in instances)


def test_natural_cycle_instances_need_a_weighted_vertex():
    instances = build_instances(SweepSpec('natural-cycle', sizes=(5,)))
    assert len(instances) == 31
    assert all(graph.v_plus() for _, graph, _ in instances)


def test_instances_are_seeded():
    spec = SweepSpec('star', sizes=(3,), weights=(1, 2, 3), samples=5, seed=4)
    first = [(label, graph.to_dict()) for label, graph, _ in build_instances(spec)]
    second = [(label, graph.to_dict()) for label, graph, _ in build_instances(spec)]
    assert first == second


def test_defaults_fill_sizes_and_parts():
    assert with_defaults(SweepSpec('path')).sizes == (3, 4, 5)
    assert with_defaults(SweepSpec('multipartite')).parts == ((1, 1, 1), (2, 1, 1))
    assert with_defaults(SweepSpec('path', sizes=(3,))).sizes == (3,)


def test_unknown_family():
    with pytest.raises(GraphError):
        build_instances(SweepSpec('hypercube', sizes=(3,)))


def test_oracle_checks_on_worked_graphs(square, pentagon, heavy_second_path):
    for graph in (square, pentagon, heavy_second_path):
        checks = oracle_checks(graph, 2)
        assert checks and all(checks.values()), checks
        assert {'sink_only_vplus_gives_minimal_strong', 'total_cover_matches_partition'} <= set(checks)


def test_precondition_failures_are_skipped(square):
    entry = run_instance('square', square.to_dict(), 'odd-cycle', 2, DEFAULT_LIMITS)
    assert entry['status'] == 'skipped'
    assert entry['verdict']['type'] == 'FamilyPreconditionError'


def test_path_sweep_passes():
    report = run_sweep(SweepSpec('path', sizes=(3,), weights=(1, 2), s_max=3))
    assert report.passed
    assert report.satisfied == len(report.instances) == 2
    assert report.failures == []


def test_sweep_report_is_deterministic():
    spec = SweepSpec('oracle', sizes=(4,), samples=3, seed=9, s_max=2)
    first = json.dumps(run_sweep(spec).to_dict(), indent=2)
    second = json.dumps(run_sweep(spec).to_dict(), indent=2)
    assert first == second
    assert 'elapsed_ms' not in first
    assert '"jobs"' not in first


def test_timings_are_opt_in():
    report = run_sweep(SweepSpec('path', sizes=(3,), s_max=2), timings=True)
    assert 'elapsed_ms' in report.instances[0]['verdict']['comparisons'][0]


def test_parallel_sweep_matches_serial():
    serial = run_sweep(SweepSpec('path', sizes=(3, 4), s_max=2))
    parallel = run_sweep(SweepSpec('path', sizes=(3, 4), s_max=2, jobs=2))
    assert serial.to_dict() == parallel.to_dict()


@pytest.mark.slow
@pytest.mark.parametrize('spec', [
    SweepSpec('odd-cycle', sizes=(5,), samples=10),
    SweepSpec('clique-sum', parts=((1, 1),), samples=0),
    SweepSpec('multipartite', parts=((1, 1, 1), (2, 1, 1)), samples=10),
    SweepSpec('natural-cycle', sizes=(5, 7), s_max=3),
    SweepSpec('star', sizes=(3, 4), weights=(1, 2, 3), samples=25),
    SweepSpec('path', sizes=(3, 4, 5), weights=(1, 2, 3)),
    SweepSpec('oracle', sizes=(7,), weights=(1, 2, 3), samples=100),
], ids=lambda spec: spec.family)
def test_acceptance_sweeps(spec):
    report = run_sweep(spec)
    assert report.passed, report.failures

import numpy as np
import pytest

from woideals.errors import GraphError
from woideals.services.families import (make_clique_sum, make_complete_multipartite, make_cycle, make_family,
                                        make_path, make_star, parse_orientation, random_graph)


def test_natural_cycle():
    graph = make_cycle(4, (1, 2, 1, 1))
    assert graph.edges == (('x1', 'x2'), ('x2', 'x3'), ('x3', 'x4'), ('x4', 'x1'))
    assert graph.weights == (1, 2, 1, 1)


def test_explicit_orientation_reverses_edges():
    graph = make_cycle(3, orientation='explicit:+-+')
    assert set(graph.edges) == {('x1', 'x2'), ('x3', 'x2'), ('x3', 'x1')}


def test_seeded_orientation_is_reproducible():
    assert parse_orientation('seeded:7', 12) == parse_orientation('seeded:7', 12)
    assert set(parse_orientation('seeded:7', 12)) <= {'+', '-'}


@pytest.mark.parametrize('orient', ['explicit:++', 'explicit:+x+', 'seeded:abc', 'sideways'])
def test_bad_orientations(orient):
    with pytest.raises(GraphError):
        make_cycle(3, orientation=orient)


def test_path_with_offset_names():
    graph = make_path(3, (1, 2, 2, 1), start=0)
    assert graph.vertices == ('x0', 'x1', 'x2', 'x3')
    assert graph.sources() == {'x0'}
    assert graph.sinks() == {'x3'}


def test_star():
    graph = make_star(3, (1, 2, 2, 2))
    assert graph.vertices == ('x0', 'x1', 'x2', 'x3')
    assert graph.out_neighbors('x0') == {'x1', 'x2', 'x3'}


def test_clique_sum():
    graph = make_clique_sum(1, 2)
    assert graph.vertices == ('x1', 'x2', 'x3', 'y2', 'y3', 'y4', 'y5')
    assert len(graph.edges) == 8
    assert graph.degree('x1') == 4


def test_complete_multipartite():
    graph = make_complete_multipartite((2, 1, 1))
    assert graph.vertices == ('x1_1', 'x1_2', 'x2_1', 'x3_1')
    assert len(graph.edges) == 5
    assert ('x1_1', 'x1_2') not in graph.edges and ('x1_2', 'x1_1') not in graph.edges


def test_family_dispatch():
    assert make_family('cycle', n=5).vertices == ('x1', 'x2', 'x3', 'x4', 'x5')
    assert len(make_family('multipartite', parts=[1, 1, 1]).edges) == 3
    with pytest.raises(GraphError):
        make_family('cycle')
    with pytest.raises(GraphError):
        make_family('clique-sum', n=1)
    with pytest.raises(GraphError):
        make_family('multipartite')
    with pytest.raises(GraphError):
        make_family('cycle', n=4, weights=[1, 2])


@pytest.mark.parametrize('build', [
    lambda: make_cycle(2),
    lambda: make_path(0),
    lambda: make_star(0),
    lambda: make_clique_sum(0, 1),
    lambda: make_complete_multipartite((3,)),
])
def test_degenerate_parameters(build):
    with pytest.raises(GraphError):
        build()


def test_random_graph_is_seeded():
    first = random_graph(np.random.default_rng(11), 6)
    second = random_graph(np.random.default_rng(11), 6)
    assert first.to_dict() == second.to_dict()
    assert first.edges
    assert set(first.weights) <= {1, 2, 3}

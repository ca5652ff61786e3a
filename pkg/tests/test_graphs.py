import json
import logging

import pytest

from woideals.errors import GraphError, ParseError
from woideals.models.graph import WeightedOrientedGraph
from woideals.seeders import square_two_weights

NAMES = ['x1', 'x2', 'x3']


def test_edge_ideal(square):
    assert square.edge_ideal().to_text() == '(x1*x4, x2*x3, x3*x4, x1*x2^2)'


def test_neighbourhoods(square):
    assert square.out_neighbors('x4') == {'x1'}
    assert square.in_neighbors('x2') == {'x1'}
    assert square.neighbors('x1') == {'x2', 'x4'}
    assert square.degree('x3') == 2
    assert square.out_neighborhood(['x1', 'x2']) == {'x2', 'x3'}


def test_weight_classes(square):
    assert square.v_plus() == {'x2'}
    assert square.sinks() == frozenset()
    assert square.sources() == frozenset()
    assert not square.is_sink_only_vplus()


def test_sink_only_vplus(pentagon):
    assert pentagon.v_plus() == {'x2', 'x4', 'x5'}
    assert pentagon.sinks() == {'x2', 'x4'}
    assert not pentagon.is_sink_only_vplus()


def test_source_weight_is_normalized(caplog):
    with caplog.at_level(logging.WARNING, logger='woideals.models.graph'):
        graph = WeightedOrientedGraph.build(NAMES, [3, 2, 1], [('x1', 'x2'), ('x2', 'x3')])
    assert graph.weight('x1') == 1
    assert graph.normalized == {'x1'}
    assert 'x1' in caplog.text


def test_edges_are_sorted():
    graph = WeightedOrientedGraph.build(NAMES, [1, 1, 1], [('x3', 'x1'), ('x1', 'x2')])
    assert graph.edges == (('x1', 'x2'), ('x3', 'x1'))


@pytest.mark.parametrize('weights, edges', [
    ([1, 1, 1], [('x1', 'x1')]),
    ([1, 1, 1], [('x1', 'x2'), ('x2', 'x1')]),
    ([1, 1, 1], [('x1', 'x2'), ('x1', 'x2')]),
    ([1, 1, 1], [('x1', 'x9')]),
    ([1, 0, 1], [('x1', 'x2')]),
    ([1, 1], [('x1', 'x2')]),
])
def test_build_rejects_invalid_graphs(weights, edges):
    with pytest.raises(GraphError):
        WeightedOrientedGraph.build(NAMES, weights, edges)


def test_delete_vertices_normalizes_new_sources(pentagon):
    smaller = pentagon.delete_vertices(['x1', 'x3'])
    assert smaller.vertices == ('x2', 'x4', 'x5')
    assert smaller.edges == (('x5', 'x4'),)
    assert smaller.weight('x5') == 1
    assert smaller.weight('x2') == 1


def test_sink_weights_to_one(pentagon):
    reduced, reset = pentagon.sink_weights_to_one()
    assert reset == {'x2', 'x4'}
    assert reduced.weights == (1, 1, 1, 1, 2)
    assert reduced.edges == pentagon.edges


def test_clamp_weights_to_two():
    assert square_two_weights(3, 4).clamp_weights_to_two().weights == (1, 2, 2, 1)


def test_underlying_graph(square, pentagon):
    assert square.underlying().number_of_edges() == 4
    assert square.is_bipartite()
    assert not pentagon.is_bipartite()


def test_json_form(tmp_path, pentagon):
    path = tmp_path / 'pentagon.json'
    path.write_text(json.dumps(pentagon.to_dict()), encoding='utf-8')
    loaded = WeightedOrientedGraph.load(str(path))
    assert loaded == pentagon
    assert loaded.to_dict()['vertices'][4] == {'name': 'x5', 'weight': 2}


def test_json_weight_defaults_to_one():
    graph = WeightedOrientedGraph.from_dict({'vertices': [{'name': 'a'}, {'name': 'b'}], 'edges': [['a', 'b']]})
    assert graph.weights == (1, 1)


def test_load_errors_name_the_location(tmp_path):
    broken = tmp_path / 'broken.json'
    broken.write_text('{"vertices": [', encoding='utf-8')
    with pytest.raises(ParseError, match='broken.json:1'):
        WeightedOrientedGraph.load(str(broken))
    with pytest.raises(ParseError):
        WeightedOrientedGraph.load(str(tmp_path / 'missing.json'))
    with pytest.raises(ParseError, match='edges'):
        WeightedOrientedGraph.from_dict({'vertices': []})

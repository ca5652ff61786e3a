import pytest

from woideals.errors import CapExceededError, GraphError
from woideals.limits import Limits
from woideals.models.graph import WeightedOrientedGraph
from woideals.models.ideal import MonomialIdeal, intersect_all
from woideals.seeders import pentagon_all_heavy
from woideals.services.covers import (enumerate_covers, enumerate_strong_covers, has_minimal_strong_property,
                                      irreducible_decomposition, irreducible_ideal, is_strong,
                                      is_total_cover_strong, is_vertex_cover, minimal_covers_underlying,
                                      partition_L)
from woideals.services.families import make_cycle, make_path, make_star


def test_is_vertex_cover(square):
    assert is_vertex_cover(square, ['x1', 'x3'])
    assert not is_vertex_cover(square, ['x1'])
    with pytest.raises(GraphError):
        is_vertex_cover(square, ['x7'])


def test_partition_of_a_non_minimal_strong_cover(square):
    partition = partition_L(square, ['x4', 'x3', 'x2'])
    assert partition.cover == ('x2', 'x3', 'x4')
    assert partition.l1 == ('x4',)
    assert partition.l2 == ('x2',)
    assert partition.l3 == ('x3',)
    assert not partition.is_minimal
    assert partition.is_strong
    assert is_strong(square, partition)


def test_partition_of_a_minimal_cover(square):
    partition = partition_L(square, ['x1', 'x3'])
    assert partition.l1 == ('x1', 'x3')
    assert partition.l2 == partition.l3 == ()
    assert partition.is_minimal and partition.is_strong


def test_cover_without_weighted_in_neighbour_is_not_strong(square):
    partition = partition_L(square, ['x1', 'x2', 'x4'])
    assert partition.l3 == ('x1',)
    assert not partition.is_strong
    assert not is_strong(square, partition)


def test_partition_rejects_non_covers(square):
    with pytest.raises(GraphError):
        partition_L(square, ['x1'])


@pytest.mark.parametrize('w2', [2, 3])
def test_strong_cover_census(w2):
    census = enumerate_strong_covers(make_cycle(4, (1, w2, 1, 1)))
    assert [p.cover for p in census.strong_covers] == [('x1', 'x3'), ('x2', 'x4'), ('x2', 'x3', 'x4')]
    assert [p.cover for p in census.maximal()] == [('x1', 'x3'), ('x2', 'x3', 'x4')]
    assert census.maximal_groups == ((0, (0,)), (2, (1, 2)))


def test_non_strong_covers_are_listed_in_canonical_order(square):
    covers = enumerate_covers(square)
    assert [p.cover for p in covers] == [
        ('x1', 'x3'), ('x2', 'x4'),
        ('x1', 'x2', 'x3'), ('x1', 'x2', 'x4'), ('x1', 'x3', 'x4'), ('x2', 'x3', 'x4'),
        ('x1', 'x2', 'x3', 'x4'),
    ]
    assert [p.is_strong for p in covers] == [True, True, False, False, False, True, False]


def test_minimal_implies_strong_and_empty_l3(pentagon):
    for partition in enumerate_covers(pentagon):
        assert partition.is_minimal == (not partition.l3)
        if partition.is_minimal:
            assert partition.is_strong


def test_total_cover_strong(square):
    assert not is_total_cover_strong(square)
    assert is_total_cover_strong(pentagon_all_heavy())
    census = enumerate_strong_covers(pentagon_all_heavy())
    assert census.maximal()[0].cover == ('x1', 'x2', 'x3', 'x4', 'x5')


def test_minimal_strong_property(square):
    assert not has_minimal_strong_property(square)
    assert has_minimal_strong_property(make_cycle(4))


def test_minimal_covers_match_networkx(square, pentagon):
    for graph in (square, pentagon):
        mine = {p.vertices for p in enumerate_covers(graph) if p.is_minimal}
        assert mine == minimal_covers_underlying(graph)


def test_irreducible_ideals(square):
    universe = square.universe
    assert irreducible_ideal(square, partition_L(square, ['x2', 'x3', 'x4'])).gens == \
        MonomialIdeal.parse(universe, '(x2^2, x3, x4)').gens
    assert irreducible_ideal(square, partition_L(square, ['x1', 'x3'])).to_text() == '(x1, x3)'
    radical = irreducible_ideal(square, partition_L(square, ['x2', 'x3', 'x4'])).radical()
    assert radical.gens == MonomialIdeal.of_variables(universe, ['x2', 'x3', 'x4']).gens


def test_decomposition_recovers_edge_ideal(square, pentagon, heavy_second_path):
    for graph in (square, pentagon, heavy_second_path):
        components = irreducible_decomposition(graph)
        recovered = intersect_all(graph.universe, [ideal for _, ideal in components])
        assert recovered.gens == graph.edge_ideal().gens
    assert [p.cover for p, _ in irreducible_decomposition(square)] == \
        [('x1', 'x3'), ('x2', 'x4'), ('x2', 'x3', 'x4')]



def test_single_edge_decomposition():
    graph = WeightedOrientedGraph.build(['x1', 'x2'], [1, 2], [('x1', 'x2')])
    components = irreducible_decomposition(graph)
    assert [(p.cover, ideal.to_text()) for p, ideal in components] == [(('x1',), '(x1)'), (('x2',), '(x2^2)')]
    assert intersect_all(graph.universe, [ideal for _, ideal in components]).to_text() == '(x1*x2^2)'


def test_star_with_weighted_hub_pointing_out():
    # x0 -> x1, x0 -> x2, x3 -> x0 with the hub weighted.
    star = make_star(3, (2, 3, 1, 1), orientation='explicit:++-')
    census = enumerate_strong_covers(star)
    assert [p.cover for p in census.strong_covers] == [('x0',), ('x0', 'x1', 'x2'), ('x1', 'x2', 'x3')]
    assert irreducible_ideal(star, partition_L(star, ['x1', 'x2', 'x3'])).to_text() == '(x2, x3, x1^3)'
    partition = partition_L(star, ['x0', 'x1', 'x2'])
    assert partition.l2 == ('x0',)
    assert partition.l3 == ('x1', 'x2')


def test_cover_cap():
    long_path = make_path(30)
    with pytest.raises(CapExceededError, match='--allow-large'):
        enumerate_covers(long_path)
    with pytest.raises(CapExceededError):
        enumerate_covers(make_cycle(5), Limits(cover_cap=4))
    assert enumerate_covers(make_cycle(5), Limits(cover_cap=4).lifted())

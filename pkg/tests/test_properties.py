"""
Property-based checks of the monomial and ideal laws and of the cover and
power invariants on random weighted oriented graphs.
"""
import numpy as np
from hypothesis import given, settings, strategies as st

from woideals.models.ideal import MonomialIdeal
from woideals.models.monomial import Monomial, VariableUniverse
from woideals.services.families import random_graph
from woideals.services.sweep import oracle_checks
from woideals.services.symbolic import ordinary_power, symbolic_power_grouped, symbolic_power_localized

UNIVERSE = VariableUniverse(('x1', 'x2', 'x3', 'x4'))

monomials = st.tuples(*[st.integers(min_value=0, max_value=3)] * 4).map(lambda exps: Monomial(UNIVERSE, exps))
ideals = st.lists(monomials, min_size=1, max_size=5).map(lambda gens: MonomialIdeal.minimalize(UNIVERSE, gens))
seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


@given(monomials, monomials)
def test_lcm_is_the_least_common_multiple(a, b):
    m = a.lcm(b)
    assert m == b.lcm(a)
    assert a.divides(m) and b.divides(m)
    assert m.divides(a * b)


@given(monomials)
def test_text_form_parses_back(m):
    assert Monomial.parse(UNIVERSE, m.to_text()) == m


@given(ideals)
def test_minimal_generators_form_an_antichain(ideal):
    assert list(ideal.gens) == sorted(ideal.gens, key=Monomial.sort_key)
    for f in ideal.gens:
        assert not any(g != f and g.divides(f) for g in ideal.gens)
    assert MonomialIdeal.minimalize(UNIVERSE, ideal.gens).gens == ideal.gens


@given(ideals, ideals)
def test_intersection_laws(i, j):
    meet = i.intersect(j)
    assert meet.gens == j.intersect(i).gens
    assert meet.is_subset(i) and meet.is_subset(j)
    assert i.product(j).is_subset(meet)
    assert i.intersect(i).gens == i.gens


@given(ideals, ideals, ideals)
@settings(max_examples=50)
def test_intersection_is_associative(i, j, k):
    assert i.intersect(j).intersect(k).gens == i.intersect(j.intersect(k)).gens


@given(ideals, monomials)
def test_membership_agrees_with_sum(ideal, m):
    assert ideal.contains(m) == (ideal.sum(MonomialIdeal.minimalize(UNIVERSE, [m])).gens == ideal.gens)


@given(ideals)
def test_radical_is_idempotent(ideal):
    assert ideal.radical().radical().gens == ideal.radical().gens
    assert ideal.is_subset(ideal.radical())


@given(seeds, st.integers(min_value=2, max_value=5))
@settings(max_examples=25, deadline=None)
def test_random_graph_invariants(seed, n):
    graph = random_graph(np.random.default_rng(seed), n)
    checks = oracle_checks(graph, 2)
    assert all(checks.values()), checks


@given(seeds, st.integers(min_value=2, max_value=5), st.integers(min_value=1, max_value=3))
@settings(max_examples=25, deadline=None)
def test_symbolic_power_pipelines_agree(seed, n, s):
    graph = random_graph(np.random.default_rng(seed), n)
    grouped = symbolic_power_grouped(graph, s)
    assert grouped.gens == symbolic_power_localized(graph, s).gens
    assert ordinary_power(graph, s).is_subset(grouped)


@given(st.lists(monomials, min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_minimalize_ignores_input_order(gens, random):
    shuffled = list(gens)
    random.shuffle(shuffled)
    assert MonomialIdeal.minimalize(UNIVERSE, shuffled).gens == MonomialIdeal.minimalize(UNIVERSE, gens).gens


@given(monomials, monomials, monomials)
def test_divisibility_is_a_partial_order(a, b, c):
    assert a.divides(a)
    if a.divides(b) and b.divides(a):
        assert a == b
    if a.divides(b) and b.divides(c):
        assert a.divides(c)


weights = st.fixed_dictionaries({}, optional={name: st.integers(min_value=1, max_value=3) for name in UNIVERSE.names})
subsets = st.sets(st.sampled_from(UNIVERSE.names))


@given(monomials, monomials, weights)
def test_phi_is_multiplicative(a, b, w):
    assert (a * b).phi(w) == a.phi(w) * b.phi(w)


@given(monomials, monomials, subsets)
def test_substitution_is_multiplicative(a, b, keep):
    assert (a * b).restrict(keep) == a.restrict(keep) * b.restrict(keep)


@given(ideals, st.integers(min_value=1, max_value=2), st.integers(min_value=1, max_value=2))
@settings(max_examples=50, deadline=None)
def test_powers_add(ideal, a, b):
    assert ideal.power(a).product(ideal.power(b)).gens == ideal.power(a + b).gens


@given(ideals, ideals)
def test_radical_commutes_with_intersection(i, j):
    assert i.intersect(j).radical().gens == i.radical().intersect(j.radical()).gens

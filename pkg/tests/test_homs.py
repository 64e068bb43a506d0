from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import simple_graphs, target_graphs
from swaptrick import (InvalidParameter, ResourceLimit, StateSystem, TargetGraph, complete_bipartite,
                       complete_graph, count_hom, count_hom_complete_bipartite, count_hom_surjective,
                       count_hom_weighted, count_states, cycle_graph, disjoint_double, empty_graph,
                       is_homomorphism, iter_homs)
from swaptrick.homs import as_weights

H1 = TargetGraph.from_edges(2, [(0, 0), (0, 1)])
TWO_LOOPS = TargetGraph.from_edges(2, [(0, 0), (1, 1)])
weights = st.lists(st.fractions(min_value=0, max_value=3, max_denominator=4), min_size=4, max_size=4)


def test_examples():
    assert count_hom(complete_bipartite(1, 1), H1) == 3
    assert count_hom(cycle_graph(3), TWO_LOOPS) == 2
    assert count_hom(cycle_graph(5), complete_graph(3)) == 30


@given(simple_graphs(max_n=6), target_graphs(max_n=4))
def test_count_matches_enumeration(g, h):
    assert count_hom(g, h) == oracles.hom_count(g, h)


@given(simple_graphs(max_n=5), target_graphs(max_n=3), weights)
def test_weighted_matches_enumeration(g, h, lam):
    lam = lam[:h.n]
    assert count_hom_weighted(g, h, lam) == oracles.hom_weighted(g, h, lam)


@given(simple_graphs(max_n=5), target_graphs(max_n=4))
def test_disjoint_double_squares(g, h):
    assert count_hom(disjoint_double(g), h) == count_hom(g, h) ** 2


@given(simple_graphs(min_n=2, max_n=5), target_graphs(max_n=4), st.data())
def test_adding_an_edge_never_increases(g, h, data):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing:
        return
    extra = data.draw(st.sampled_from(missing))
    bigger = type(g).from_edges(g.n, g.edges() + [extra])
    assert count_hom(bigger, h) <= count_hom(g, h)


def test_weighted_examples():
    g = complete_bipartite(1, 1)
    assert count_hom_weighted(g, H1) == 3
    assert count_hom_weighted(empty_graph(1), H1, [Fraction(2, 3), 5]) == Fraction(17, 3)
    assert count_hom_weighted(g, H1, [1, Fraction(7, 2)]) == 1 + 2 * Fraction(7, 2)
    with pytest.raises(InvalidParameter):
        count_hom_weighted(g, H1, [1, -1])


def test_complete_bipartite_examples():
    assert count_hom_complete_bipartite(2, 2, H1) == 7
    assert count_hom_complete_bipartite(3, 3, H1) == 15
    assert count_hom_complete_bipartite(1, 1, complete_graph(3)) == 6


@given(st.integers(1, 3), st.integers(1, 3), target_graphs(max_n=4), weights)
def test_complete_bipartite_fast_path(a, b, h, lam):
    lam = lam[:h.n]
    assert count_hom_complete_bipartite(a, b, h, lam) == count_hom_weighted(complete_bipartite(a, b), h, lam)


def test_surjective_examples():
    k3 = cycle_graph(3)
    assert count_hom_surjective(k3, 3) == 6
    assert count_hom_surjective(k3, 2) == 0
    assert count_hom_surjective(cycle_graph(5), 3) == 30


@given(simple_graphs(max_n=5))
def test_surjective_expansion(g):
    surj = [count_hom_surjective(g, i) for i in range(g.n + 1)]
    for q in range(1, g.n + 3):
        assert sum(s * comb(q, i) for i, s in enumerate(surj)) == count_hom(g, complete_graph(q))
    assert surj == oracles.surjective_by_partitions(g, g.n)


def test_state_systems():
    s = StateSystem((0, 1), (1, 1), 1)
    assert count_states(cycle_graph(4), s) == 7
    lvl = StateSystem(tuple(range(4)), (1,) * 4, 3)
    assert count_states(cycle_graph(3), lvl) == oracles.lattice_points(cycle_graph(3), 3)
    assert count_states(complete_bipartite(1, 1), StateSystem((1,), (1,), 0)) == 0
    with pytest.raises(InvalidParameter):
        StateSystem((), (), 0)


def test_budget_is_enforced():
    with pytest.raises(ResourceLimit):
        count_hom(cycle_graph(12), complete_graph(6), budget=10)


@given(simple_graphs(max_n=5), target_graphs(max_n=3))
def test_iter_homs_lists_exactly_the_homomorphisms(g, h):
    found = list(iter_homs(g, h))
    assert len(found) == len(set(found)) == oracles.hom_count(g, h)
    assert all(is_homomorphism(g, h, f) for f in found)


def test_large_counts_are_exact():
    assert count_hom(cycle_graph(10), complete_graph(10)) == 9 ** 10 + 9
    assert as_weights(None, 2) == (1, 1)

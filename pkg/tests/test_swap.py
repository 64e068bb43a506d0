from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import simple_graphs, target_graphs
from swaptrick import (InvalidParameter, Mode, NotBipartiteError, PairLabeling, SimpleGraph, TargetGraph,
                       canonical_crossing_set, complete_graph, cycle_graph, empty_graph, has_bsp,
                       is_bipartite, swap, transport, verify_swap_bijection, violated_edges)
from swaptrick.swap import iter_pair_labelings

K4 = complete_graph(4)
H1 = TargetGraph.from_edges(2, [(0, 0), (0, 1)])
# six-vertex source with a disjoint labelling that needs a nontrivial swap
FIG = SimpleGraph.from_edges(6, [(0, 1), (1, 3), (3, 2), (2, 0), (0, 4), (4, 2), (4, 5), (5, 1), (3, 5)])
A, B, C, D = range(4)
FIG_DISJOINT = [(B, A), (C, D), (C, D), (A, A), (A, B), (B, C)]
FIG_CROSSED = [(D, B), (D, B), (A, B), (A, C), (D, C), (D, C)]


def test_violated_edges_examples():
    c5 = cycle_graph(5)
    p = PairLabeling(c5, c5.as_target(), [(i, (i + 1) % 5) for i in range(5)])
    assert violated_edges(p) == frozenset(c5.edges())
    diag = PairLabeling(c5, K4, [(i % 3, i % 3) for i in range(4)] + [(3, 3)], Mode.DISJOINT)
    assert violated_edges(diag) == frozenset()
    fig = PairLabeling(FIG, K4, FIG_DISJOINT, Mode.DISJOINT)
    assert violated_edges(fig) == {(0, 4), (4, 5), (1, 5)}


def test_bsp_examples():
    assert has_bsp(PairLabeling(FIG, K4, FIG_DISJOINT, Mode.DISJOINT))
    crossed = PairLabeling(FIG, K4, FIG_CROSSED, Mode.CROSSED)
    assert not has_bsp(crossed)
    bold = {(0, 1), (1, 5), (4, 5), (0, 4), (0, 2), (2, 3), (3, 5)}
    assert violated_edges(crossed) == bold


def test_mode_is_validated():
    with pytest.raises(InvalidParameter):
        PairLabeling(FIG, K4, FIG_DISJOINT, Mode.CROSSED)
    with pytest.raises(InvalidParameter):
        PairLabeling(FIG, K4, FIG_DISJOINT[:5])


def test_crossing_set_examples():
    g = cycle_graph(4)
    assert canonical_crossing_set(g, []) == frozenset()
    assert canonical_crossing_set(g, [(1, 2)]) == {2}
    path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert canonical_crossing_set(path, path.edges()) == {1}
    with pytest.raises(NotBipartiteError) as err:
        canonical_crossing_set(cycle_graph(3), cycle_graph(3).edges())
    assert len(err.value.odd_cycle) == 3


@given(simple_graphs(max_n=6), st.data())
def test_crossing_set_is_lexicographically_least(g, data):
    edges = [e for e in g.edges() if data.draw(st.booleans())]
    f = SimpleGraph.from_edges(g.n, edges)
    if not is_bipartite(f):
        return
    w = canonical_crossing_set(g, edges)
    valid = [m for m in range(1 << g.n)
             if all(((m >> u) & 1) != ((m >> v) & 1) for u, v in edges)
             and all(f.degree(v) or not (m >> v) & 1 for v in range(g.n))]
    # least characteristic vector read from vertex 0: compare reversed bit strings
    best = min(valid, key=lambda m: [(m >> v) & 1 for v in range(g.n)])
    assert w == {v for v in range(g.n) if (best >> v) & 1}


def test_six_vertex_swap():
    p = PairLabeling(FIG, K4, FIG_DISJOINT, Mode.DISJOINT)
    w = canonical_crossing_set(FIG, violated_edges(p))
    assert w == {1, 4}
    q = transport(p)
    assert q.mode is Mode.CROSSED and q.satisfies(Mode.CROSSED)
    assert q.labels[1] == (D, C) and q.labels[4] == (B, A)
    assert transport(q) == p
    assert swap(p, []).labels == p.labels
    assert swap(swap(p, w), w).labels == p.labels


def test_transport_without_violations_only_flips_mode():
    p = PairLabeling(cycle_graph(3), K4, [(0, 0), (1, 1), (2, 2)], Mode.DISJOINT)
    q = transport(p)
    assert q.labels == p.labels and q.mode is Mode.CROSSED


def test_transport_rejects_non_bipartite_violations():
    with pytest.raises(NotBipartiteError):
        transport(PairLabeling(FIG, K4, FIG_CROSSED, Mode.CROSSED))


def _random_instances(count, seed=7):
    rng = random.Random(seed)
    made = 0
    while made < count:
        n, k = rng.randint(1, 5), rng.randint(1, 3)
        g = SimpleGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        h = TargetGraph.from_edges(k, [(u, v) for u in range(k) for v in range(u, k) if rng.random() < 0.6])
        mode = rng.choice([Mode.DISJOINT, Mode.CROSSED])
        options = list(iter_pair_labelings(g, h, mode))
        if not options:
            continue
        p = PairLabeling(g, h, rng.choice(options), mode)
        if has_bsp(p):
            made += 1
            yield p


def test_transport_roundtrip_on_random_instances():
    for p in _random_instances(200):
        q = transport(p)
        assert q.satisfies(q.mode) and has_bsp(q)
        assert violated_edges(q) == violated_edges(p)
        assert transport(q) == p


@given(simple_graphs(max_n=5), target_graphs(max_n=3), st.data())
def test_swap_keeps_violated_edges(g, h, data):
    labels = [(data.draw(st.integers(0, h.n - 1)), data.draw(st.integers(0, h.n - 1))) for _ in range(g.n)]
    w = [v for v in range(g.n) if data.draw(st.booleans())]
    p = PairLabeling(g, h, labels)
    assert violated_edges(swap(p, w)) == violated_edges(p)
    assert sorted(violated_edges(p)) == oracles.violated(g, h, labels)


def test_bijection_examples():
    r = verify_swap_bijection(cycle_graph(3), H1)
    assert r.passed and r.disjoint_bsp == r.disjoint_total == 16
    r = verify_swap_bijection(cycle_graph(3), cycle_graph(5).as_target())
    assert r.passed and r.disjoint_bsp == r.crossed_bsp
    r = verify_swap_bijection(empty_graph(1), K4)
    assert r.passed and r.disjoint_total == r.crossed_total == 16


@given(simple_graphs(max_n=3), target_graphs(max_n=3))
def test_bijection_counts_match_oracle(g, h):
    r = verify_swap_bijection(g, h)
    assert r.passed
    assert r.disjoint_bsp == oracles.bsp_count(g, h, crossed=False)
    assert r.crossed_bsp == oracles.bsp_count(g, h, crossed=True)
    if is_bipartite(g):
        assert r.disjoint_total == r.crossed_total == r.disjoint_bsp


def test_serialisation_roundtrip():
    p = PairLabeling(FIG, K4, FIG_DISJOINT, Mode.DISJOINT)
    assert PairLabeling.from_lines(FIG, K4, p.to_lines(), Mode.DISJOINT) == p


def test_any_valid_crossing_set_moves_between_modes():
    for p in _random_instances(60, seed=11):
        viol = sorted(violated_edges(p))
        for m in range(1 << p.g.n):
            if all(((m >> u) & 1) != ((m >> v) & 1) for u, v in viol):
                q = swap(p, [v for v in range(p.g.n) if (m >> v) & 1])
                assert q.satisfies(p.mode.flipped())

"""Acceptance checks, one test per criterion.

Each test records a PASS/FAIL line (with its runtime against the allowed
budget) that is printed in the terminal summary.
"""

from __future__ import annotations

import functools
import json
import time
from fractions import Fraction
from math import comb, factorial

import pytest

import oracles
from conftest import ACCEPTANCE, GRAPHS
from swaptrick import (TargetGraph, build_bst_graph, canonical_form, certify_target, check_gt, check_wgt,
                       complete_bipartite, complete_graph, count_hom_weighted, cycle_graph, direct_target_check,
                       ehrhart_interpolate, enumerate_graphs, format_graph, enumerate_threshold_classes,
                       find_alternating_four_circuit, is_bipartite, is_isomorphic, lattice_count, odd_girth,
                       parse_graph, recognize_threshold, regular_corpus, scan_corpus,
                       stab_volume_complete_bipartite, surjective_profile_pair, threshold_graph,
                       verify_coefficient_compare, verify_swap_bijection)
from swaptrick.cli import main
from swaptrick.graphs import bipartite_double, disjoint_double

H1 = TargetGraph.from_edges(2, [(0, 0), (0, 1)])
TWO_LOOPS = TargetGraph.from_edges(2, [(0, 0), (1, 1)])


def criterion(key, title, limit):
    """Time the wrapped check, record its line, and fail it if it runs over ``limit`` seconds."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except AssertionError as e:
                msg = str(e).splitlines()[0] if str(e) else "assertion failed"
                ACCEPTANCE[key] = (False, time.perf_counter() - start, limit, title, msg)
                raise
            secs = time.perf_counter() - start
            ok = secs <= limit
            ACCEPTANCE[key] = (ok, secs, limit, title, detail if ok else f"over time budget; {detail}")
            assert ok, f"took {secs:.1f}s, budget {limit}s"
        return run
    return wrap


def _is_union_of_kdd(g, d):
    return all(len(c) == 2 * d and is_bipartite(g.induced(c)) for c in g.components())


@criterion(1, "independent sets of regular graphs, N<=8, d<=3", 60)
def test_independent_set_bound_on_regular_corpus():
    corpus = regular_corpus(8, 3)
    # isomorphism classes: one perfect matching per even N; cycle unions; 1, 2 and 6 cubic graphs
    per_degree = [sum(g.regular_degree() == d for g in corpus) for d in (1, 2, 3)]
    assert per_degree == [4, 10, 9], per_degree
    equalities = 0
    for g in corpus:
        d = g.regular_degree()
        r = check_gt(g, H1)
        assert r.lhs == oracles.independent_sets(g)
        assert r.rhs_base == 2 ** (d + 1) - 1
        assert r.lhs ** (2 * d) <= r.rhs_base ** g.n, f"inequality fails on {r.graph_id}"
        assert r.holds
        assert r.equality == _is_union_of_kdd(g, d), f"equality mismatch on {r.graph_id}"
        equalities += r.equality
    return f"{len(corpus)} graphs hold, {equalities} equalities, all unions of K_dd"


@criterion(2, "two separate loops: triangle counterexample", 1)
def test_two_loops_triangle_counterexample(capsys):
    fails = [r for r in scan_corpus(TWO_LOOPS, 4, 2) if not r.holds]
    assert [parse_graph(r.witness) == cycle_graph(3) for r in fails] == [True]
    assert (fails[0].cross_power_lhs, fails[0].cross_power_rhs) == (16, 8)
    code = main(["gt-scan", "--target", str(GRAPHS / "two_loops.graph"), "--nmax", "4", "--dmax", "2",
                 "--format", "json"])
    recs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    bad = [r for r in recs if r["verdict"] == "FAILS"]
    assert code == 1 and len(bad) == 1
    assert (bad[0]["cross_power_lhs"], bad[0]["cross_power_rhs"]) == ("16", "8")
    return "FAILS at K_3, 16 vs 8, exit code 1"


def _small_sources():
    return [g for n in range(1, 5) for g in enumerate_graphs(n)]


def _looped_targets():
    return [h for n in range(1, 5) for h in enumerate_graphs(n, loops=True)]


def _disagreements(targets, sources):
    return [h for h in targets
            if certify_target(h).is_target != (direct_target_check(h, sources) is None)]


@pytest.mark.xfail(strict=True, reason="a 4-vertex target needs a 5-cycle source to expose it; see README")
@criterion(3, "certificate vs direct check, sources on <=4 vertices", 300)
def test_certificate_matches_direct_check():
    targets = enumerate_threshold_classes(8) + _looped_targets()
    bad = _disagreements(targets, _small_sources())
    assert not bad, f"{len(bad)} of {len(targets)} targets disagree: " + \
        "; ".join(format_graph(h).replace("\n", " | ").strip(" |") for h in bad)
    return f"{len(targets)} targets agree"


@criterion("3b", "certificate vs direct check, sources extended by C_5", 300)
def test_certificate_matches_direct_check_with_odd_cycle_sources():
    targets = _looped_targets()
    longest = max(odd_girth(build_bst_graph(h).graph) for h in targets if not certify_target(h).is_target)
    assert longest == 5
    sources = _small_sources() + [cycle_graph(k) for k in range(5, longest + 1, 2)]
    bad = _disagreements(targets, sources)
    assert not bad, f"{len(bad)} targets disagree"
    return f"{len(targets)} looped targets agree (threshold targets covered by criterion 3)"


@criterion(4, "no alternating 4-circuit iff threshold, looped H on <=5 vertices", 60)
def test_threshold_characterisation():
    count = 0
    for n in range(1, 6):
        for h in enumerate_graphs(n, loops=True):
            count += 1
            check = recognize_threshold(h)
            assert (find_alternating_four_circuit(h) is None) == bool(check)
            assert oracles.has_alternating_four_circuit(h) != bool(check)
            if check:
                rep = check.representation
                assert is_isomorphic(threshold_graph(rep.weights, rep.t), h)
    return f"{count} looped graphs"


@criterion(5, "threshold classes, n<=8", 10)
def test_threshold_class_enumeration():
    for n in range(0, 9):
        found = enumerate_threshold_classes(n)
        assert len(found) == 2 ** n
        assert len({canonical_form(h) for h in found}) == 2 ** n
        for k in range(n + 1):
            assert sum(h.num_loops == k for h in found) == comb(n, k)
    return "2^n pairwise non-isomorphic classes, binom(n,k) with k loops"


@criterion(6, "swap bijection, G on <=4 and H on <=3 vertices", 120)
def test_swap_bijection_small_pairs():
    pairs = 0
    for g in _small_sources():
        for h in (h for n in range(1, 4) for h in enumerate_graphs(n, loops=True)):
            r = verify_swap_bijection(g, h)
            assert r.passed, f"bijection fails for {g.edges()} -> {h.edges()}"
            pairs += 1
    return f"{pairs} pairs"


def _brute_profiles(g):
    top = 2 * g.n
    if g.n <= 5:
        return (tuple(oracles.surjective_by_partitions(disjoint_double(g), top)),
                tuple(oracles.surjective_by_partitions(bipartite_double(g), top)))
    # cycles: chromatic values from the closed form, then the binomial transform
    k = g.n
    disjoint = [oracles.cycle_chromatic(k, q) ** 2 for q in range(top + 1)]
    crossed = [oracles.cycle_chromatic(2 * k, q) for q in range(top + 1)]
    return tuple(oracles.surjective_from_values(disjoint)), tuple(oracles.surjective_from_values(crossed))


@criterion(7, "surjective colouring profiles of the doubled graphs", 600)
def test_coefficient_comparison():
    cases = [(cycle_graph(3), 3), (cycle_graph(5), 5), (complete_graph(4).as_simple(), 3), (cycle_graph(7), 7)]
    for g, girth in cases:
        disjoint, crossed = _brute_profiles(g)
        assert surjective_profile_pair(g) == (disjoint, crossed)
        k = 2 * g.n - girth + 1
        assert all(disjoint[i] == crossed[i] for i in range(k + 1, 2 * g.n + 1))
        assert crossed[k] > disjoint[k]
        r = verify_coefficient_compare(g)
        assert r.passed and r.strict_index == k
    return "K_3, C_5, K_4, C_7 against brute force"


@criterion(8, "volume of the stable set polytope", 60)
def test_bipartite_volumes():
    for a, b in [(1, 1), (1, 2), (2, 2), (2, 3)]:
        expected = Fraction(factorial(a) * factorial(b), factorial(a + b))
        assert stab_volume_complete_bipartite(a, b) == expected
        assert ehrhart_interpolate(complete_bipartite(a, b)).leading == expected
    assert ehrhart_interpolate(cycle_graph(3)).leading == Fraction(1, 4)
    return "K_ab closed form and 1/4 for K_3"


@criterion(9, "lattice-point inequality, N<=6, d<=3, n<=3", 120)
def test_lattice_inequality():
    corpus = regular_corpus(6, 3)
    checked = 0
    for g in corpus:
        d = g.regular_degree()
        for n in (1, 2, 3):
            lhs, rhs = lattice_count(g, n), lattice_count(complete_bipartite(d, d), n)
            assert lhs == oracles.lattice_points(g, n)
            assert lhs ** (2 * d) <= rhs ** g.n
            checked += 1
    return f"{checked} (graph, n) cases"


@criterion(10, "unit weights and the weighted complete bipartite closed form", 60)
def test_weighted_consistency():
    corpus = regular_corpus(6, 3)
    targets = [H1, TWO_LOOPS, complete_graph(3)] + enumerate_threshold_classes(3)
    for h in targets:
        for g in corpus:
            assert check_wgt(g, h, [1] * h.n).to_record() == check_gt(g, h).to_record()
    for d in range(1, 5):
        for lam in (Fraction(1, 2), Fraction(1), Fraction(2)):
            assert count_hom_weighted(complete_bipartite(d, d), H1, [1, lam]) == 2 * (1 + lam) ** d - 1
    return f"{len(corpus) * len(targets)} verdicts bit-match; closed form for d<=4"

"""Move a homomorphism from two copies of G onto the double cover by swapping labels."""

from __future__ import annotations

from swaptrick import (Mode, PairLabeling, SimpleGraph, canonical_crossing_set, complete_graph,
                       transport, verify_swap_bijection, violated_edges)

g = SimpleGraph.from_edges(6, [(0, 1), (1, 3), (3, 2), (2, 0), (0, 4), (4, 2), (4, 5), (5, 1), (3, 5)])
k4 = complete_graph(4)
p = PairLabeling(g, k4, [(1, 0), (2, 3), (2, 3), (0, 0), (0, 1), (1, 2)], Mode.DISJOINT)
bad = violated_edges(p)
print("violated edges:", sorted(bad))
print("swap set:", sorted(canonical_crossing_set(g, bad)))
q = transport(p)
print("after swap:", q.labels, q.mode.value, "valid:", q.satisfies(Mode.CROSSED))
print("back again equals original:", transport(q) == p)

r = verify_swap_bijection(g, k4.induced([0, 1, 2]))
print("bijection on the swapping-property sets:", r.disjoint_bsp, "=", r.crossed_bsp, "passed:", r.passed)

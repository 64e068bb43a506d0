"""Independent sets in small regular graphs never beat disjoint copies of K_{d,d}."""

from __future__ import annotations

from swaptrick import TargetGraph, regular_corpus, scan_corpus

# vertex 1 is "in the set", vertex 0 carries a loop: homomorphisms are independent sets
H1 = TargetGraph.from_edges(2, [(0, 0), (0, 1)])

for r in scan_corpus(H1, 8, 3):
    mark = "equality" if r.equality else ""
    print(f"N={r.n} d={r.d} i(G)={str(r.lhs):<4} bound base {str(r.rhs_base):<3} {r.verdict.value} {mark}")
print(len(regular_corpus(8, 3)), "regular graphs checked")

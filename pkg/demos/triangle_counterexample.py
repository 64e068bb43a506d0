"""Two separate looped vertices: the triangle has more homomorphisms than the bound allows."""

from __future__ import annotations

from swaptrick import TargetGraph, check_gt, check_strongly_gt, cycle_graph

two_loops = TargetGraph.from_edges(2, [(0, 0), (1, 1)])
r = check_gt(cycle_graph(3), two_loops)
print("hom(K3, H) =", r.lhs, " hom(K22, H) =", r.rhs_base)
print("cross powers:", r.cross_power_lhs, "vs", r.cross_power_rhs, "->", r.verdict.value)
s = check_strongly_gt(cycle_graph(3), two_loops)
print("two copies vs double cover:", s.disjoint, "vs", s.crossed)

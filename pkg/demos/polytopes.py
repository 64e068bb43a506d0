"""Lattice points in dilated stable set polytopes and their volumes."""

from __future__ import annotations

from swaptrick import (check_volume_gt, complete_bipartite, cycle_graph, ehrhart_interpolate,
                       stab_volume_complete_bipartite)

for a, b in [(1, 1), (2, 2), (2, 3)]:
    q = ehrhart_interpolate(complete_bipartite(a, b))
    print(f"K_{a},{b}: volume {q.leading} (closed form {stab_volume_complete_bipartite(a, b)})")
tri = ehrhart_interpolate(cycle_graph(3))
print("triangle: even part", [str(c) for c in tri.even], "odd part", [str(c) for c in tri.odd], "volume", tri.leading)
r = check_volume_gt(cycle_graph(3))
print("volume inequality for the triangle:", r.cross_power_lhs, "<=", r.cross_power_rhs, r.verdict.value)

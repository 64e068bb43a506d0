"""Proper colourings of the two doubled graphs agree on many colours and split at the odd girth."""

from __future__ import annotations

from swaptrick import cycle_graph, dominance_certificate, surjective_profile_pair, verify_coefficient_compare

g = cycle_graph(5)
disjoint, crossed = surjective_profile_pair(g)
for i, (a, b) in enumerate(zip(disjoint, crossed)):
    print(f"{i:2d} colours: two copies {a:>10}  double cover {b:>10}")
r = verify_coefficient_compare(g)
print("odd girth", r.odd_girth, "first strict index", r.strict_index, "passed", r.passed)
cert = dominance_certificate(g, range(2, 12))
print("leading sign of the difference:", cert.top_sign)
for q, v in cert.evaluations:
    print(f"  q={q}: difference {v}")

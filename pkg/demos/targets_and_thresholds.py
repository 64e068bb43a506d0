"""Which targets admit the swap, and the threshold graphs that all do."""

from __future__ import annotations

from swaptrick import (TargetGraph, certify_target, cycle_graph, enumerate_threshold_classes,
                       find_bsp_counterexample, recognize_threshold)

for h in enumerate_threshold_classes(3):
    rep = recognize_threshold(h).representation
    print("loops", [int(h.has_loop(v)) for v in range(3)], "weights", [str(w) for w in rep.weights],
          "t", rep.t, certify_target(h).verdict.value)

fan = TargetGraph.from_edges(4, [(0, 3), (1, 2), (1, 3), (2, 3), (3, 3)])
cert = certify_target(fan)
print("fan:", cert.verdict.value, "odd cycle of pairs", cert.odd_cycle)
found = find_bsp_counterexample(fan, cycle_graph(5))
print("a 5-cycle source realises it:", found.labels)

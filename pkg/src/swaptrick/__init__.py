"""Exact homomorphism counting and the bipartite swapping trick."""

from __future__ import annotations

from .coloring import (BinomialBasisPolynomial, CoefficientComparison, CycleBoundReport,
                       DominanceCertificate, chromatic_binomial, color_partitions,
                       dominance_certificate, odd_cycle_coloring, simple_cycles,
                       surjective_counts, surjective_profile_pair, termwise_violations,
                       verify_coefficient_compare, verify_cycle_violation_bounds)
from .enumerate import (canonical_form, canonical_graph, canonical_labeling, enumerate_graphs,
                        enumerate_regular, is_isomorphic, regular_corpus)
from .errors import (GraphFormatError, InternalConsistencyError, InvalidParameter,
                     NotBipartiteError, ResourceLimit, SwaptrickError)
from .graphs import (DoubledVertex, Graph, SimpleGraph, TargetGraph, bipartite_double,
                     complete_bipartite, complete_graph, cycle_graph, disjoint_double,
                     disjoint_union, empty_graph, format_graph, is_bipartite, odd_girth,
                     parse_graph, path_graph, read_graph, write_graph)
from .gt import (GtReport, GtVerdict, StrongGtReport, check_gt, check_strongly_gt, check_wgt,
                 scan_corpus)
from .homs import (StateSystem, count_hom, count_hom_complete_bipartite, count_hom_surjective,
                   count_hom_weighted, count_states, is_homomorphism, iter_homs)
from .polytope import (EhrhartQuasiPolynomial, RiemannReport, SampledWeightFunction,
                       check_volume_gt, ehrhart_interpolate, estab_volume, ladder, lattice_count,
                       stab_volume_complete_bipartite, weighted_riemann_check)
from .swap import (Mode, PairLabeling, SwapReport, canonical_crossing_set, has_bsp, swap,
                   transport, verify_swap_bijection, violated_edges)
from .targets import (BstGraph, TargetCertificate, ThresholdCheck, ThresholdRepresentation,
                      Verdict, build_bst_graph, certify_target, direct_target_check,
                      enumerate_threshold_classes, find_alternating_four_circuit,
                      find_bsp_counterexample, recognize_threshold, threshold_graph)

__version__ = "0.1.0"

"""Bipartite swapping targets and threshold graphs.

``H`` is a swapping target when no homomorphism from a doubled source has a
non-bipartite set of violated edges.  That happens exactly when the pair
graph built by :func:`build_bst_graph` is bipartite, which
:func:`certify_target` decides with a checkable certificate.  Threshold graphs
(no alternating 4-circuit) are the main family of targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import InternalConsistencyError, InvalidParameter, ResourceLimit
from .enumerate import canonical_form
from .homs import iter_homs
from .graphs import Graph, SimpleGraph, TargetGraph, is_bipartite, is_cycle_in, two_color_rows

THRESHOLD_CAP = 16


@dataclass(frozen=True)
class BstGraph:
    """Pair graph on ``V(H) x V(H)``; pair ``(u, v)`` is vertex ``u * base_n + v``."""

    graph: TargetGraph
    base_n: int

    def index(self, u: int, v: int) -> int:
        return u * self.base_n + v

    def pair(self, i: int) -> tuple[int, int]:
        return divmod(i, self.base_n)

    def has_edge(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        return self.graph.has_edge(self.index(*p), self.index(*q))

    def pair_edges(self) -> set[frozenset]:
        """Edges as frozensets of pairs (a loop is a one-element set)."""
        out = set()
        for i in range(self.graph.n):
            for j in range(i, self.graph.n):
                if self.graph.has_edge(i, j):
                    out.add(frozenset((self.pair(i), self.pair(j))))
        return out


def bst_adjacent(h: Graph, p: tuple[int, int], q: tuple[int, int]) -> bool:
    (u, v), (u2, v2) = p, q
    return (h.has_edge(u, u2) and h.has_edge(v, v2)
            and (not h.has_edge(u, v2) or not h.has_edge(u2, v)))


def build_bst_graph(h: Graph) -> BstGraph:
    n = h.n
    rows = [0] * (n * n)
    for u, v in product(range(n), repeat=2):
        i = u * n + v
        for u2 in h.neighbors(u):
            for v2 in h.neighbors(v):
                if not h.has_edge(u, v2) or not h.has_edge(u2, v):
                    rows[i] |= 1 << (u2 * n + v2)
    return BstGraph(TargetGraph(n * n, tuple(rows)), n)


class Verdict(str, Enum):
    TARGET = "TARGET"
    NOT_TARGET = "NOT_TARGET"


@dataclass(frozen=True)
class TargetCertificate:
    """Verdict plus evidence: a 2-colouring of the pair graph or an odd cycle in it.

    ``coloring`` maps each pair to 0 or 1; ``odd_cycle`` lists pairs in cycle order.
    """

    verdict: Verdict
    coloring: dict | None = None
    odd_cycle: tuple[tuple[int, int], ...] | None = None

    @property
    def is_target(self) -> bool:
        return self.verdict is Verdict.TARGET

    def check(self, h: Graph) -> bool:
        """Re-verify the evidence against ``h`` from scratch."""
        if self.is_target:
            if self.coloring is None or len(self.coloring) != h.n * h.n:
                return False
            pairs = list(product(range(h.n), repeat=2))
            return all(self.coloring[p] != self.coloring[q]
                       for p in pairs for q in pairs if bst_adjacent(h, p, q))
        cyc = self.odd_cycle
        if not cyc or len(cyc) % 2 == 0:
            return False
        return all(bst_adjacent(h, cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))

    def to_record(self) -> dict:
        rec: dict = {"verdict": self.verdict.value}
        if self.coloring is not None:
            rec["coloring"] = [[u, v, c] for (u, v), c in sorted(self.coloring.items())]
        if self.odd_cycle is not None:
            rec["odd_cycle"] = [list(p) for p in self.odd_cycle]
        return rec


def certify_target(h: Graph) -> TargetCertificate:
    bst = build_bst_graph(h)
    check = two_color_rows(bst.graph.n, bst.graph.rows)
    if check:
        coloring = {bst.pair(i): c for i, c in enumerate(check.coloring)}
        return TargetCertificate(Verdict.TARGET, coloring=coloring)
    return TargetCertificate(Verdict.NOT_TARGET,
                             odd_cycle=tuple(bst.pair(i) for i in check.odd_cycle))


def is_alternating_four_circuit(h: Graph, quad: Sequence[int]) -> bool:
    a, b, c, d = quad
    return h.has_edge(a, b) and h.has_edge(c, d) and not h.has_edge(b, c) and not h.has_edge(d, a)


def find_alternating_four_circuit(h: Graph) -> tuple[int, int, int, int] | None:
    """Lexicographically first ``(a, b, c, d)`` with ``ab, cd`` edges and ``bc, da`` non-edges."""
    n = h.n
    for a in range(n):
        non_a = [d for d in range(n) if not h.has_edge(d, a)]
        if not non_a:
            continue
        for b in h.neighbors(a):
            for c in range(n):
                if h.has_edge(b, c):
                    continue
                for d in non_a:
                    if h.has_edge(c, d):
                        return (a, b, c, d)
    return None


@dataclass(frozen=True)
class ThresholdRepresentation:
    """Weights ``weights[x]`` and threshold ``t`` with ``xy`` an edge iff ``w_x + w_y <= t``."""

    weights: tuple[Fraction, ...]
    t: Fraction

    def realizes(self, h: Graph) -> bool:
        w, t = self.weights, self.t
        return len(w) == h.n and all(
            h.has_edge(x, y) == (w[x] + w[y] <= t) for x in range(h.n) for y in range(x, h.n))


@dataclass(frozen=True)
class ThresholdCheck:
    """Result of :func:`recognize_threshold`.

    ``order`` is the degree-sorted vertex order that was tested.  On success
    ``representation`` is set; otherwise ``circuit`` is an alternating
    4-circuit.
    """

    order: tuple[int, ...]
    representation: ThresholdRepresentation | None = None
    circuit: tuple[int, int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.representation is not None


def recognize_threshold(h: Graph) -> ThresholdCheck:
    """Decide whether ``h`` is a threshold graph.

    Vertices are sorted by decreasing degree (ties by index) and the
    neighbourhoods are checked to form a decreasing chain.  If they do, the
    adjacency matrix in that order is a staircase; with ``r_i`` the ``i``-th
    row sum (1-based ``i``) the weights ``i - r_i`` and threshold 0 realise
    ``h``.  If the chain breaks at ``v_i, v_j``, a neighbour of ``v_i`` that
    is not a neighbour of ``v_j`` and vice versa give the circuit.
    """
    order = tuple(sorted(range(h.n), key=lambda v: (-h.degree(v), v)))
    for i in range(h.n - 1):
        vi, vj = order[i], order[i + 1]
        if h.rows[vj] & ~h.rows[vi]:
            x = next(iter(set(h.neighbors(vi)) - set(h.neighbors(vj))))
            y = next(iter(set(h.neighbors(vj)) - set(h.neighbors(vi))))
            circuit = (vi, x, vj, y)
            if not is_alternating_four_circuit(h, circuit):
                raise InternalConsistencyError(f"bad circuit witness {circuit}")
            return ThresholdCheck(order, circuit=circuit)
    weights = [Fraction(0)] * h.n
    for i, v in enumerate(order, start=1):
        weights[v] = Fraction(i - h.degree(v))
    rep = ThresholdRepresentation(tuple(weights), Fraction(0))
    if not rep.realizes(h):
        raise InternalConsistencyError("threshold weights do not realise the graph")
    return ThresholdCheck(order, representation=rep)


def threshold_graph(values: Iterable, t) -> TargetGraph:
    """Graph on the multiset ``values`` with ``x ~ y`` iff ``x + y <= t`` (loops when ``2x <= t``)."""
    vals = [Fraction(x) for x in values]
    if not vals:
        raise InvalidParameter("threshold graph needs at least one vertex")
    t = Fraction(t)
    rows = tuple(sum(1 << j for j, y in enumerate(vals) if x + y <= t) for x in vals)
    return TargetGraph(len(vals), rows)


def threshold_from_pattern(looped: Sequence[bool]) -> TargetGraph:
    """Row of vertices; each looped vertex gets a loop and an edge to everything on its right."""
    n = len(looped)
    edges = []
    for i, lp in enumerate(looped):
        if lp:
            edges.append((i, i))
            edges += [(i, j) for j in range(i + 1, n)]
    return TargetGraph.from_edges(n, edges)


def enumerate_threshold_classes(n: int, *, cap: int = THRESHOLD_CAP) -> list[TargetGraph]:
    """All ``2**n`` threshold graphs on ``n`` vertices, one per loop pattern.

    Pattern ``m`` has vertex ``i`` looped iff bit ``n - 1 - i`` of ``m`` is set.
    """
    if n < 0:
        raise InvalidParameter("n must be non-negative")
    if n > cap:
        raise ResourceLimit(f"threshold enumeration capped at {cap} vertices")
    return [threshold_from_pattern([(m >> (n - 1 - i)) & 1 == 1 for i in range(n)])
            for m in range(1 << n)]


@dataclass(frozen=True)
class BspCounterexample:
    """A homomorphism from a doubled source whose violated edges are not bipartite."""

    source: SimpleGraph
    labels: tuple[tuple[int, int], ...]


_MAX_PAIRS = 1 << 28
_BLOCK_CELLS = 1 << 22


def _bipartite_edge_subsets(g: SimpleGraph) -> np.ndarray:
    edges = g.edges()
    ok = np.zeros(1 << len(edges), dtype=bool)
    for mask in range(1 << len(edges)):
        rows = [0] * g.n
        for k, (u, v) in enumerate(edges):
            if (mask >> k) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        ok[mask] = bool(two_color_rows(g.n, rows))
    return ok


def find_bsp_counterexample(h: Graph, g: SimpleGraph) -> BspCounterexample | None:
    """Exhaustively search ``Hom(g ⊔ g, h)`` for an element without the swapping property.

    An element is a pair ``(f, f')`` of homomorphisms ``g -> h``; all pairs
    are examined as ``m x m`` boolean arrays, ``m = hom(g, h)``, in row blocks.
    """
    if g.n == 0:
        return None
    homs = np.array(list(iter_homs(g, h)), dtype=np.intp).reshape(-1, g.n)
    m = len(homs)
    if m * m > _MAX_PAIRS:
        raise ResourceLimit(f"{m}^2 homomorphism pairs exceed the exhaustive-check cap")
    if m == 0:
        return None
    adj = np.array(h.adjacency_matrix(), dtype=bool)
    edges = g.edges()
    ok_subsets = _bipartite_edge_subsets(g)
    dtype = np.uint8 if len(edges) <= 8 else np.int64
    block = max(1, _BLOCK_CELLS // m)
    for lo in range(0, m, block):
        rows = homs[lo:lo + block]
        mask = np.zeros((len(rows), m), dtype=dtype)
        for k, (u, v) in enumerate(edges):
            # edge uv is violated when f(u)f'(v) or f'(u)f(v) is a non-edge
            safe = adj[np.ix_(rows[:, u], homs[:, v])] & adj[np.ix_(rows[:, v], homs[:, u])]
            mask |= (~safe).astype(dtype) << dtype(k)
        hits = np.argwhere(~ok_subsets[mask])
        if len(hits):
            i, j = hits[0]
            f, f2 = homs[lo + i], homs[j]
            return BspCounterexample(g, tuple((int(x), int(y)) for x, y in zip(f, f2)))
    return None


def direct_target_check(h: Graph, sources: Iterable[SimpleGraph]) -> BspCounterexample | None:
    """Check the defining property of a swapping target over the given sources.

    Returns the first counterexample found, or None if every homomorphism
    from every doubled source has the swapping property. Violated edges form
    a subgraph of the source and an odd violated cycle lies in one component,
    so only non-bipartite components are searched, each isomorphism type once.
    A returned counterexample has that component as its source.
    """
    seen = set()
    for g in sources:
        for comp in g.components():
            part = g.induced(comp)
            key = canonical_form(part)
            if key in seen or is_bipartite(part):
                continue
            seen.add(key)
            found = find_bsp_counterexample(h, part)
            if found is not None:
                return found
    return None


def odd_cycle_in_bst(h: Graph, cycle: Sequence[tuple[int, int]]) -> bool:
    """True iff ``cycle`` is an odd closed walk in the pair graph of ``h``."""
    bst = build_bst_graph(h)
    return len(cycle) % 2 == 1 and is_cycle_in(bst.graph, [bst.index(*p) for p in cycle])

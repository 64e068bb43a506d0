"""The bipartite swapping trick.

A pair-labelling assigns each source vertex ``v`` a pair ``(p0(v), p1(v))`` of
target vertices.  It encodes a homomorphism from two disjoint copies of the
source (``DISJOINT``: ``p_i(u) p_i(v)`` adjacent) or from its bipartite double
cover (``CROSSED``: ``p_i(u) p_{1-i}(v)`` adjacent).  An edge is violated when
one of the four cross pairs is a non-edge; swapping the coordinates on a set
``W`` that meets every violated edge exactly once moves a labelling from one
mode to the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import InvalidParameter, NotBipartiteError, ResourceLimit
from .graphs import Graph, SimpleGraph, bipartite_double, disjoint_double, two_color_rows
from .homs import iter_homs

Labels = tuple[tuple[int, int], ...]


class Mode(str, Enum):
    DISJOINT = "DISJOINT"
    CROSSED = "CROSSED"
    RAW = "RAW"

    def flipped(self) -> "Mode":
        if self is Mode.DISJOINT:
            return Mode.CROSSED
        if self is Mode.CROSSED:
            return Mode.DISJOINT
        return Mode.RAW


def _satisfies(g: Graph, h: Graph, labels: Labels, mode: Mode) -> bool:
    if mode is Mode.RAW:
        return True
    rows = h.rows
    for u, v in g.edges():
        a0, a1 = labels[u]
        b0, b1 = labels[v]
        if mode is Mode.DISJOINT:
            ok = (rows[a0] >> b0) & 1 and (rows[a1] >> b1) & 1
        else:
            ok = (rows[a0] >> b1) & 1 and (rows[a1] >> b0) & 1
        if not ok:
            return False
    return True


@dataclass(frozen=True)
class PairLabeling:
    """Labels for the vertices of ``g`` by pairs of vertices of ``h``.

    Construction checks the constraint of ``mode``; ``InvalidParameter`` is
    raised for a labelling that does not represent a homomorphism of that kind.
    """

    g: SimpleGraph
    h: Graph
    labels: Labels
    mode: Mode = Mode.RAW

    def __post_init__(self):
        labels = tuple((int(a), int(b)) for a, b in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.g.n:
            raise InvalidParameter(f"need {self.g.n} labels, got {len(labels)}")
        if any(not (0 <= x < self.h.n) for pair in labels for x in pair):
            raise InvalidParameter("label outside the target's vertex range")
        if not _satisfies(self.g, self.h, labels, Mode(self.mode)):
            raise InvalidParameter(f"labelling does not satisfy the {Mode(self.mode).value} constraint")

    def satisfies(self, mode: Mode) -> bool:
        return _satisfies(self.g, self.h, self.labels, mode)

    def to_lines(self) -> str:
        """Serialise as one ``v h0 h1`` line per source vertex."""
        return "".join(f"{v} {a} {b}\n" for v, (a, b) in enumerate(self.labels))

    @classmethod
    def from_lines(cls, g: SimpleGraph, h: Graph, text: str, mode: Mode = Mode.RAW) -> "PairLabeling":
        labels: list = [None] * g.n
        for line in text.splitlines():
            if not line.strip():
                continue
            v, a, b = (int(x) for x in line.split())
            if not 0 <= v < g.n or labels[v] is not None:
                raise InvalidParameter(f"bad or repeated vertex {v}")
            labels[v] = (a, b)
        if any(x is None for x in labels):
            raise InvalidParameter("every source vertex needs a label")
        return cls(g, h, tuple(labels), mode)


def _violated(g: Graph, h_rows: Sequence[int], labels: Labels) -> frozenset[tuple[int, int]]:
    out = []
    for u, v in g.edges():
        a0, a1 = labels[u]
        b0, b1 = labels[v]
        ra0, ra1 = h_rows[a0], h_rows[a1]
        if not ((ra0 >> b0) & (ra0 >> b1) & (ra1 >> b0) & (ra1 >> b1) & 1):
            out.append((u, v))
    return frozenset(out)


def violated_edges(p: PairLabeling) -> frozenset[tuple[int, int]]:
    """Source edges ``uv`` (``u < v``) with some ``p_i(u) p_j(v)`` not an edge of ``h``."""
    return _violated(p.g, p.h.rows, p.labels)


def _edge_rows(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def has_bsp(p: PairLabeling) -> bool:
    """Whether the violated edges form a bipartite subgraph."""
    return bool(two_color_rows(p.g.n, _edge_rows(p.g.n, violated_edges(p))))


def _crossing_set(n: int, edges: Iterable[tuple[int, int]]) -> frozenset[int]:
    rows = _edge_rows(n, edges)
    check = two_color_rows(n, rows)
    if not check:
        raise NotBipartiteError("violated edges contain an odd cycle", list(check.odd_cycle))
    # each component is coloured from its smallest vertex with colour 0
    return frozenset(v for v in range(n) if rows[v] and check.coloring[v] == 1)


def canonical_crossing_set(g: SimpleGraph, f: Iterable[tuple[int, int]]) -> frozenset[int]:
    """Lexicographically least ``W`` meeting every edge of ``f`` exactly once.

    In each component of ``(V(g), f)`` with an edge, ``W`` is the colour class
    avoiding the component's smallest vertex; vertices outside ``f`` are never
    in ``W``.
    """
    return _crossing_set(g.n, f)


def _swap_labels(labels: Labels, w: Iterable[int]) -> Labels:
    out = list(labels)
    for v in w:
        a, b = out[v]
        out[v] = (b, a)
    return tuple(out)


def swap(p: PairLabeling, w: Iterable[int]) -> PairLabeling:
    """Exchange the two coordinates on every vertex of ``w``; the result is ``RAW``."""
    return PairLabeling(p.g, p.h, _swap_labels(p.labels, w), Mode.RAW)


def transport(p: PairLabeling) -> PairLabeling:
    """Move a ``DISJOINT`` labelling to ``CROSSED`` or back, via the canonical crossing set.

    Raises :class:`NotBipartiteError` if the violated edges are not bipartite.
    """
    if p.mode is Mode.RAW:
        raise InvalidParameter("transport needs a DISJOINT or CROSSED labelling")
    w = _crossing_set(p.g.n, violated_edges(p))
    return PairLabeling(p.g, p.h, _swap_labels(p.labels, w), p.mode.flipped())


def _labels_from_doubled(image: Sequence[int]) -> Labels:
    return tuple((image[2 * v], image[2 * v + 1]) for v in range(len(image) // 2))


def iter_pair_labelings(g: SimpleGraph, h: Graph, mode: Mode) -> Iterable[Labels]:
    """Labels of every element of ``Hom(g ⊔ g, h)`` or ``Hom(g x K_2, h)``."""
    doubled = disjoint_double(g) if mode is Mode.DISJOINT else bipartite_double(g)
    for image in iter_homs(doubled, h):
        yield _labels_from_doubled(image)


@dataclass(frozen=True)
class SwapReport:
    disjoint_total: int
    crossed_total: int
    disjoint_bsp: int
    crossed_bsp: int
    images_valid: bool
    injective: bool
    roundtrip_ok: bool

    @property
    def passed(self) -> bool:
        return (self.disjoint_bsp == self.crossed_bsp and self.images_valid
                and self.injective and self.roundtrip_ok)

    def to_record(self) -> dict:
        rec = dict(self.__dict__)
        rec["passed"] = self.passed
        return rec


def verify_swap_bijection(g: SimpleGraph, h: Graph, *, max_elements: int = 2_000_000) -> SwapReport:
    """Enumerate both sides, transport every element with the swapping property and check the bijection."""
    rows = h.rows
    sides = {}
    totals = {}
    for mode in (Mode.DISJOINT, Mode.CROSSED):
        bsp = {}
        total = 0
        for labels in iter_pair_labelings(g, h, mode):
            total += 1
            if total > max_elements:
                raise ResourceLimit(f"more than {max_elements} homomorphisms to enumerate")
            viol = _violated(g, rows, labels)
            try:
                w = _crossing_set(g.n, viol)
            except NotBipartiteError:
                continue
            bsp[labels] = w
        sides[mode] = bsp
        totals[mode] = total

    images_valid = injective = roundtrip_ok = True
    for mode in (Mode.DISJOINT, Mode.CROSSED):
        other = sides[mode.flipped()]
        seen = set()
        for labels, w in sides[mode].items():
            image = _swap_labels(labels, w)
            if image not in other or not _satisfies(g, h, image, mode.flipped()):
                images_valid = False
            if image in seen:
                injective = False
            seen.add(image)
            back = _swap_labels(image, _crossing_set(g.n, _violated(g, rows, image)))
            if back != labels:
                roundtrip_ok = False
    return SwapReport(
        disjoint_total=totals[Mode.DISJOINT],
        crossed_total=totals[Mode.CROSSED],
        disjoint_bsp=len(sides[Mode.DISJOINT]),
        crossed_bsp=len(sides[Mode.CROSSED]),
        images_valid=images_valid,
        injective=injective,
        roundtrip_ok=roundtrip_ok,
    )

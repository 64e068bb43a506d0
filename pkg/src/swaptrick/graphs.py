"""Graph values, standard constructions and structural queries.

Graphs are stored as a tuple of row bitsets: bit ``v`` of ``rows[u]`` is set
iff ``uv`` is an edge.  A loop at ``v`` is bit ``v`` of ``rows[v]``.  Sources
(:class:`SimpleGraph`) are loop-free; targets (:class:`TargetGraph`) may carry
loops.  Both are immutable and hashable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphFormatError, InvalidParameter


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise InvalidParameter(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise InvalidParameter(f"row {u} refers to a vertex outside 0..{self.n - 1}")
            for v in iter_bits(row):
                if not (self.rows[v] >> u) & 1:
                    raise InvalidParameter(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]):
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for {n} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]):
        n = len(matrix)
        rows = tuple(sum(1 << j for j, x in enumerate(r) if x) for r in matrix)
        return cls(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def has_loop(self, v: int) -> bool:
        return bool((self.rows[v] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        # a loop contributes one, matching the row sum of the adjacency matrix
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        """Non-loop edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def loops(self) -> list[int]:
        return [v for v in range(self.n) if self.has_loop(v)]

    @property
    def num_edges(self) -> int:
        return len(self.edges())

    @property
    def num_loops(self) -> int:
        return len(self.loops())

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(self.rows[u] >> v) & 1 for v in range(self.n)] for u in range(self.n)]

    def relabel(self, perm: Sequence[int]):
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for u in range(self.n):
            rows[perm[u]] = sum(1 << perm[v] for v in iter_bits(self.rows[u]))
        return type(self)(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]):
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(sum(1 << index[w] for w in iter_bits(self.rows[v]) if w in index))
        return type(self)(len(vertices), tuple(rows))

    def regular_degree(self) -> int | None:
        """The common degree if every vertex has the same degree, else None."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return 0 if self.n == 0 else None

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp, frontier = 0, 1 << s
            while frontier:
                comp |= frontier
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


class SimpleGraph(Graph):
    """Loop-free undirected graph, the source side of a homomorphism."""

    def __post_init__(self):
        super().__post_init__()
        for v in range(self.n):
            if (self.rows[v] >> v) & 1:
                raise InvalidParameter(f"simple graph has a loop at {v}")

    def as_target(self) -> "TargetGraph":
        return TargetGraph(self.n, self.rows)


class TargetGraph(Graph):
    """Undirected graph that may carry loops, the target side of a homomorphism."""

    def as_simple(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.rows)


class DoubledVertex(NamedTuple):
    """Vertex ``v_side`` of a doubled graph; stored at index ``2*base + side``."""

    base: int
    side: int

    @property
    def index(self) -> int:
        return 2 * self.base + self.side

    @classmethod
    def of_index(cls, i: int) -> "DoubledVertex":
        return cls(i // 2, i % 2)


# -- constructions ----------------------------------------------------------


def complete_graph(q: int) -> TargetGraph:
    if q < 1:
        raise InvalidParameter("complete_graph needs q >= 1")
    full = (1 << q) - 1
    return TargetGraph(q, tuple(full & ~(1 << v) for v in range(q)))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    if a < 1 or b < 1:
        raise InvalidParameter("complete_bipartite needs both parts non-empty")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return SimpleGraph(a + b, tuple([right] * a + [left] * b))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, (0,) * n)


def disjoint_union(*graphs: Graph) -> SimpleGraph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return SimpleGraph.from_edges(offset, edges)


def disjoint_double(g: SimpleGraph) -> SimpleGraph:
    """Two disjoint copies of ``g``; ``v`` becomes ``2v`` and ``2v+1``."""
    edges = [(2 * u + i, 2 * v + i) for u, v in g.edges() for i in (0, 1)]
    return SimpleGraph.from_edges(2 * g.n, edges)


def bipartite_double(g: SimpleGraph) -> SimpleGraph:
    """The bipartite double cover ``g x K_2`` with edges ``u_0 v_1`` and ``u_1 v_0``."""
    edges = [(2 * u + i, 2 * v + 1 - i) for u, v in g.edges() for i in (0, 1)]
    return SimpleGraph.from_edges(2 * g.n, edges)


# -- structure ----------------------------------------------------------------


@dataclass(frozen=True)
class BipartiteCheck:
    """Outcome of a 2-colouring attempt.

    Exactly one of ``coloring`` (a 0/1 list indexed by vertex) and
    ``odd_cycle`` (vertex list of an odd cycle, a single vertex for a loop)
    is set.
    """

    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.coloring is not None


def two_color_rows(n: int, rows: Sequence[int]) -> BipartiteCheck:
    """2-colour the graph given by adjacency bitsets ``rows``.

    Each component is coloured by BFS from its smallest vertex, which gets
    colour 0.  On failure the returned odd cycle is simple.
    """
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in iter_bits(rows[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartiteCheck(odd_cycle=_odd_cycle(u, v, parent, depth))
    return BipartiteCheck(coloring=tuple(color))


def _odd_cycle(u, v, parent, depth):
    if u == v:
        return (u,)
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    return tuple(left + right[-2::-1])


def is_bipartite(g: Graph) -> BipartiteCheck:
    return two_color_rows(g.n, g.rows)


def odd_girth(g: Graph) -> int | None:
    """Length of a shortest odd cycle (1 for a loop), or None when bipartite."""
    if any(g.has_loop(v) for v in range(g.n)):
        return 1
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for v in iter_bits(g.rows[u]):
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                elif dist[v] == dist[u]:
                    length = 2 * dist[u] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff consecutive vertices of ``cycle`` (cyclically) are adjacent in ``g``."""
    k = len(cycle)
    return k > 0 and all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


# -- text format ------------------------------------------------------------


def format_graph(g: Graph) -> str:
    """Serialise to the ``n m L`` text format."""
    edges, loops = g.edges(), g.loops()
    lines = [f"{g.n} {len(edges)} {len(loops)}"]
    lines += [f"{u} {v}" for u, v in edges]
    lines += [f"{v} {v}" for v in loops]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, *, target: bool = False) -> Graph:
    """Parse the ``n m L`` format; loops are only accepted when ``target`` is set."""
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, parts) for no, parts in lines if parts]
    if not lines:
        raise GraphFormatError("empty graph file")

    def ints(no, parts, k):
        if len(parts) != k:
            raise GraphFormatError(f"expected {k} integers, got {len(parts)}", no)
        try:
            return [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {' '.join(parts)!r}", no) from None

    no, parts = lines[0]
    n, m, nloops = ints(no, parts, 3)
    if n < 0 or m < 0 or nloops < 0:
        raise GraphFormatError("header values must be non-negative", no)
    if nloops and not target:
        raise GraphFormatError("loops are only allowed in target graph files", no)
    body = lines[1:]
    if len(body) != m + nloops:
        raise GraphFormatError(f"header announces {m + nloops} edge lines, found {len(body)}")
    rows = [0] * n
    seen = set()
    for k, (no, parts) in enumerate(body):
        u, v = ints(no, parts, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", no)
        if k < m and u >= v:
            raise GraphFormatError("edge lines must satisfy u < v", no)
        if k >= m and u != v:
            raise GraphFormatError("loop lines must read 'v v'", no)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", no)
        seen.add((u, v))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    cls = TargetGraph if target else SimpleGraph
    return cls(n, tuple(rows))


def read_graph(path: str | Path, *, target: bool = False) -> Graph:
    try:
        return parse_graph(Path(path).read_text(), target=target)
    except GraphFormatError as e:
        err = GraphFormatError(f"{path}: {e}")
        err.line = e.line
        raise err from None


def write_graph(path: str | Path, g: Graph) -> None:
    Path(path).write_text(format_graph(g))

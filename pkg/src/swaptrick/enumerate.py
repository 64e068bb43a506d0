"""Canonical forms, isomorphism tests and small-graph enumeration.

The canonical form is the lexicographically least relabelled row tuple over
the leaves of an individualisation-refinement search tree.  Refinement starts
from the (loop, degree) partition, so the leaves form an isomorphism-invariant
family of labellings and the minimum over them is a complete invariant.
Branches on vertices that are interchangeable by a transposition are skipped.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InvalidParameter, ResourceLimit
from .graphs import Graph, SimpleGraph, TargetGraph, iter_bits

DEFAULT_CAP = 10


def _refine(rows, cells):
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
                new_cells.extend(groups[s] for s in sorted(groups))
            else:
                new_cells.append(cell)
        cells = new_cells
        if not split:
            return cells


def _leaf_key(rows, cells):
    order = [c[0] for c in cells]
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    key = tuple(sum(1 << pos[w] for w in iter_bits(rows[v])) for v in order)
    return key, tuple(pos)


def _swappable(rows, u, v):
    mask = ~((1 << u) | (1 << v))
    loop_u, loop_v = (rows[u] >> u) & 1, (rows[v] >> v) & 1
    return loop_u == loop_v and not ((rows[u] ^ rows[v]) & mask)


def _search(rows, cells, best):
    cells = _refine(rows, cells)
    if all(len(c) == 1 for c in cells):
        key, perm = _leaf_key(rows, cells)
        if best[0] is None or key < best[0]:
            best[0], best[1] = key, perm
        return
    idx = next(i for i, c in enumerate(cells) if len(c) > 1)
    cell = cells[idx]
    reps: list[int] = []
    for v in cell:
        if any(_swappable(rows, r, v) for r in reps):
            continue
        reps.append(v)
        rest = [w for w in cell if w != v]
        _search(rows, cells[:idx] + [[v], rest] + cells[idx + 1:], best)


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(key, perm)`` where ``g.relabel(perm).rows == key``."""
    if g.n == 0:
        return (), ()
    rows = g.rows
    groups: dict[tuple, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(((rows[v] >> v) & 1, rows[v].bit_count()), []).append(v)
    cells = [groups[s] for s in sorted(groups)]
    best: list = [None, None]
    _search(rows, cells, best)
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, ...]:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    key, _ = canonical_labeling(g)
    return type(g)(g.n, key)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and canonical_form(g1) == canonical_form(g2)


def enumerate_graphs(n: int, *, loops: bool = False, connected: bool = False,
                     cap: int = 7) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Classes on ``n`` vertices are grown from those on ``n - 1`` by attaching
    a new vertex in every possible way, then deduplicated by canonical form.
    Representatives are returned in canonical labelling, sorted by key.
    """
    if n < 0:
        raise InvalidParameter("n must be non-negative")
    if n > cap:
        raise ResourceLimit(f"graph enumeration capped at {cap} vertices")
    cls = TargetGraph if loops else SimpleGraph
    level: dict[tuple, Graph] = {(): cls(0, ())}
    for k in range(1, n + 1):
        nxt: dict[tuple, Graph] = {}
        new_bit = 1 << (k - 1)
        for g in level.values():
            for nbrs in range(1 << (k - 1)):
                for loop in ((0, 1) if loops else (0,)):
                    rows = [r | (new_bit if (nbrs >> u) & 1 else 0) for u, r in enumerate(g.rows)]
                    rows.append(nbrs | (new_bit if loop else 0))
                    h = cls(k, tuple(rows))
                    key = canonical_form(h)
                    if key not in nxt:
                        nxt[key] = cls(k, key)
        level = nxt
    out = [level[k] for k in sorted(level)]
    if connected:
        out = [g for g in out if g.is_connected()]
    return out


def _labeled_regular(n: int, d: int):
    """Labelled d-regular graphs with interchangeable untouched vertices pruned.

    Vertices are completed in index order.  A later vertex with no incident
    edge yet is indistinguishable from any other such vertex, so only the
    lowest-indexed untouched vertices are ever chosen as new neighbours.
    """
    rows = [0] * n
    deg = [0] * n

    def fill(i):
        if i == n:
            yield tuple(rows)
            return
        need = d - deg[i]
        cand = [j for j in range(i + 1, n) if deg[j] < d]
        if need > len(cand):
            return
        touched = [j for j in cand if deg[j] > 0]
        fresh = [j for j in cand if deg[j] == 0]
        for k in range(min(need, len(fresh)) + 1):
            if need - k > len(touched):
                continue
            for chosen in combinations(touched, need - k):
                picks = list(chosen) + fresh[:k]
                for j in picks:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                    deg[j] += 1
                deg[i] += need
                yield from fill(i + 1)
                deg[i] -= need
                for j in picks:
                    rows[i] &= ~(1 << j)
                    rows[j] &= ~(1 << i)
                    deg[j] -= 1

    yield from fill(0)


def enumerate_regular(n: int, d: int, *, cap: int = DEFAULT_CAP) -> list[SimpleGraph]:
    """All d-regular graphs on ``n`` vertices up to isomorphism.

    Returns an empty list when ``n * d`` is odd.  Output graphs are in
    canonical labelling and sorted by canonical key, so the order is
    reproducible.
    """
    if n < 1 or d < 0:
        raise InvalidParameter("need n >= 1 and d >= 0")
    if d >= n:
        raise InvalidParameter(f"degree {d} impossible on {n} vertices")
    if n > cap:
        raise ResourceLimit(f"regular graph enumeration capped at {cap} vertices")
    if (n * d) % 2:
        return []
    classes: dict[tuple, SimpleGraph] = {}
    for rows in _labeled_regular(n, d):
        key = canonical_form(SimpleGraph(n, rows))
        if key not in classes:
            classes[key] = SimpleGraph(n, key)
    return [classes[k] for k in sorted(classes)]


def regular_corpus(n_max: int, d_max: int, *, n_min: int = 1, d_min: int = 1,
                   cap: int = DEFAULT_CAP) -> list[SimpleGraph]:
    """Every d-regular graph class with ``n_min <= N <= n_max``, ``d_min <= d <= d_max``.

    Ordered by (N, d, canonical key).
    """
    out = []
    for n in range(n_min, n_max + 1):
        for d in range(d_min, min(d_max, n - 1) + 1):
            out.extend(enumerate_regular(n, d, cap=cap))
    return out

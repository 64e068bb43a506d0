"""Exact homomorphism counts.

Counting is a backtracking search over the source vertices, placed one at a
time; the images available to a vertex are the intersection of the target
rows of its already placed neighbours.  Partial assignments that agree on the
placed vertices which still have unplaced neighbours (the frontier) have the
same number of completions, so completion counts are memoised on the
frontier images.  Connected components are counted separately and multiplied.

Weighted counts run on integer numerators over a common denominator and are
returned as :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, lcm
from typing import Iterator, Sequence

from .errors import InvalidParameter, ResourceLimit
from .graphs import Graph, complete_graph, iter_bits

DEFAULT_NODE_BUDGET = 50_000_000


def as_weights(lam, n: int) -> tuple[Fraction, ...]:
    """Validate a weight vector of length ``n``; ``None`` means all ones."""
    if lam is None:
        return (Fraction(1),) * n
    if isinstance(lam, dict):
        lam = [lam.get(v, 1) for v in range(n)]
    weights = tuple(Fraction(x) for x in lam)
    if len(weights) != n:
        raise InvalidParameter(f"expected {n} weights, got {len(weights)}")
    if any(x < 0 for x in weights):
        raise InvalidParameter("weights must be non-negative")
    return weights


def search_order(g: Graph, vertices: Sequence[int]) -> list[int]:
    """Order ``vertices`` by repeatedly taking the one with most placed neighbours.

    Ties go to higher total degree, then lower index.
    """
    remaining = set(vertices)
    placed = 0
    order = []
    while remaining:
        v = max(remaining, key=lambda x: ((g.rows[x] & placed).bit_count(), g.rows[x].bit_count(), -x))
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
    return order


class _Plan:
    """Per-component schedule: back-neighbours and frontier bookkeeping."""

    def __init__(self, g: Graph, order: list[int]):
        pos = {v: i for i, v in enumerate(order)}
        k = len(order)
        self.k = k
        self.back = []      # for step i: indices into the incoming frontier state
        self.select = []    # for step i: how to build the outgoing state
        frontier: list[int] = []   # positions currently in the frontier
        last_nbr = [max([pos[w] for w in iter_bits(g.rows[v]) if w in pos] + [-1]) for v in order]
        for i, v in enumerate(order):
            where = {p: j for j, p in enumerate(frontier)}
            back_pos = [pos[w] for w in iter_bits(g.rows[v]) if w in pos and pos[w] < i]
            self.back.append([where[p] for p in back_pos])
            nxt = [p for p in frontier if last_nbr[p] > i]
            if last_nbr[i] > i:
                nxt.append(i)
            self.select.append([where.get(p, -1) for p in nxt])
            frontier = nxt


class _Counter:
    def __init__(self, h: Graph, weights: list[int] | None, budget: int | None):
        self.h_rows = h.rows
        self.full = (1 << h.n) - 1
        self.weights = weights
        self.budget = budget
        self.nodes = 0
        self._wsum: dict[int, int] = {}

    def mass(self, mask: int) -> int:
        if self.weights is None:
            return mask.bit_count()
        s = self._wsum.get(mask)
        if s is None:
            s = sum(self.weights[w] for w in iter_bits(mask))
            self._wsum[mask] = s
        return s

    def count(self, plan: _Plan) -> int:
        memo: list[dict] = [dict() for _ in range(plan.k)]
        h_rows, full, weights = self.h_rows, self.full, self.weights
        last = plan.k - 1

        def rec(i: int, state: tuple) -> int:
            cache = memo[i]
            hit = cache.get(state)
            if hit is not None:
                return hit
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise ResourceLimit(f"homomorphism search exceeded {self.budget} nodes")
            dom = full
            for j in plan.back[i]:
                dom &= h_rows[state[j]]
            if i == last:
                total = self.mass(dom)
            else:
                total = 0
                sel = plan.select[i]
                while dom:
                    low = dom & -dom
                    w = low.bit_length() - 1
                    dom ^= low
                    sub = rec(i + 1, tuple(w if s < 0 else state[s] for s in sel))
                    if sub:
                        total += sub if weights is None else weights[w] * sub
            cache[state] = total
            return total

        return rec(0, ())


def _count_numerator(g: Graph, h: Graph, weights: list[int] | None, budget: int | None) -> int:
    counter = _Counter(h, weights, budget)
    total = 1
    for comp in g.components():
        plan = _Plan(g, search_order(g, comp))
        total *= counter.count(plan)
        if total == 0:
            return 0
    return total


def count_hom(g: Graph, h: Graph, *, budget: int | None = DEFAULT_NODE_BUDGET) -> int:
    """Number of homomorphisms from ``g`` to ``h``.

    Raises :class:`ResourceLimit` when more than ``budget`` search nodes are
    expanded (``None`` disables the limit).
    """
    return _count_numerator(g, h, None, budget)


def _integer_weights(weights: Sequence[Fraction]) -> tuple[list[int], int]:
    den = lcm(*(w.denominator for w in weights)) if weights else 1
    return [int(w * den) for w in weights], den


def count_hom_weighted(g: Graph, h: Graph, lam=None, *,
                       budget: int | None = DEFAULT_NODE_BUDGET) -> Fraction:
    """Sum over homomorphisms ``f`` of the product of ``lam[f(v)]`` over source vertices."""
    weights = as_weights(lam, h.n)
    nums, den = _integer_weights(weights)
    return Fraction(_count_numerator(g, h, nums, budget), den ** g.n)


def count_hom_complete_bipartite(a: int, b: int, h: Graph, lam=None) -> Fraction:
    """Weighted homomorphism count from ``K_{a,b}`` to ``h``.

    Sums, over multisets of images of the ``a``-side, the multinomial
    multiplicity times the product of their weights times the weighted size
    of their common neighbourhood raised to the power ``b``.
    """
    if a < 1 or b < 1:
        raise InvalidParameter("complete bipartite parts must be non-empty")
    weights = as_weights(lam, h.n)
    nums, den = _integer_weights(weights)
    full = (1 << h.n) - 1
    mass: dict[int, int] = {}
    fact = [1]
    for i in range(1, a + 1):
        fact.append(fact[-1] * i)
    total = 0
    for combo in combinations_with_replacement(range(h.n), a):
        common = full
        prod = 1
        mult = fact[a]
        run = 1
        for idx, w in enumerate(combo):
            common &= h.rows[w]
            prod *= nums[w]
            if idx and combo[idx - 1] == w:
                run += 1
            else:
                run = 1
            mult //= run
        if not common or not prod:
            continue
        s = mass.get(common)
        if s is None:
            s = mass[common] = sum(nums[w] for w in iter_bits(common))
        total += mult * prod * s ** b
    return Fraction(total, den ** (a + b))


def count_hom_surjective(g: Graph, i: int, *, budget: int | None = DEFAULT_NODE_BUDGET) -> int:
    """Proper colourings of ``g`` that use every one of ``i`` colours (inclusion-exclusion)."""
    if i < 0:
        raise InvalidParameter("colour count must be non-negative")
    if i == 0:
        return 1 if g.n == 0 else 0
    total = 0
    for j in range(1, i + 1):
        total += (-1) ** (i - j) * comb(i, j) * count_hom(g, complete_graph(j), budget=budget)
    if g.n == 0:
        total += (-1) ** i
    return total


@dataclass(frozen=True)
class StateSystem:
    """Finite states with attribute ``alpha``, activity ``lam`` and threshold ``t``.

    Admissible assignments give adjacent source vertices states whose
    attributes sum to at most ``t``.
    """

    alpha: tuple[Fraction, ...]
    lam: tuple[Fraction, ...]
    t: Fraction

    def __post_init__(self):
        if not self.alpha:
            raise InvalidParameter("a state system needs at least one state")
        if len(self.alpha) != len(self.lam):
            raise InvalidParameter("alpha and lam must have equal length")
        object.__setattr__(self, "alpha", tuple(Fraction(x) for x in self.alpha))
        object.__setattr__(self, "lam", as_weights(self.lam, len(self.alpha)))
        object.__setattr__(self, "t", Fraction(self.t))


def count_states(g: Graph, sys: StateSystem) -> Fraction:
    from .targets import threshold_graph

    return count_hom_weighted(g, threshold_graph(sys.alpha, sys.t), sys.lam)


def iter_homs(g: Graph, h: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every homomorphism as a tuple of images indexed by source vertex."""
    order = search_order(g, range(g.n))
    back = []
    placed = 0
    for v in order:
        back.append(list(iter_bits(g.rows[v] & placed)))
        placed |= 1 << v
    image = [0] * g.n
    h_rows, full, n = h.rows, (1 << h.n) - 1, g.n

    def rec(i):
        if i == n:
            yield tuple(image)
            return
        dom = full
        for u in back[i]:
            dom &= h_rows[image[u]]
        v = order[i]
        for w in iter_bits(dom):
            image[v] = w
            yield from rec(i + 1)

    yield from rec(0)


def is_homomorphism(g: Graph, h: Graph, f: Sequence[int]) -> bool:
    return all(h.has_edge(f[u], f[v]) for u, v in g.edges())


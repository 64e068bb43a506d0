"""Chromatic polynomials of doubled graphs in the binomial basis.

``P(G, q) = sum_i s_i * C(q, i)`` where ``s_i`` counts proper colourings of
``G`` using all of ``i`` given colours.  Comparing these coefficients for two
disjoint copies of ``G`` and for its bipartite double cover decides which
chromatic polynomial is eventually larger.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .errors import InvalidParameter, ResourceLimit
from .graphs import (Graph, SimpleGraph, bipartite_double, complete_graph, disjoint_double,
                     is_cycle_in, iter_bits, odd_girth)
from .homs import DEFAULT_NODE_BUDGET, count_hom


def _binom(q, i: int):
    """``C(q, i)`` for integer or rational ``q``."""
    if isinstance(q, int) and q >= 0:
        return comb(q, i)
    num = Fraction(1)
    for k in range(i):
        num *= Fraction(q) - k
        num /= k + 1
    return num


@dataclass(frozen=True)
class BinomialBasisPolynomial:
    """``q -> sum(c[i] * C(q, i))``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    def __call__(self, q):
        return sum(c * _binom(q, i) for i, c in enumerate(self.coeffs) if c)

    def __sub__(self, other: "BinomialBasisPolynomial") -> "BinomialBasisPolynomial":
        k = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (k - len(self.coeffs))
        b = other.coeffs + (0,) * (k - len(other.coeffs))
        return BinomialBasisPolynomial(tuple(x - y for x, y in zip(a, b)))

    def top_index(self) -> int | None:
        """Largest index with a nonzero coefficient, or ``None`` for the zero polynomial."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return None


PARTITION_DP_MAX = 12


def _independent_partitions(g: Graph, top: int) -> list[int]:
    """Numbers of partitions of ``V(g)`` into exactly ``k`` independent sets, ``k = 0..top``.

    Dynamic programme over vertex subsets: the block holding the lowest
    vertex of ``S`` is chosen among the independent subsets of ``S``.
    """
    n, rows = g.n, g.rows
    full = (1 << n) - 1
    indep = bytearray(1 << n)
    indep[0] = 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        indep[mask] = indep[rest] and not (rows[v] & rest)
    table: list = [None] * (1 << n)
    table[0] = [1] + [0] * top
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        acc = [0] * (top + 1)
        sub = rest
        while True:
            block = sub | low
            if indep[block]:
                prev = table[mask ^ block]
                for k in range(top):
                    if prev[k]:
                        acc[k + 1] += prev[k]
            if sub == 0:
                break
            sub = (sub - 1) & rest
        table[mask] = acc
    return table[full]


def surjective_counts(g: Graph, top: int | None = None, *,
                      budget: int | None = DEFAULT_NODE_BUDGET) -> tuple[int, ...]:
    """Numbers of proper colourings using exactly ``i`` colours, ``i = 0..top`` (default ``g.n``).

    Small graphs use a subset dynamic programme over independent sets; larger
    ones use inclusion-exclusion over homomorphism counts into complete graphs.
    """
    top = g.n if top is None else top
    if g.n <= PARTITION_DP_MAX and not g.num_loops:
        parts = _independent_partitions(g, top)
        return tuple(parts[i] * factorial(i) for i in range(top + 1))
    values = [1 if g.n == 0 else 0]
    values += [count_hom(g, complete_graph(j), budget=budget) for j in range(1, top + 1)]
    out = []
    for i in range(top + 1):
        out.append(sum((-1) ** (i - j) * comb(i, j) * values[j] for j in range(i + 1)))
    return tuple(out)


def chromatic_binomial(g: Graph, *, budget: int | None = DEFAULT_NODE_BUDGET) -> BinomialBasisPolynomial:
    return BinomialBasisPolynomial(surjective_counts(g, budget=budget))


def surjective_profile_pair(g: SimpleGraph, *, budget: int | None = DEFAULT_NODE_BUDGET
                            ) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Surjective colouring counts of ``g ⊔ g`` and ``g x K_2`` for ``i = 0..2N``."""
    return (surjective_counts(disjoint_double(g), budget=budget),
            surjective_counts(bipartite_double(g), budget=budget))


@dataclass(frozen=True)
class CoefficientComparison:
    odd_girth: int
    strict_index: int
    disjoint: tuple[int, ...]
    crossed: tuple[int, ...]
    equal_above: bool
    strict_below: bool

    @property
    def passed(self) -> bool:
        return self.equal_above and self.strict_below

    def to_record(self) -> dict:
        return {
            "odd_girth": self.odd_girth,
            "strict_index": self.strict_index,
            "disjoint": [str(x) for x in self.disjoint],
            "crossed": [str(x) for x in self.crossed],
            "equal_above": self.equal_above,
            "strict_below": self.strict_below,
            "passed": self.passed,
        }


def compare_profiles(n: int, t: int, disjoint: Sequence[int], crossed: Sequence[int]) -> CoefficientComparison:
    """Check equality from index ``2n - t + 2`` on and ``disjoint < crossed`` at ``2n - t + 1``."""
    k = 2 * n - t + 1
    equal_above = all(disjoint[i] == crossed[i] for i in range(k + 1, 2 * n + 1))
    return CoefficientComparison(t, k, tuple(disjoint), tuple(crossed), equal_above,
                                 disjoint[k] < crossed[k])


def verify_coefficient_compare(g: SimpleGraph, *, budget: int | None = DEFAULT_NODE_BUDGET
                               ) -> CoefficientComparison:
    t = odd_girth(g)
    if t is None:
        raise InvalidParameter("graph is bipartite; both profiles coincide")
    disjoint, crossed = surjective_profile_pair(g, budget=budget)
    return compare_profiles(g.n, t, disjoint, crossed)


def termwise_violations(g: SimpleGraph, *, budget: int | None = DEFAULT_NODE_BUDGET) -> list[int]:
    """Indices ``i`` where ``g ⊔ g`` has more surjective ``i``-colourings than ``g x K_2``."""
    disjoint, crossed = surjective_profile_pair(g, budget=budget)
    return [i for i, (a, b) in enumerate(zip(disjoint, crossed)) if a > b]


@dataclass(frozen=True)
class DominanceCertificate:
    """Leading term of the chromatic difference, with two sufficient bounds on ``q``.

    ``coarse_bound`` is ``(2N)^(2N+2)``; ``girth_bound`` is
    ``(m+1)^2 m^(2N) + m`` with ``m = 2N - t`` for odd girth ``t`` (None if bipartite).
    """

    top_index: int | None
    top_sign: str
    coarse_bound: int
    girth_bound: int | None
    difference: BinomialBasisPolynomial = field(repr=False)
    evaluations: tuple[tuple[int, int], ...] = ()

    @property
    def nonnegative_at_samples(self) -> bool:
        return all(v >= 0 for _, v in self.evaluations)

    def to_record(self) -> dict:
        return {
            "top_index": self.top_index,
            "top_sign": self.top_sign,
            "coarse_bound": str(self.coarse_bound),
            "girth_bound": None if self.girth_bound is None else str(self.girth_bound),
            "difference": [str(c) for c in self.difference.coeffs],
            "evaluations": [[q, str(v)] for q, v in self.evaluations],
        }


def dominance_certificate(g: SimpleGraph, eval_points: Iterable[int] = (), *,
                          budget: int | None = DEFAULT_NODE_BUDGET) -> DominanceCertificate:
    """Sign of the leading term of ``P(g x K_2, q) - P(g ⊔ g, q)`` in the binomial basis.

    A positive sign means the double cover has more ``q``-colourings for all
    large ``q``.  Two explicit thresholds for ``q`` are included, and the
    difference is evaluated at ``eval_points``.
    """
    disjoint, crossed = surjective_profile_pair(g, budget=budget)
    diff = BinomialBasisPolynomial(crossed) - BinomialBasisPolynomial(disjoint)
    top = diff.top_index()
    sign = "0" if top is None else ("+" if diff.coeffs[top] > 0 else "-")
    n = g.n
    t = odd_girth(g)
    girth_bound = None
    if t is not None:
        m = 2 * n - t
        girth_bound = (m + 1) ** 2 * m ** (2 * n) + m
    evals = tuple((q, diff(q)) for q in eval_points)
    return DominanceCertificate(top, sign, (2 * n) ** (2 * n + 2), girth_bound, diff, evals)


# cycles in violated edge sets ------------------------------------------------

def simple_cycles(n: int, edges: Iterable[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """Every simple cycle (length >= 3) once, starting at its smallest vertex."""
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    for s in range(n):
        path = [s]
        on_path = 1 << s
        allowed = ~((1 << (s + 1)) - 1)

        def walk(v):
            nonlocal on_path
            for w in iter_bits(rows[v]):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif (allowed >> w) & 1 and not (on_path >> w) & 1:
                    path.append(w)
                    on_path |= 1 << w
                    yield from walk(w)
                    on_path &= ~(1 << w)
                    path.pop()

        yield from walk(s)


def _violated_by_coloring(g: Graph, image: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for u, v in g.edges():
        a = (image[2 * u], image[2 * u + 1])
        b = (image[2 * v], image[2 * v + 1])
        if any(x == y for x in a for y in b):
            out.append((u, v))
    return out


def _random_colorings(doubled: Graph, i: int, rng: random.Random, count: int,
                      max_attempts: int) -> Iterator[tuple[int, ...]]:
    order = sorted(range(doubled.n), key=lambda v: -doubled.degree(v))
    found = attempts = 0
    while found < count:
        attempts += 1
        if attempts > max_attempts:
            raise ResourceLimit(f"no surjective {i}-colouring found in {max_attempts} attempts")
        image = [-1] * doubled.n
        ok = True
        for v in order:
            banned = {image[w] for w in iter_bits(doubled.rows[v]) if image[w] >= 0}
            choices = [c for c in range(i) if c not in banned]
            if not choices:
                ok = False
                break
            image[v] = rng.choice(choices)
        if ok and len(set(image)) == i:
            found += 1
            yield tuple(image)


@dataclass(frozen=True)
class CycleBoundReport:
    side: str
    colors: int
    checked: int
    bound: int
    odd_bound: int | None
    longest_cycle: int
    longest_odd_cycle: int
    violations: tuple[tuple[int, ...], ...]
    tight: bool

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_record(self) -> dict:
        rec = dict(self.__dict__)
        rec["violations"] = [list(c) for c in self.violations]
        rec["passed"] = self.passed
        return rec


def check_coloring_cycles(g: SimpleGraph, side: str, colors: int,
                          images: Iterable[Sequence[int]]) -> CycleBoundReport:
    """Check the cycle-length bounds on the given colourings of a doubled ``g``.

    A violated ``l``-cycle forces ``colors <= 2N - l + 1``; on the disjoint
    side an odd ``l`` forces ``colors <= 2N - l``.
    """
    n = g.n
    checked = longest = longest_odd = 0
    bad: list[tuple[int, ...]] = []
    tight = False
    for image in images:
        checked += 1
        for cyc in simple_cycles(n, _violated_by_coloring(g, image)):
            ell = len(cyc)
            longest = max(longest, ell)
            limit = 2 * n - ell + 1
            if ell % 2:
                longest_odd = max(longest_odd, ell)
                if side == "disjoint":
                    limit -= 1
            if colors > limit:
                bad.append(cyc)
            elif colors == limit:
                tight = True
    return CycleBoundReport(side, colors, checked, 2 * n - longest + 1 if longest else 2 * n,
                            2 * n - longest_odd if longest_odd else None,
                            longest, longest_odd, tuple(bad), tight)


def color_partitions(g: Graph, i: int) -> Iterator[tuple[int, ...]]:
    """Proper colourings of ``g`` with exactly ``i`` colours, one per renaming of colours.

    Colours are numbered by first appearance along the vertex order, so each
    partition of the vertices into ``i`` independent sets is produced once.
    """
    n = g.n
    image = [0] * n
    rows = g.rows

    def rec(v, used):
        if n - v < i - used:
            return
        if v == n:
            if used == i:
                yield tuple(image)
            return
        banned = {image[w] for w in iter_bits(rows[v] & ((1 << v) - 1))}
        for c in range(min(used + 1, i)):
            if c in banned:
                continue
            image[v] = c
            yield from rec(v + 1, max(used, c + 1))

    yield from rec(0, 0)


def verify_cycle_violation_bounds(g: SimpleGraph, i: int, samples: int | None = None, *,
                                  seed: int = 0, sides: Sequence[str] = ("disjoint", "crossed"),
                                  max_elements: int = 2_000_000) -> list[CycleBoundReport]:
    """Check the bounds on the surjective ``i``-colourings of both doubled graphs.

    By default every colouring is examined up to renaming of the colours
    (violated edges only depend on which vertices share a colour).  With
    ``samples`` set, that many random surjective colourings per side are drawn
    instead, seeded by ``seed``.
    """
    if i < 1:
        raise InvalidParameter("need at least one colour")
    rng = random.Random(seed)
    reports = []
    for side in sides:
        if side not in ("disjoint", "crossed"):
            raise InvalidParameter(f"unknown side {side!r}")
        doubled = disjoint_double(g) if side == "disjoint" else bipartite_double(g)
        if samples is None:
            def exhaustive(doubled=doubled):
                for k, image in enumerate(color_partitions(doubled, i)):
                    if k >= max_elements:
                        raise ResourceLimit(f"more than {max_elements} colourings to enumerate")
                    yield image
            images = exhaustive()
        else:
            images = _random_colorings(doubled, i, rng, samples, 1000 * samples + 1000)
        reports.append(check_coloring_cycles(g, side, i, images))
    return reports


def odd_cycle_coloring(g: SimpleGraph, cycle: Sequence[int]) -> tuple[int, ...]:
    """A colouring of ``g x K_2`` that violates ``cycle`` with ``2N - len(cycle) + 1`` colours.

    The side-0 copies of the cycle vertices share colour 0; every other
    vertex gets its own colour.
    """
    if not is_cycle_in(g, cycle):
        raise InvalidParameter("not a cycle of the graph")
    on_cycle = set(cycle)
    image = [0] * (2 * g.n)
    nxt = 1
    for x in range(2 * g.n):
        if x % 2 == 0 and x // 2 in on_cycle:
            continue
        image[x] = nxt
        nxt += 1
    return tuple(image)

"""Lattice points of dilated edge-constrained unit boxes.

``lattice_count(g, n)`` counts vectors ``x`` in ``{0..n}^V`` with
``x_u + x_v <= n`` on every edge, which are exactly the homomorphisms from
``g`` into the threshold graph on ``{0..n}`` with threshold ``n``.  The count
is a quasi-polynomial in ``n`` of period at most 2 whose leading coefficient
is the volume of the polytope ``{x in [0,1]^V : x_u + x_v <= 1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .errors import InternalConsistencyError, InvalidParameter
from .graphs import Graph, SimpleGraph
from .gt import GtReport, make_report, require_regular
from .homs import DEFAULT_NODE_BUDGET, count_hom, count_hom_complete_bipartite, count_hom_weighted
from .targets import threshold_graph

HELD_OUT = 2


def ladder(n: int):
    """Threshold graph on ``{0..n}`` with ``x ~ y`` iff ``x + y <= n``."""
    if n < 0:
        raise InvalidParameter("level must be non-negative")
    return threshold_graph(range(n + 1), n)


def lattice_count(g: Graph, n: int, *, budget: int | None = DEFAULT_NODE_BUDGET) -> int:
    return count_hom(g, ladder(n), budget=budget)


def _poly_eval(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def interpolate(xs: Sequence[int], ys: Sequence) -> tuple[Fraction, ...]:
    """Monomial coefficients (constant first) of the polynomial through the points."""
    k = len(xs)
    coeffs = [Fraction(0)] * k
    for i in range(k):
        # build the Lagrange basis polynomial for node i
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(k):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for m in range(len(basis) - 1):
                basis[m] -= xs[j] * basis[m + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for m in range(k):
            coeffs[m] += scale * basis[m]
    return tuple(coeffs)


@dataclass(frozen=True)
class EhrhartQuasiPolynomial:
    """``n -> even(n)`` for even ``n`` and ``odd(n)`` for odd ``n``; coefficients constant first."""

    even: tuple[Fraction, ...]
    odd: tuple[Fraction, ...]
    samples: tuple[int, ...] = ()

    def __call__(self, n: int) -> Fraction:
        return _poly_eval(self.odd if n % 2 else self.even, n)

    @property
    def leading(self) -> Fraction:
        return self.even[-1]

    @property
    def is_polynomial(self) -> bool:
        return self.even == self.odd

    def to_record(self) -> dict:
        fmt = lambda cs: [str(c) for c in cs]
        return {"even": fmt(self.even), "odd": fmt(self.odd), "leading": str(self.leading),
                "samples": list(self.samples)}


def ehrhart_interpolate(g: Graph, *, budget: int | None = DEFAULT_NODE_BUDGET) -> EhrhartQuasiPolynomial:
    """Fit both parity classes of ``lattice_count(g, n)`` with degree-``N`` polynomials.

    Each class is fitted on ``N + 1`` levels and checked on two more, so the
    levels ``0 .. 2N + 5`` are sampled.  A failed check or unequal leading
    coefficients raise :class:`InternalConsistencyError`.
    """
    deg = g.n
    per_class = deg + 1 + HELD_OUT
    levels = range(2 * per_class)
    counts = [lattice_count(g, n, budget=budget) for n in levels]
    parts = []
    for parity in (0, 1):
        xs = [n for n in levels if n % 2 == parity]
        ys = [counts[n] for n in xs]
        coeffs = interpolate(xs[:deg + 1], ys[:deg + 1])
        for x, y in zip(xs[deg + 1:], ys[deg + 1:]):
            if _poly_eval(coeffs, x) != y:
                raise InternalConsistencyError(
                    f"level {x}: interpolant gives {_poly_eval(coeffs, x)}, count is {y}")
        parts.append(coeffs)
    even, odd = parts
    if even[-1] != odd[-1]:
        raise InternalConsistencyError(f"leading coefficients differ: {even[-1]} vs {odd[-1]}")
    return EhrhartQuasiPolynomial(even, odd, tuple(counts))


def estab_volume(g: Graph, *, budget: int | None = DEFAULT_NODE_BUDGET) -> Fraction:
    return ehrhart_interpolate(g, budget=budget).leading


def stab_volume_complete_bipartite(a: int, b: int) -> Fraction:
    """``a! b! / (a + b)!``."""
    if a < 1 or b < 1:
        raise InvalidParameter("part sizes must be positive")
    return Fraction(factorial(a) * factorial(b), factorial(a + b))


def check_volume_gt(g: SimpleGraph, *, budget: int | None = DEFAULT_NODE_BUDGET) -> GtReport:
    """Compare ``vol(g) ** 2d`` with ``vol(K_{d,d}) ** N`` exactly.

    The volume of the complete bipartite polytope comes from the closed form;
    for bipartite graphs the edge relaxation has integral vertices.
    """
    d = require_regular(g)
    return make_report(g, d, estab_volume(g, budget=budget), stab_volume_complete_bipartite(d, d))


@dataclass(frozen=True)
class SampledWeightFunction:
    """Non-negative values ``tau(i / n)`` for ``i = 0..n``."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter("grid resolution must be positive")
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.n + 1:
            raise InvalidParameter(f"need {self.n + 1} grid values, got {len(vals)}")
        if any(v < 0 for v in vals):
            raise InvalidParameter("weight function values must be non-negative")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, tau: Callable[[Fraction], object], n: int) -> "SampledWeightFunction":
        return cls(n, tuple(Fraction(tau(Fraction(i, n))) for i in range(n + 1)))

    @classmethod
    def constant(cls, value, n: int) -> "SampledWeightFunction":
        return cls(n, (Fraction(value),) * (n + 1))


@dataclass(frozen=True)
class RiemannReport:
    inequality: GtReport
    riemann_sum: Fraction
    n: int

    @property
    def holds(self) -> bool:
        return self.inequality.holds

    def to_record(self) -> dict:
        rec = self.inequality.to_record()
        rec["level"] = self.n
        rec["riemann_sum"] = str(self.riemann_sum)
        return rec


def weighted_riemann_check(g: SimpleGraph, tau: SampledWeightFunction, *,
                           budget: int | None = DEFAULT_NODE_BUDGET) -> RiemannReport:
    """Weighted inequality at grid resolution ``n`` with vertex ``i`` of the ladder weighted ``tau(i/n)``.

    Both sides are normalised by powers of ``n``; ``riemann_sum`` is
    ``n ** -N`` times the weighted count from ``g``.
    """
    d = require_regular(g)
    n = tau.n
    h = ladder(n)
    lhs = count_hom_weighted(g, h, tau.values, budget=budget) / Fraction(n) ** g.n
    rhs = count_hom_complete_bipartite(d, d, h, tau.values) / Fraction(n) ** (2 * d)
    return RiemannReport(make_report(g, d, lhs, rhs), lhs, n)

"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when some check fails or a
counterexample is found, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .coloring import (chromatic_binomial, dominance_certificate, surjective_profile_pair,
                       verify_coefficient_compare, verify_cycle_violation_bounds)
from .enumerate import enumerate_graphs, regular_corpus
from .errors import SwaptrickError
from .graphs import Graph, format_graph, read_graph
from .gt import check_strongly_gt, format_number, iter_scan
from .homs import as_weights, count_hom_surjective, count_hom_weighted
from .polytope import SampledWeightFunction, check_volume_gt, ehrhart_interpolate, weighted_riemann_check
from .swap import verify_swap_bijection
from .targets import certify_target, enumerate_threshold_classes, recognize_threshold

PASS, FAIL, USAGE = 0, 1, 2


class Output:
    def __init__(self, fmt: str, stream=None):
        self.json = fmt == "json"
        self.stream = stream or sys.stdout

    def record(self, rec: dict, text: str | Iterable[str]) -> None:
        if self.json:
            self.stream.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            if isinstance(text, str):
                text = [text]
            for line in text:
                self.stream.write(line + "\n")
        self.stream.flush()


def parse_rational(s) -> Fraction:
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError):
        raise SwaptrickError(f"not a rational number: {s!r}") from None


def load_weights(path: str | None, h: Graph):
    """Read a JSON object mapping vertex numbers to rationals; unlisted vertices weigh 1."""
    if path is None:
        return None
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise SwaptrickError(f"{path}: invalid JSON ({e.msg}, line {e.lineno})") from None
    if not isinstance(raw, dict):
        raise SwaptrickError(f"{path}: expected a JSON object of vertex -> weight")
    lam = {}
    for k, v in raw.items():
        try:
            vertex = int(k)
        except ValueError:
            raise SwaptrickError(f"{path}: bad vertex key {k!r}") from None
        if not 0 <= vertex < h.n:
            raise SwaptrickError(f"{path}: vertex {vertex} not in target")
        lam[vertex] = parse_rational(v)
    return as_weights(lam, h.n)


def load_tau(path: str) -> SampledWeightFunction:
    tokens = Path(path).read_text().split()
    if len(tokens) < 2:
        raise SwaptrickError(f"{path}: need at least two grid values")
    return SampledWeightFunction(len(tokens) - 1, tuple(parse_rational(t) for t in tokens))


def parse_points(spec: str) -> list[int]:
    """``a..b`` (inclusive) or a comma-separated list."""
    try:
        if ".." in spec:
            lo, hi = spec.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise SwaptrickError(f"bad point list {spec!r}") from None


def _src(args) -> Graph:
    return read_graph(args.graph)


def _tgt(args) -> Graph:
    return read_graph(args.target, target=True)


def _indent(text: str) -> list[str]:
    return ["  " + ln for ln in text.rstrip("\n").splitlines()]


# -- subcommands ------------------------------------------------------------

def cmd_certify(args, out: Output) -> int:
    h = _tgt(args)
    cert = certify_target(h)
    lines = [cert.verdict.value]
    if cert.is_target:
        lines += [f"{u} {v} {c}" for (u, v), c in sorted(cert.coloring.items())]
    else:
        lines.append("odd cycle: " + " ".join(f"({u},{v})" for u, v in cert.odd_cycle))
    out.record(cert.to_record(), lines)
    return PASS if cert.is_target else FAIL


def cmd_count(args, out: Output) -> int:
    g = _src(args)
    if args.surjective is not None:
        value = Fraction(count_hom_surjective(g, args.surjective, budget=args.budget))
    else:
        h = _tgt(args) if args.target else None
        if h is None:
            raise SwaptrickError("count needs --target or --surjective")
        value = count_hom_weighted(g, h, load_weights(args.weights, h), budget=args.budget)
    out.record({"count": format_number(value)}, format_number(value))
    return PASS


def _gt_line(r) -> str:
    line = (f"N={r.n} d={r.d} {r.graph_id} {r.verdict.value} "
            f"lhs={format_number(r.lhs)} rhs_base={format_number(r.rhs_base)} "
            f"{format_number(r.cross_power_lhs)} vs {format_number(r.cross_power_rhs)}")
    return line


def cmd_gt_scan(args, out: Output) -> int:
    h = _tgt(args)
    lam = load_weights(args.weights, h)
    corpus = regular_corpus(args.nmax, args.dmax)
    failed = 0
    for r in iter_scan(h, corpus, lam, jobs=args.jobs):
        lines = [_gt_line(r)]
        if not r.holds:
            failed += 1
            lines += _indent(r.witness)
        out.record(r.to_record(), lines)
    if not out.json:
        out.record({}, f"{len(corpus)} graphs, {failed} FAILS")
    return FAIL if failed else PASS


def cmd_strongly_gt(args, out: Output) -> int:
    h = _tgt(args)
    lam = load_weights(args.weights, h)
    if args.graph:
        graphs = [_src(args)]
    elif args.nmax:
        graphs = [g for n in range(1, args.nmax + 1) for g in enumerate_graphs(n)]
    else:
        raise SwaptrickError("strongly-gt needs --graph or --nmax")
    failed = 0
    for g in graphs:
        r = check_strongly_gt(g, h, lam, budget=args.budget)
        lines = [f"{r.graph_id} {r.verdict.value} {format_number(r.disjoint)} vs {format_number(r.crossed)}"]
        if not r.holds:
            failed += 1
            lines += _indent(r.witness)
        out.record(r.to_record(), lines)
    return FAIL if failed else PASS


def cmd_chromatic(args, out: Output) -> int:
    g = _src(args)
    if args.doubled:
        disjoint, crossed = surjective_profile_pair(g, budget=args.budget)
        rec = {"disjoint": [str(c) for c in disjoint], "crossed": [str(c) for c in crossed]}
        out.record(rec, [f"{i} {a} {b}" for i, (a, b) in enumerate(zip(disjoint, crossed))])
    else:
        poly = chromatic_binomial(g, budget=args.budget)
        out.record({"basis": "binomial", "coeffs": [str(c) for c in poly.coeffs]},
                   [f"{i} {c}" for i, c in enumerate(poly.coeffs)])
    return PASS


def cmd_dominance(args, out: Output) -> int:
    g = _src(args)
    cert = dominance_certificate(g, parse_points(args.eval), budget=args.budget)
    lines = [f"top_index {cert.top_index}", f"top_sign {cert.top_sign}",
             f"coarse_bound {cert.coarse_bound}", f"girth_bound {cert.girth_bound}"]
    lines += [f"q={q} difference={v}" for q, v in cert.evaluations]
    out.record(cert.to_record(), lines)
    return PASS if cert.top_sign != "-" and cert.nonnegative_at_samples else FAIL


def cmd_coef_compare(args, out: Output) -> int:
    g = _src(args)
    rep = verify_coefficient_compare(g, budget=args.budget)
    lines = [f"odd girth {rep.odd_girth}, strict index {rep.strict_index}",
             f"equal above: {rep.equal_above}", f"strict at index: {rep.strict_below}",
             "PASS" if rep.passed else "FAIL"]
    out.record(rep.to_record(), lines)
    return PASS if rep.passed else FAIL


def cmd_cycle_bounds(args, out: Output) -> int:
    g = _src(args)
    reports = verify_cycle_violation_bounds(g, args.colors, args.samples, seed=args.seed)
    ok = True
    for r in reports:
        ok &= r.passed
        out.record(r.to_record(), f"{r.side}: checked {r.checked}, longest violated cycle "
                                  f"{r.longest_cycle}, tight {r.tight}, {'PASS' if r.passed else 'FAIL'}")
    return PASS if ok else FAIL


def cmd_ehrhart(args, out: Output) -> int:
    g = _src(args)
    q = ehrhart_interpolate(g, budget=args.budget)
    lines = ["even: " + " ".join(str(c) for c in q.even),
             "odd: " + " ".join(str(c) for c in q.odd),
             f"volume {q.leading}"]
    out.record(q.to_record(), lines)
    return PASS


def cmd_volume_gt(args, out: Output) -> int:
    g = _src(args)
    if args.tau:
        r = weighted_riemann_check(g, load_tau(args.tau), budget=args.budget)
        out.record(r.to_record(), [_gt_line(r.inequality), f"riemann_sum {r.riemann_sum}"])
    else:
        r = check_volume_gt(g, budget=args.budget)
        out.record(r.to_record(), _gt_line(r))
    return PASS if r.holds else FAIL


def cmd_thresholds(args, out: Output) -> int:
    for m, h in enumerate(enumerate_threshold_classes(args.n)):
        pattern = "".join("1" if h.has_loop(v) else "0" for v in range(h.n))
        rep = recognize_threshold(h).representation
        rec = {"index": m, "loops": pattern, "graph": format_graph(h),
               "weights": [str(w) for w in rep.weights], "t": str(rep.t)}
        lines = [f"# {m} loops={pattern}"]
        lines += ["".join(str(x) for x in row) for row in h.adjacency_matrix()]
        out.record(rec, lines)
    return PASS


def cmd_swap_verify(args, out: Output) -> int:
    g, h = _src(args), _tgt(args)
    r = verify_swap_bijection(g, h)
    lines = [f"Hom(G+G,H): {r.disjoint_total} total, {r.disjoint_bsp} with bsp",
             f"Hom(GxK2,H): {r.crossed_total} total, {r.crossed_bsp} with bsp",
             f"images valid {r.images_valid}, injective {r.injective}, roundtrip {r.roundtrip_ok}",
             "PASS" if r.passed else "FAIL"]
    out.record(r.to_record(), lines)
    return PASS if r.passed else FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="json writes one JSON record per line")
    common.add_argument("--budget", type=int, default=50_000_000, help="search node budget")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for scans")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    p = argparse.ArgumentParser(prog="swaptrick", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("certify", cmd_certify, "decide whether a target is a bipartite swapping target")
    sp.add_argument("--target", required=True)

    sp = add("count", cmd_count, "count (weighted) homomorphisms")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--target")
    sp.add_argument("--weights")
    sp.add_argument("--surjective", type=int, metavar="I", help="count proper colourings using all I colours")

    sp = add("gt-scan", cmd_gt_scan, "check the regular-graph inequality over all small regular graphs")
    sp.add_argument("--target", required=True)
    sp.add_argument("--nmax", type=int, default=8)
    sp.add_argument("--dmax", type=int, default=3)
    sp.add_argument("--weights")

    sp = add("strongly-gt", cmd_strongly_gt, "compare counts from two copies against the double cover")
    sp.add_argument("--target", required=True)
    sp.add_argument("--graph")
    sp.add_argument("--nmax", type=int, help="scan every graph on at most this many vertices")
    sp.add_argument("--weights")

    sp = add("chromatic", cmd_chromatic, "chromatic polynomial in the binomial basis")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--basis", choices=("binomial",), default="binomial")
    sp.add_argument("--doubled", action="store_true", help="profiles of both doubled graphs")

    sp = add("dominance", cmd_dominance, "sign of the chromatic difference between the doubled graphs")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--eval", default="2..50", help="points a..b or a,b,c")

    sp = add("coef-compare", cmd_coef_compare, "compare surjective colouring counts of the doubled graphs")
    sp.add_argument("--graph", required=True)

    sp = add("cycle-bounds", cmd_cycle_bounds, "check violated-cycle bounds on surjective colourings")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--colors", type=int, required=True)
    sp.add_argument("--samples", type=int)

    sp = add("ehrhart", cmd_ehrhart, "lattice-count quasi-polynomial and volume")
    sp.add_argument("--graph", required=True)

    sp = add("volume-gt", cmd_volume_gt, "volume inequality, or its weighted grid version with --tau")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--tau", help="file of n+1 rational grid values")

    sp = add("thresholds", cmd_thresholds, "list the threshold graphs on n vertices")
    sp.add_argument("--n", type=int, required=True)

    sp = add("swap-verify", cmd_swap_verify, "check the swap bijection by full enumeration")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--target", required=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else PASS
    for name in ("budget", "jobs", "nmax", "dmax", "n", "colors", "samples"):
        val = getattr(args, name, None)
        if val is not None and val < (0 if name == "n" else 1):
            print(f"error: --{name} must be positive", file=sys.stderr)
            return USAGE
    out = Output(args.format)
    try:
        return args.func(args, out)
    except (SwaptrickError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE

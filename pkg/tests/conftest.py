from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import settings, strategies as st

from swaptrick import SimpleGraph, TargetGraph

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ROOT = Path(__file__).resolve().parent.parent
GRAPHS = ROOT / "demos" / "graphs"


@st.composite
def simple_graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


@st.composite
def target_graphs(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return TargetGraph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


# acceptance results: key -> (passed, seconds, limit, title, detail)
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(str(k).rstrip("b")), str(k))):
        ok, secs, limit, title, detail = ACCEPTANCE[key]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {key:<3} {status}  {secs:7.2f}s / {limit}s  {title}: {detail}")

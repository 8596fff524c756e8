import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from posetgap.figures import load_figure
from posetgap.poset import Poset, transitive_closure

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def posets(draw, min_n=0, max_n=8):
    """Random strict orders: upper-triangular relation under a shuffled labeling."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(n)))
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                rows[order[i]] |= 1 << order[j]
    return Poset.from_up([f"p{i}" for i in range(n)], transitive_closure(rows))


@pytest.fixture(scope="session")
def figures():
    return {key: load_figure(key) for key in ("x", "x_avoiding", "with_x", "deletion", "orchid")}


ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {criterion}" + (f"  ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

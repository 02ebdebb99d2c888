from __future__ import annotations

import sys
from itertools import product as _product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zforce.graph import FamilySpec, ProductSpec, build  # noqa: E402

SMALL_FAMILIES = (
    [FamilySpec("path", (n,)) for n in range(1, 11)]
    + [FamilySpec("cycle", (n,)) for n in range(3, 11)]
    + [FamilySpec("complete", (n,)) for n in range(1, 11)]
    + [FamilySpec("empty", (n,)) for n in range(1, 6)]
    + [FamilySpec("complete_bipartite", (a, b)) for a in range(1, 6) for b in range(1, a + 1) if a + b <= 10]
    + [FamilySpec("wheel", (n,)) for n in range(4, 11)]
    + [FamilySpec("mary_tree", p) for p in [(2, 1), (2, 2), (3, 1)]]
    + [FamilySpec("petersen")]
)

FACTORS = [
    FamilySpec("path", (2,)),
    FamilySpec("path", (3,)),
    FamilySpec("cycle", (3,)),
    FamilySpec("cycle", (4,)),
    FamilySpec("complete", (2,)),
    FamilySpec("complete", (3,)),
    FamilySpec("empty", (2,)),
    FamilySpec("complete", (1,)),
    FamilySpec("path", (4,)),
    FamilySpec("cycle", (5,)),
]


def small_products(max_order: int, ops=("cartesian", "strong", "lexicographic", "corona")):
    out = []
    for op in ops:
        for a, b in _product(FACTORS, repeat=2):
            order = a.order * b.order + (a.order if op == "corona" else 0)
            if 2 <= order <= max_order:
                out.append(ProductSpec(op, a, b))
    return out


def suite_specs(max_order: int = 10):
    fams = [s for s in SMALL_FAMILIES if s.order <= max_order]
    return fams + small_products(max_order)


@pytest.fixture(scope="session")
def suite_graphs():
    return [(str(s), build(s)) for s in suite_specs(10)]


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

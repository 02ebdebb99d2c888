"""Desk-scale acceptance suite.

Each test is one criterion.  It records a PASS/FAIL line with the measured
runtime against its budget; the lines are repeated at the end of the run.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest
from conftest import ACCEPTANCE_LINES, small_products, suite_specs

from zforce.constructions import (
    cartesian_lower_bound,
    corona_construction,
    grid_construction,
    known_failed_forcing_number,
    lexicographic_construction,
    prism_construction,
    product_closed_form,
    strong_grid_construction,
    strong_torus_construction,
    torus_construction,
    two_white_neighbours,
)
from zforce.forcing import derived_coloring, derived_coloring_queue, is_failed, is_maximal_failed, is_stalled
from zforce.graph import (
    FamilySpec,
    ProductSpec,
    VertexSet,
    build,
    cartesian_product,
    complete,
    corona,
    cycle,
    is_complete,
    lexicographic_product,
    path,
    strong_product,
)
from zforce.oracle import (
    BASIS_NO_MODULE,
    EXHAUSTIVE,
    STRUCTURAL,
    failed_zero_forcing_number,
    thm27_upper_bound,
    verify_sharpness,
    zero_forcing_number,
)

P = lambda n: FamilySpec("path", (n,))  # noqa: E731
C = lambda n: FamilySpec("cycle", (n,))  # noqa: E731
K = lambda n: FamilySpec("complete", (n,))  # noqa: E731


def F(spec) -> int:
    return failed_zero_forcing_number(build(spec)).value


@contextmanager
def criterion(label: str, budget: float):
    """Time the body, record one PASS/FAIL line, and re-raise any mismatch."""
    failures: list[str] = []
    start = time.perf_counter()
    try:
        yield failures
    finally:
        elapsed = time.perf_counter() - start
        over = elapsed >= budget
        ok = not failures and not over and sys.exc_info()[0] is None
        line = f"{'PASS' if ok else 'FAIL'} {label}: {elapsed:.2f}s (budget {budget:g}s)"
        if failures:
            line += f"; {len(failures)} mismatch(es), first: {failures[0]}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert not failures, failures[:5]
    assert not over, f"{label} took {elapsed:.2f}s, budget {budget}s"


def family_table_specs():
    specs = [P(n) for n in range(2, 13)] + [C(n) for n in range(3, 13)] + [K(n) for n in range(2, 13)]
    specs += [FamilySpec("complete_bipartite", (a, b)) for a in range(1, 12) for b in range(1, a + 1) if 3 <= a + b <= 12]
    specs += [FamilySpec("mary_tree", p) for p in [(2, 1), (2, 2), (3, 1), (3, 2)]]
    specs += [FamilySpec("wheel", (n,)) for n in range(4, 11)]
    specs.append(FamilySpec("petersen"))
    return specs


def test_1_family_table():
    with criterion("1 family table, exact F vs closed forms", 60) as bad:
        specs = family_table_specs()
        assert all(s.order <= 13 for s in specs)
        for spec in specs:
            want, got = known_failed_forcing_number(spec), F(spec)
            if want != got:
                bad.append(f"{spec}: expected {want}, got {got}")
        assert known_failed_forcing_number(FamilySpec("wheel", (5,))) == 3
        assert F(FamilySpec("petersen")) == 6


def test_2_square_grids():
    with criterion("2a grid P_n x P_n, n=2,3", 1) as bad:
        for n in (2, 3):
            if F(ProductSpec("cartesian", P(n), P(n))) != n * n - n:
                bad.append(f"n={n}")
    with criterion("2b grid P_4 x P_4", 30) as bad:
        got = F(ProductSpec("cartesian", P(4), P(4)))
        if got != 12:
            bad.append(f"n=4: got {got}")


def test_3_complete_cartesian():
    with criterion("3 K_4 x K_2 = 4, K_4 x K_3 = 8", 60) as bad:
        for m, want in [(2, 4), (3, 8)]:
            got = F(ProductSpec("cartesian", K(4), K(m)))
            if got != want or product_closed_form("cartesian", K(4), K(m)) != want:
                bad.append(f"K_4 x K_{m}: got {got}")


def test_4_prism_values_and_bound():
    with criterion("4 P_2 x C_4 = 5, P_2 x C_5 = 6, bound 5", 5) as bad:
        for n, want in [(4, 5), (5, 6)]:
            got = F(ProductSpec("cartesian", P(2), C(n)))
            if got != want:
                bad.append(f"P_2 x C_{n}: got {got}")
        bound, basis = thm27_upper_bound(build(ProductSpec("cartesian", P(2), C(4))))
        if (bound, basis) != (5, BASIS_NO_MODULE):
            bad.append(f"bound {bound} via {basis}")


def test_5_constructions():
    with criterion("5 grid/torus/prism/strong-grid constructions", 120) as bad:
        for n in range(2, 9):
            for m in range(2, n + 1):
                res = grid_construction(n, m)
                r = 0 if n == m else (n - m) % (m - 1)
                size = n * m - n if r == 0 else n * m - n - m + 2
                g = res.graph
                if len(res.set) != size or not is_failed(g, res.set):
                    bad.append(f"grid {n},{m}")
                if m > 2 and not is_maximal_failed(g, res.set):
                    bad.append(f"grid {n},{m} not maximal")
        for m in range(3, 8):
            for n in range(3, 8):
                for fn in (torus_construction, strong_torus_construction):
                    res = fn(m, n)
                    if len(res.set) != -(-m * n // 2) or not is_stalled(res.graph, res.set):
                        bad.append(f"{fn.__name__} {m},{n}")
        for n in range(3, 13):
            res = prism_construction(n)
            if len(res.set) != -(-n // 2) + 3 * (n // 4) or not is_stalled(res.graph, res.set):
                bad.append(f"prism {n}")
        for n in range(2, 8):
            for m in range(2, n + 1):
                res = strong_grid_construction(n, m)
                size = n * m - m + max(0, -(-(m - 4) // 3))
                g = res.graph
                if len(res.set) != size or not is_failed(g, res.set) or not is_maximal_failed(g, res.set):
                    bad.append(f"strong grid {n},{m}")


def test_6_complete_products():
    with criterion("6 strong completeness, K_2 products = 4", 10) as bad:
        for n in range(1, 7):
            for m in range(1, 7):
                if not is_complete(strong_product(complete(n), complete(m))):
                    bad.append(f"K_{n} strong K_{m} not complete")
        for op in ("strong", "lexicographic"):
            got = F(ProductSpec(op, K(2), K(3)))
            if got != 4 or product_closed_form(op, K(2), K(3)) != 4:
                bad.append(f"{op}: got {got}")
        got = F(ProductSpec("corona", K(2), K(2)))
        if got != 4 or product_closed_form("corona", K(2), K(2)) != 4:
            bad.append(f"corona: got {got}")


def test_7_sharpness_certificates():
    cases = [
        ("P_10 lex P_4", lexicographic_product(path(10), path(4)), lambda: lexicographic_construction(path(10), path(4)), 37),
        ("C_3 lex C_4", lexicographic_product(cycle(3), cycle(4)), lambda: lexicographic_construction(cycle(3), cycle(4)), 10),
        ("P_3 corona P_4", corona(path(3), path(4)), lambda: corona_construction(path(3), path(4)), 12),
        ("C_4 corona C_3", corona(cycle(4), cycle(3)), lambda: corona_construction(cycle(4), cycle(3)), 14),
    ]
    with criterion("7 sharpness certificates 37, 10, 12, 14", 5) as bad:
        for name, g, make, want in cases:
            res = verify_sharpness(g, make().set)
            cert = res.certificate
            if not res.exact or cert.value != want or cert.route != STRUCTURAL or not cert.verify(g):
                bad.append(f"{name}: {res.reason}, value {cert.value}")


def test_8_property_suites():
    rng = random.Random(20261019)
    with criterion("8 property suites", 180) as bad:
        graphs = [build(s) for s in suite_specs(10)]

        for _ in range(1000):
            g = rng.choice(graphs)
            s = VertexSet(rng.getrandbits(g.order), g.order)
            t = s | VertexSet(rng.getrandbits(g.order), g.order)
            if len(derived_coloring(g, s)[0]) == g.order and len(derived_coloring(g, t)[0]) != g.order:
                bad.append(f"forcing not upward closed: {s} <= {t}")
            if is_failed(g, t) and not is_failed(g, s):
                bad.append(f"failure not downward closed: {s} <= {t}")

        for _ in range(1000):
            g = rng.choice(graphs)
            s = VertexSet(rng.getrandbits(g.order), g.order)
            low = derived_coloring(g, s)[0]
            if derived_coloring_queue(g, s) != low or derived_coloring_queue(g, s, highest_first=True) != low:
                bad.append(f"order dependence on {s}")

        for g in graphs:
            z = zero_forcing_number(g).value
            f = failed_zero_forcing_number(g).value
            if not z - 1 <= f <= g.order - 1:
                bad.append(f"sandwich: Z={z} F={f} n={g.order}")

        cache: dict = {}

        def fval(spec):
            if spec not in cache:
                cache[spec] = F(spec)
            return cache[spec]

        for spec in small_products(16, ops=("cartesian",)):
            lb = cartesian_lower_bound(fval(spec.left), spec.left.order, fval(spec.right), spec.right.order)
            if lb > fval(spec):
                bad.append(f"{spec}: lower bound {lb} > F {fval(spec)}")

        for m in range(3, 8):
            for n in range(3, 8):
                box = cartesian_product(cycle(m), cycle(n))
                strong = strong_product(cycle(m), cycle(n))
                base = torus_construction(m, n).set
                samples = [base] + [VertexSet(base.mask & rng.getrandbits(box.order), box.order) for _ in range(20)]
                for s in samples:
                    if not two_white_neighbours(box, s):
                        bad.append(f"torus {m}x{n}: hypothesis fails for {s}")
                    elif not is_stalled(strong, s):
                        bad.append(f"torus {m}x{n}: {s} not stalled in strong product")


def test_9_report_determinism():
    cmd = [sys.executable, "-m", "zforce", "report"]
    with criterion("9 report byte-identical across runs and workers", 120) as bad:
        runs = [subprocess.run(cmd + extra, capture_output=True, check=False) for extra in ([], [], ["--workers", "4"])]
        if runs[0].returncode != 0:
            bad.append(f"report exit {runs[0].returncode}")
        if not runs[0].stdout == runs[1].stdout == runs[2].stdout:
            bad.append("outputs differ")
        if EXHAUSTIVE.encode() not in runs[0].stdout:
            bad.append("no exhaustive rows")

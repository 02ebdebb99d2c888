"""Reproduction table: published values of F recomputed by search or by sharpness certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .constructions import (
    corona_construction,
    known_failed_forcing_number,
    lexicographic_construction,
    product_closed_form,
)
from .graph import (
    FamilySpec,
    ProductSpec,
    build,
    corona,
    cycle,
    lexicographic_product,
    path,
)
from .oracle import EXHAUSTIVE, STRUCTURAL, failed_zero_forcing_number, thm27_upper_bound, verify_sharpness


@dataclass(frozen=True)
class Row:
    claim: str
    expected: int
    computed: int
    route: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def format(self, width: int = 34) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.claim:<{width}} {self.expected:>8} {self.computed:>8}  {self.route:<11} {verdict}"


def family_specs() -> list[FamilySpec]:
    """Every family instance checked against the closed-form table."""
    out = [FamilySpec("path", (n,)) for n in range(2, 13)]
    out += [FamilySpec("cycle", (n,)) for n in range(3, 13)]
    out += [FamilySpec("complete", (n,)) for n in range(2, 13)]
    out += [
        FamilySpec("complete_bipartite", (a, b))
        for total in range(3, 13)
        for b in range(1, total // 2 + 1)
        for a in [total - b]
    ]
    out += [FamilySpec("mary_tree", p) for p in [(2, 1), (2, 2), (3, 1), (3, 2)]]
    out += [FamilySpec("wheel", (n,)) for n in range(4, 11)]
    out.append(FamilySpec("petersen"))
    return out


_NAMES = {
    "path": "P_{}",
    "cycle": "C_{}",
    "complete": "K_{}",
    "wheel": "W_{}",
}


def family_name(spec: FamilySpec) -> str:
    if spec.kind in _NAMES:
        return _NAMES[spec.kind].format(*spec.params)
    if spec.kind == "complete_bipartite":
        return "K_{{{},{}}}".format(*spec.params)
    if spec.kind == "mary_tree":
        return "T({},{})".format(*spec.params)
    return spec.kind.capitalize()


def _exhaustive(claim: str, spec, expected: int, workers: int) -> Row:
    g = build(spec)
    return Row(claim, expected, failed_zero_forcing_number(g, workers=workers).value, EXHAUSTIVE)


def _sharp(claim: str, g, construction, expected: int) -> Row:
    res = verify_sharpness(g, construction.set)
    return Row(claim, expected, res.certificate.value if res.exact else -1, STRUCTURAL)


def rows(workers: int = 1) -> Iterator[Row]:
    for spec in family_specs():
        yield _exhaustive(f"F({family_name(spec)})", spec, known_failed_forcing_number(spec), workers)

    P, K, C = (lambda n: FamilySpec("path", (n,))), (lambda n: FamilySpec("complete", (n,))), (
        lambda n: FamilySpec("cycle", (n,))
    )
    for n in (2, 3, 4):
        yield _exhaustive(
            f"F(P_{n}□P_{n})", ProductSpec("cartesian", P(n), P(n)), product_closed_form("cartesian", P(n), P(n)), workers
        )
    for m in (2, 3):
        yield _exhaustive(
            f"F(K_4□K_{m})", ProductSpec("cartesian", K(4), K(m)), product_closed_form("cartesian", K(4), K(m)), workers
        )
    yield _exhaustive("F(P_2□C_4)", ProductSpec("cartesian", P(2), C(4)), 5, workers)
    yield _exhaustive("F(P_2□C_5)", ProductSpec("cartesian", P(2), C(5)), 6, workers)
    yield Row("bound(P_2□C_4)", 5, thm27_upper_bound(build(ProductSpec("cartesian", P(2), C(4))))[0], STRUCTURAL)
    yield _exhaustive("F(K_2⊠K_3)", ProductSpec("strong", K(2), K(3)), product_closed_form("strong", K(2), K(3)), workers)
    yield _exhaustive(
        "F(K_2·K_3)", ProductSpec("lexicographic", K(2), K(3)), product_closed_form("lexicographic", K(2), K(3)), workers
    )
    yield _exhaustive("F(K_2∘K_2)", ProductSpec("corona", K(2), K(2)), product_closed_form("corona", K(2), K(2)), workers)

    yield _sharp("F(P_10·P_4)", lexicographic_product(path(10), path(4)), lexicographic_construction(path(10), path(4)), 37)
    yield _sharp("F(C_3·C_4)", lexicographic_product(cycle(3), cycle(4)), lexicographic_construction(cycle(3), cycle(4)), 10)
    yield _sharp("F(P_3∘P_4)", corona(path(3), path(4)), corona_construction(path(3), path(4)), 12)
    yield _sharp("F(C_4∘C_3)", corona(cycle(4), cycle(3)), corona_construction(cycle(4), cycle(3)), 14)


def render(table: list[Row]) -> str:
    head = f"{'claim':<34} {'expected':>8} {'computed':>8}  {'route':<11} verdict"
    lines = [head, "-" * len(head)]
    lines += [r.format() for r in table]
    failed = sum(not r.passed for r in table)
    lines.append(f"{len(table) - failed}/{len(table)} claims reproduced")
    return "\n".join(lines)

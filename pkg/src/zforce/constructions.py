"""Failed zero forcing sets for graph products, and the known closed forms.

Every construction returns a :class:`ConstructionResult` carrying the graph it
lives on, so its claims can be checked with the forcing predicates.  Grid
style constructions are described with 1-based ``(i, j)`` coordinates and
mapped onto the row-major product indexing of :mod:`zforce.graph`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .forcing import is_failed, is_maximal_failed, is_stalled
from .graph import (
    FamilySpec,
    Graph,
    ParameterError,
    VertexSet,
    as_mask,
    bits,
    build_family,
    cartesian_product,
    corona,
    cycle,
    format_set,
    isolated_vertices,
    lexicographic_product,
    path,
    strong_product,
)
from .oracle import DEFAULT_CAP, Certificate, failed_zero_forcing_number, verify_sharpness

CLAIMS = ("failed", "stalled", "maximal", "exact_F")


class NoClosedForm(LookupError):
    pass


class WitnessError(ValueError):
    """A supplied certificate does not fit the graph it is meant for."""


class MissingWitnessError(WitnessError):
    pass


@dataclass(frozen=True)
class ConstructionResult:
    set: VertexSet
    predicted_size: int
    claims: frozenset[str]
    source: str
    graph: Graph | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.set) != self.predicted_size:
            raise AssertionError(
                f"{self.source}: constructed {len(self.set)} vertices, predicted {self.predicted_size}"
            )
        unknown = set(self.claims) - set(CLAIMS)
        if unknown:
            raise ValueError(f"unknown claims {sorted(unknown)}")

    def check(self, g: Graph | None = None) -> dict[str, bool]:
        """Evaluate every claim on the graph, in :data:`CLAIMS` order."""
        g = g or self.graph
        if g is None:
            raise ValueError("no graph to check against")
        tests = {
            "failed": lambda: is_failed(g, self.set),
            "stalled": lambda: is_stalled(g, self.set),
            "maximal": lambda: is_maximal_failed(g, self.set),
            "exact_F": lambda: verify_sharpness(g, self.set).exact,
        }
        return {c: tests[c]() for c in CLAIMS if c in self.claims}

    def to_record(self) -> dict:
        return {
            "kind": "construction",
            "source": self.source,
            "order": self.set.order,
            "set": self.set.to_list(),
            "predicted_size": self.predicted_size,
            "claims": [c for c in CLAIMS if c in self.claims],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    @classmethod
    def from_record(cls, rec: dict, graph: Graph | None = None) -> "ConstructionResult":
        return cls(
            VertexSet.of(int(rec["order"]), rec["set"]),
            int(rec["predicted_size"]),
            frozenset(rec["claims"]),
            rec["source"],
            graph,
        )

    def to_text(self) -> str:
        return "\n".join(
            [
                f"source: {self.source}",
                f"predicted_size: {self.predicted_size}",
                f"size: {len(self.set)}",
                f"claims: {','.join(c for c in CLAIMS if c in self.claims)}",
                f"set: {format_set(self.set)}",
            ]
        )


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# --------------------------------------------------------------------------
# closed forms


def known_failed_forcing_number(spec: FamilySpec) -> int:
    """F for the connected families with a known value."""
    k, p = spec.kind, spec.params
    n = spec.order
    if k == "path":
        return _ceil_div(n - 2, 2)
    if k == "cycle":
        return n // 2
    if k == "complete" and n >= 2:
        return n - 2
    if k == "mary_tree":
        return n - 2
    if k == "wheel":
        return 3 if n == 5 else (2 * n - 2) // 3
    if k == "complete_bipartite" and n >= 3:
        return p[0] + p[1] - 2
    if k == "petersen":
        return 6
    raise NoClosedForm(f"no closed form for F({spec})")


def product_closed_form(op: str, left: FamilySpec, right: FamilySpec) -> int | None:
    """Exact F of a two-factor product when a closed form is known, else None."""
    op = {"box": "cartesian", "lex": "lexicographic"}.get(op, op)
    a, b = left.order, right.order
    both_complete = left.kind == right.kind == "complete"
    if op == "cartesian":
        if both_complete and a >= 4 and b >= 2:
            return a * b - 4
        if left.kind == right.kind == "path" and a == b and a >= 2:
            return a * a - a
    elif op in ("strong", "lexicographic"):
        if both_complete and a >= 2 and b >= 2:
            return a * b - 2
    elif op == "corona":
        if both_complete and a >= 2 and b >= 2:
            return a * b + a - 2
    return None


def cartesian_lower_bound(f_g: int, n_g: int, f_h: int, n_h: int) -> int:
    """``max(|H| F(G), |G| F(H))``, a lower bound on F of the Cartesian product."""
    return max(n_h * f_g, n_g * f_h)


# --------------------------------------------------------------------------
# Cartesian products


def _grid_white_cells(n: int, m: int) -> set[tuple[int, int]]:
    """Cells ``(row, col)`` left white by the diagonal walk on an m x n grid.

    Starts on the main diagonal from (1,1) to (m,m).  Legs then alternate
    between the two diagonal directions, each one stopping on the first cell
    in row 1, row m or column n, while the fresh diagonal through the current
    end point avoids earlier white cells.  Finally, from the last end point,
    the untraced diagonal and then the traced one are followed in both
    directions until they run into a white cell or the border.
    """
    inside = lambda i, j: 1 <= i <= m and 1 <= j <= n  # noqa: E731
    white = {(i, i) for i in range(1, m + 1)}
    v = (m, m)
    main, anti = (1, 1), (1, -1)
    last = main

    def line(p, d):
        out = []
        for s in (-1, 1):
            i, j = p
            while inside(i + s * d[0], j + s * d[1]):
                i, j = i + s * d[0], j + s * d[1]
                out.append((i, j))
        return out

    while True:
        d = anti if last == main else main
        cells = line(v, d)
        if not cells or white.intersection(cells):
            break
        # v is on the border, so only one direction stays inside
        step = next((s * d[0], s * d[1]) for s in (-1, 1) if inside(v[0] + s * d[0], v[1] + s * d[1]))
        i, j = v
        while True:
            i, j = i + step[0], j + step[1]
            white.add((i, j))
            if i in (1, m) or j == n:
                break
        v, last = (i, j), d

    for d in (anti if last == main else main, last):
        for s in (-1, 1):
            i, j = v
            while inside(i + s * d[0], j + s * d[1]) and (i + s * d[0], j + s * d[1]) not in white:
                i, j = i + s * d[0], j + s * d[1]
                white.add((i, j))
    return white


def grid_size(n: int, m: int) -> int:
    r = 0 if n == m else (n - m) % (m - 1)
    return n * m - n if r == 0 else n * m - n - m + 2


def grid_construction(n: int, m: int) -> ConstructionResult:
    """Failed set on ``P_n □ P_m`` (n >= m >= 2) from the diagonal walk.

    The usual ``v_{i,j}`` has row ``i`` in P_m and column ``j`` in P_n,
    i.e. product index ``(j-1)*m + (i-1)``.  Maximal when ``m > 2``.
    """
    if not n >= m >= 2:
        raise ParameterError("grid construction needs n >= m >= 2")
    g = cartesian_product(path(n), path(m))
    white = _grid_white_cells(n, m)
    blue = [(j - 1) * m + (i - 1) for i in range(1, m + 1) for j in range(1, n + 1) if (i, j) not in white]
    claims = {"failed", "maximal"} if m > 2 else {"failed"}
    return ConstructionResult(VertexSet.of(g.order, blue), grid_size(n, m), frozenset(claims), "grid", g)


def _parity_set(m: int, n: int) -> list[int]:
    # v_{i,j} -> (i-1)*n + (j-1); i runs over C_m, j over C_n
    return [(i - 1) * n + (j - 1) for i in range(1, m + 1) for j in range(1, n + 1) if (i - j) % 2 == 0]


def torus_construction(m: int, n: int) -> ConstructionResult:
    """Same-parity vertices of ``C_m □ C_n``; each has two white neighbours."""
    if m < 3 or n < 3:
        raise ParameterError("torus construction needs m, n >= 3")
    g = cartesian_product(cycle(m), cycle(n))
    s = VertexSet.of(g.order, _parity_set(m, n))
    return ConstructionResult(s, _ceil_div(m * n, 2), frozenset({"failed", "stalled"}), "torus", g)


def prism_size(n: int) -> int:
    return _ceil_div(n, 2) + 3 * (n // 4)


def prism_construction(n: int) -> ConstructionResult:
    """Stalled set on ``P_2 □ C_n``, chosen by ``n mod 4``."""
    if n < 3:
        raise ParameterError("prism construction needs n >= 3")
    g = cartesian_product(path(2), cycle(n))
    drop = {0: set(), 1: {n}, 2: {n, n - 1}, 3: {n, n - 1}}[n % 4]
    top = [j for j in range(1, n + 1) if j % 4 and j not in drop]
    bottom = [j for j in range(1, n + 1) if j % 2 == 0]
    if n % 4 == 1:
        bottom.append(n)
    blue = [j - 1 for j in top] + [n + j - 1 for j in bottom]
    return ConstructionResult(
        VertexSet.of(g.order, blue), prism_size(n), frozenset({"failed", "stalled"}), "prism", g
    )


# --------------------------------------------------------------------------
# strong products


def strong_grid_size(n: int, m: int) -> int:
    return n * m - m + _ceil_div(m - 4, 3)


def strong_grid_construction(n: int, m: int) -> ConstructionResult:
    """Maximal failed set on ``P_n ⊠ P_m``: all but the first copy of P_m, plus every third vertex of it.

    ``v_{i,j}`` has ``i`` in P_n and ``j`` in P_m, index ``(i-1)*m + (j-1)``.
    For m = 2 and m = 3 no first-copy vertex is kept.
    """
    if not n >= m >= 2:
        raise ParameterError("strong grid construction needs n >= m >= 2")
    g = strong_product(path(n), path(m))
    keep_first = [3 * k for k in range(1, max(0, _ceil_div(m - 4, 3)) + 1)]
    blue = [j - 1 for j in keep_first] + list(range(m, n * m))
    return ConstructionResult(
        VertexSet.of(g.order, blue), strong_grid_size(n, m), frozenset({"failed", "maximal"}), "strong-grid", g
    )


def strong_torus_construction(m: int, n: int) -> ConstructionResult:
    """The torus parity set reused on ``C_m ⊠ C_n``, where extra edges keep it stalled."""
    if m < 3 or n < 3:
        raise ParameterError("strong torus construction needs m, n >= 3")
    g = strong_product(cycle(m), cycle(n))
    s = VertexSet.of(g.order, _parity_set(m, n))
    return ConstructionResult(s, _ceil_div(m * n, 2), frozenset({"failed", "stalled"}), "strong-torus", g)


def two_white_neighbours(g: Graph, s) -> bool:
    """Whether every member of ``s`` has at least two neighbours outside ``s`` in ``g``."""
    b = as_mask(s, g.order)
    return all((g.rows[u] & ~b).bit_count() >= 2 for u in bits(b))


# --------------------------------------------------------------------------
# lexicographic products and coronas


def _witness(graph: Graph, cert: Certificate | None, cap: int, what: str) -> VertexSet:
    if cert is None:
        if cap <= 0:
            raise MissingWitnessError(f"a maximum failed set for {what} is required")
        return failed_zero_forcing_number(graph, cap=cap).witness
    if cert.target != "F":
        raise WitnessError(f"expected an F certificate for {what}, got {cert.target}")
    if cert.witness.order != graph.order:
        raise WitnessError(
            f"certificate witness is over {cert.witness.order} vertices but {what} has {graph.order}"
        )
    if not is_failed(graph, cert.witness):
        raise WitnessError(f"certificate witness is not failed on {what}")
    return cert.witness


def lexicographic_construction(
    g: Graph, h: Graph, max_failed_inner: Certificate | None = None, cap: int = DEFAULT_CAP
) -> ConstructionResult:
    """Maximal failed set on ``g · h``.

    If ``h`` has no isolated vertex, everything outside the last copy of ``h``
    is blue, plus a maximum failed set of ``h`` inside that copy.  Otherwise
    the copy of ``g`` through the last isolated vertex of ``h`` is left with
    only a maximum failed set of ``g`` blue.  ``max_failed_inner`` is the
    F-certificate for whichever factor is needed; with ``None`` it is computed
    exhaustively (``cap=0`` forbids that).
    """
    m, n = g.order, h.order
    prod = lexicographic_product(g, h)
    iso = isolated_vertices(h).to_list()
    if not iso:
        w = _witness(h, max_failed_inner, cap, "H")
        last = (m - 1) * n
        blue = [x for x in range(last)] + [last + b for b in w]
        size = n * m - n + len(w)
    else:
        b0 = iso[-1]
        w = _witness(g, max_failed_inner, cap, "G")
        copy = {u * n + b0 for u in range(m)}
        blue = [x for x in range(m * n) if x not in copy] + [u * n + b0 for u in w]
        size = n * m - m + len(w)
    return ConstructionResult(
        VertexSet.of(prod.order, blue), size, frozenset({"failed", "maximal"}), "lex", prod
    )


def corona_construction(
    g: Graph, h: Graph, witness: Certificate | None = None, cap: int = DEFAULT_CAP
) -> ConstructionResult:
    """Failed set on ``g ∘ h``; the case is read off the isolated vertices of ``h``.

    ``witness`` is the F-certificate the case needs: for ``g`` when ``|h| = 1``,
    for ``h`` when ``h`` has no isolated vertex, for ``h`` minus its isolated
    vertices in the mixed case, and nothing when ``h`` is edgeless.
    """
    m, n = g.order, h.order
    prod = corona(g, h)
    copy = lambda i, a: m + i * n + a  # noqa: E731
    iso = isolated_vertices(h).to_list()
    if n == 1:
        w = _witness(g, witness, cap, "G")
        blue = [u for u in w] + [copy(u, 0) for u in w]
        size, claims, tag = 2 * len(w), {"failed", "maximal"}, "corona/1"
    elif not iso:
        w = _witness(h, witness, cap, "H")
        blue = list(range(m + (m - 1) * n)) + [copy(m - 1, a) for a in w]
        size, claims, tag = n * m + m - n + len(w), {"failed", "maximal"}, "corona/2"
    elif len(iso) == n:
        blue = [x for x in range(prod.order) if x not in (copy(0, 0), copy(0, 1))]
        size, claims, tag = n * m + m - 2, {"failed", "exact_F"}, "corona/3"
    else:
        core = [a for a in range(n) if a not in iso]
        h_core = h.induced(core)
        w = _witness(h_core, witness, cap, "H'")
        kept = {core[a] for a in w}
        blue = list(range(m))
        for i in range(m):
            for a in range(n):
                if i < m - 1 or a in iso or a in kept:
                    blue.append(copy(i, a))
        size = n * m + m - n + len(iso) + len(w)
        claims, tag = {"failed", "maximal"}, "corona/4"
    return ConstructionResult(VertexSet.of(prod.order, blue), size, frozenset(claims), tag, prod)


CONSTRUCTIONS = {
    "grid": grid_construction,
    "torus": torus_construction,
    "prism": prism_construction,
    "strong-grid": strong_grid_construction,
    "strong-torus": strong_torus_construction,
    "lex": lexicographic_construction,
    "corona": corona_construction,
}


def family_graph(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    return build_family(spec)

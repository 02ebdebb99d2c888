"""Exact Z(G) and F(G) by exhaustive search, plus the structural upper bound.

Subsets of a fixed size are visited in lexicographic order of their sorted
index tuples.  For parallel runs that order is cut into contiguous rank
ranges; each worker reports the first hit in its range and the lowest rank
wins, so the witness never depends on the worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from .forcing import closure_mask, is_failed, is_zero_forcing_set
from .graph import (
    CapacityError,
    Graph,
    VertexSet,
    as_mask,
    format_set,
    is_connected,
    isolated_vertices,
    modules_of_order_two,
    parse_set,
)

DEFAULT_CAP = 22

EXHAUSTIVE = "exhaustive"
STRUCTURAL = "structural"
LOWER_BOUND = "lower-bound"

BASIS_ISOLATED = "isolated-vertex"
BASIS_MODULE = "module-of-order-2"
BASIS_NO_MODULE = "connected, no isolated vertex, no order-2 module"
BASIS_DISCONNECTED = "disconnected, no isolated vertex"


class CapacityRefusal(CapacityError):
    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"exhaustive search on {order} vertices refused (cap {cap}); pass cap >= {order}")


@dataclass(frozen=True)
class Certificate:
    """A claimed value of Z or F with a witness and how it was established."""

    target: str
    value: int
    witness: VertexSet
    route: str
    basis: str = ""

    FIELDS = ("target", "value", "witness", "route", "basis")

    def to_text(self) -> str:
        return "\n".join(
            [
                f"target: {self.target}",
                f"value: {self.value}",
                f"witness: {format_set(self.witness)}",
                f"route: {self.route}",
                f"basis: {self.basis}",
            ]
        )

    def to_record(self) -> dict:
        return {
            "kind": "certificate",
            "target": self.target,
            "value": self.value,
            "witness": self.witness.to_list(),
            "order": self.witness.order,
            "route": self.route,
            "basis": self.basis,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    @classmethod
    def from_record(cls, rec: dict) -> "Certificate":
        return cls(
            rec["target"],
            int(rec["value"]),
            VertexSet.of(int(rec["order"]), rec["witness"]),
            rec["route"],
            rec.get("basis", ""),
        )

    @classmethod
    def from_text(cls, text: str, order: int) -> "Certificate":
        kv = {}
        for line in text.splitlines():
            key, sep, val = line.partition(":")
            if sep:
                kv[key.strip()] = val.strip()
        return cls(
            kv["target"],
            int(kv["value"]),
            VertexSet.of(order, parse_set(kv["witness"])),
            kv["route"],
            kv.get("basis", ""),
        )

    def verify(self, g: Graph) -> bool:
        """Re-check the witness, and for exhaustive F/Z certificates the extremality at one size beyond."""
        w = self.witness
        if w.order != g.order or (len(w) != self.value and self.route != LOWER_BOUND):
            return False
        if self.target == "Z":
            if not is_zero_forcing_set(g, w):
                return False
            if self.route == EXHAUSTIVE and self.value > 0:
                return _first_hit(g, self.value - 1, want_failed=False) is None
            return True
        if not is_failed(g, w):
            return False
        if self.route == EXHAUSTIVE and self.value + 1 < g.order:
            return _first_hit(g, self.value + 1, want_failed=True) is None
        return True


# --------------------------------------------------------------------------
# combination ranking (lexicographic order over sorted index tuples)


def unrank_combination(n: int, k: int, rank: int) -> list[int]:
    """The ``rank``-th k-subset of ``range(n)`` in lexicographic order."""
    if not 0 <= rank < comb(n, k):
        raise ValueError(f"rank {rank} out of range for C({n}, {k})")
    out = []
    x = 0
    for i in range(k):
        while True:
            c = comb(n - x - 1, k - i - 1)
            if rank < c:
                break
            rank -= c
            x += 1
        out.append(x)
        x += 1
    return out


def rank_combination(n: int, combo: list[int]) -> int:
    k = len(combo)
    rank = 0
    prev = -1
    for i, c in enumerate(combo):
        for x in range(prev + 1, c):
            rank += comb(n - x - 1, k - i - 1)
        prev = c
    return rank


def _scan(rows: tuple[int, ...], n: int, k: int, start: int, stop: int, want_failed: bool) -> int | None:
    """Rank of the first k-subset in ``[start, stop)`` that fails (or forces)."""
    if start >= stop:
        return None
    full = (1 << n) - 1
    idx = unrank_combination(n, k, start)
    mask = 0
    for i in idx:
        mask |= 1 << i
    rank = start
    while True:
        forces = closure_mask(rows, mask) == full
        if forces != want_failed:
            return rank
        rank += 1
        if rank >= stop:
            return None
        # advance to the next combination in lexicographic order
        i = k - 1
        while idx[i] == n - k + i:
            i -= 1
        for j in range(i, k):
            mask ^= 1 << idx[j]
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1
        for j in range(i, k):
            mask |= 1 << idx[j]


def _scan_task(args):
    return _scan(*args)


# below this many subsets per size, forking workers costs more than it saves
_PARALLEL_MIN = 20_000


def _first_hit(
    g: Graph, k: int, want_failed: bool, workers: int = 1, pool: ProcessPoolExecutor | None = None
) -> VertexSet | None:
    n = g.order
    if k < 0 or k > n:
        return None
    total = comb(n, k)
    if workers <= 1 or total < _PARALLEL_MIN or pool is None:
        r = _scan(g.rows, n, k, 0, total, want_failed)
    else:
        chunks = workers * 4
        bounds = [total * i // chunks for i in range(chunks + 1)]
        tasks = [(g.rows, n, k, bounds[i], bounds[i + 1], want_failed) for i in range(chunks)]
        hits = [h for h in pool.map(_scan_task, tasks) if h is not None]
        r = min(hits) if hits else None
    if r is None:
        return None
    return VertexSet.of(n, unrank_combination(n, k, r))


def _check_cap(g: Graph, cap: int) -> None:
    if g.order > cap:
        raise CapacityRefusal(g.order, cap)


class _Pool:
    def __init__(self, workers: int):
        self.workers = workers
        self.pool = ProcessPoolExecutor(workers) if workers > 1 else None

    def __enter__(self):
        return self.pool

    def __exit__(self, *exc):
        if self.pool is not None:
            self.pool.shutdown()


def zero_forcing_number(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> Certificate:
    """Z(G) with the lexicographically least minimum zero forcing set."""
    _check_cap(g, cap)
    with _Pool(workers) as pool:
        for k in range(0, g.order + 1):
            w = _first_hit(g, k, want_failed=False, workers=workers, pool=pool)
            if w is not None:
                return Certificate("Z", k, w, EXHAUSTIVE, "smallest size with a forcing set")
    raise AssertionError("V(G) always forces")  # pragma: no cover


def failed_zero_forcing_number(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> Certificate:
    """F(G) searching sizes downward from ``n - 1``; witness is lexicographically least."""
    _check_cap(g, cap)
    with _Pool(workers) as pool:
        for k in range(g.order - 1, -1, -1):
            w = _first_hit(g, k, want_failed=True, workers=workers, pool=pool)
            if w is not None:
                return Certificate("F", k, w, EXHAUSTIVE, "largest size with a failed set")
    raise AssertionError("the empty set always fails")  # pragma: no cover


def thm27_upper_bound(g: Graph) -> tuple[int, str]:
    """Structural upper bound on F from isolated vertices and order-2 modules."""
    n = g.order
    iso = isolated_vertices(g)
    if len(iso):
        return n - 1, f"{BASIS_ISOLATED} {iso.to_list()[0]}"
    if not is_connected(g):
        return n - 2, BASIS_DISCONNECTED
    mods = modules_of_order_two(g)
    if mods:
        u, v = mods[0]
        return n - 2, f"{BASIS_MODULE} {{{u},{v}}}"
    return n - 3, BASIS_NO_MODULE


@dataclass(frozen=True)
class SharpnessResult:
    certificate: Certificate
    exact: bool
    reason: str


def verify_sharpness(g: Graph, construction) -> SharpnessResult:
    """Pin F(G) with a failed construction that meets the structural upper bound.

    No search is done.  If the construction is failed but smaller than the
    bound, the returned certificate only records a lower bound.
    """

    s = VertexSet(as_mask(construction, g.order), g.order)
    bound, basis = thm27_upper_bound(g)
    if not is_failed(g, s):
        cert = Certificate("F", len(s), s, LOWER_BOUND, f"construction is not failed; upper bound {bound} ({basis})")
        return SharpnessResult(cert, False, "construction not failed")
    if len(s) == bound:
        cert = Certificate("F", bound, s, STRUCTURAL, f"failed construction meets upper bound: {basis}")
        return SharpnessResult(cert, True, "sharp")
    cert = Certificate("F", len(s), s, LOWER_BOUND, f"F >= {len(s)}; upper bound {bound} ({basis})")
    return SharpnessResult(cert, False, f"size {len(s)} below structural bound {bound}")

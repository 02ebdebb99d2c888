"""Standard zero forcing: the color-change rule and the set predicates.

A blue vertex with exactly one white neighbour forces that neighbour blue.
All functions here are pure; they never mutate their inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, SetLike, VertexSet, as_mask, bits


@dataclass(frozen=True)
class ForceChain:
    steps: tuple[tuple[int, int], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def format(self) -> str:
        return "\n".join(f"{u} -> {v}" for u, v in self.steps)

    @classmethod
    def parse(cls, text: str) -> "ForceChain":
        steps = []
        for line in text.splitlines():
            if line.strip():
                u, _, v = line.partition("->")
                steps.append((int(u), int(v)))
        return cls(tuple(steps))


@dataclass(frozen=True)
class ColorState:
    blue: VertexSet
    graph_order: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "graph_order", self.blue.order)


def _single(mask: int) -> bool:
    return mask != 0 and mask & (mask - 1) == 0


def apply_rule_once(g: Graph, blue: SetLike) -> tuple[int, int] | None:
    """Lowest-indexed blue vertex with exactly one white neighbour, and that neighbour."""
    b = as_mask(blue, g.order)
    rows = g.rows
    for u in bits(b):
        white = rows[u] & ~b
        if _single(white):
            return u, white.bit_length() - 1
    return None


def derived_coloring(g: Graph, initial: SetLike) -> tuple[VertexSet, ForceChain]:
    """Run the color-change rule to its fixed point.

    Candidate forcers sit in a min-index frontier; when a vertex turns blue it
    and its blue neighbours are re-examined, since only they can have gained
    a forcing move.
    """
    b = as_mask(initial, g.order)
    rows = g.rows
    steps = []
    pending = b
    while pending:
        # lowest candidate first keeps the chain deterministic
        low = pending & -pending
        u = low.bit_length() - 1
        pending ^= low
        white = rows[u] & ~b
        if _single(white):
            v = white.bit_length() - 1
            b |= white
            steps.append((u, v))
            pending |= (rows[v] & b) | white
    return VertexSet(b, g.order), ForceChain(tuple(steps))


def closure_mask(rows: tuple[int, ...], b: int) -> int:
    """Final blue mask from ``b``; the hot loop of the exhaustive oracle."""
    pending = b
    while pending:
        low = pending & -pending
        pending ^= low
        white = rows[low.bit_length() - 1] & ~b
        if white and not white & (white - 1):
            b |= white
            pending |= rows[white.bit_length() - 1] & b | white
    return b


def derived_coloring_queue(g: Graph, initial: SetLike, highest_first: bool = False) -> VertexSet:
    """Fixed point computed with a FIFO queue, optionally scanning high indices first.

    Kept separate from :func:`derived_coloring` so tie-breaking independence can
    be checked against a different selection order.
    """
    b = as_mask(initial, g.order)
    rows = g.rows
    order = sorted(bits(b), reverse=highest_first)
    queue = deque(order)
    queued = set(order)
    while queue:
        u = queue.popleft()
        queued.discard(u)
        white = rows[u] & ~b
        if _single(white):
            v = white.bit_length() - 1
            b |= white
            nbrs = sorted(bits(rows[v] & b), reverse=highest_first)
            for w in [v, *nbrs]:
                if w not in queued:
                    queue.append(w)
                    queued.add(w)
    return VertexSet(b, g.order)


def replay(g: Graph, initial: SetLike, chain: ForceChain) -> VertexSet:
    """Replay a chain, checking each step is a legal force.  Raises ``ValueError`` otherwise."""
    b = as_mask(initial, g.order)
    for u, v in chain:
        if not b >> u & 1:
            raise ValueError(f"step {u} -> {v}: forcer {u} is white")
        white = g.rows[u] & ~b
        if white != 1 << v:
            raise ValueError(f"step {u} -> {v}: {v} is not the unique white neighbour of {u}")
        b |= white
    return VertexSet(b, g.order)


def is_zero_forcing_set(g: Graph, s: SetLike) -> bool:
    return closure_mask(g.rows, as_mask(s, g.order)) == g.full_mask


def is_failed(g: Graph, s: SetLike) -> bool:
    return not is_zero_forcing_set(g, s)


def is_stalled(g: Graph, s: SetLike) -> bool:
    b = as_mask(s, g.order)
    return b != g.full_mask and apply_rule_once(g, VertexSet(b, g.order)) is None


def first_non_forcing_extension(g: Graph, s: SetLike) -> int | None:
    """Smallest white ``v`` such that ``s + v`` is still failed, or None."""
    b = as_mask(s, g.order)
    full = g.full_mask
    for v in bits(full & ~b):
        if closure_mask(g.rows, b | 1 << v) != full:
            return v
    return None


def is_maximal_failed(g: Graph, s: SetLike) -> bool:
    b = as_mask(s, g.order)
    if not is_failed(g, VertexSet(b, g.order)):
        return False
    return first_non_forcing_extension(g, VertexSet(b, g.order)) is None

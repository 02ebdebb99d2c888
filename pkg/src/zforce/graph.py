"""Small simple graphs stored as bitmask adjacency rows.

Row ``u`` of a :class:`Graph` is a Python ``int`` whose bit ``v`` is set iff
``uv`` is an edge.  Vertex sets share the same encoding, which keeps the
forcing engine and the exhaustive oracle down to a handful of integer ops.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

MAX_ORDER = 128


class GraphError(ValueError):
    """Base class for graph construction errors."""


class ParameterError(GraphError):
    """A family generator received parameters outside its domain."""


class CapacityError(GraphError):
    """A graph would exceed :data:`MAX_ORDER` vertices."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class VertexSet:
    """Immutable subset of ``range(order)`` backed by a bitmask."""

    __slots__ = ("_mask", "_order")

    def __init__(self, mask: int, order: int):
        if mask < 0 or mask >> order:
            raise ValueError(f"mask has bits outside range({order})")
        self._mask = mask
        self._order = order

    @classmethod
    def of(cls, order: int, indices: Iterable[int] = ()) -> "VertexSet":
        m = 0
        for i in indices:
            if not 0 <= i < order:
                raise ValueError(f"vertex {i} out of range for order {order}")
            m |= 1 << i
        return cls(m, order)

    @classmethod
    def full(cls, order: int) -> "VertexSet":
        return cls((1 << order) - 1, order)

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def order(self) -> int:
        return self._order

    def __iter__(self) -> Iterator[int]:
        return bits(self._mask)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self._order and bool(self._mask >> v & 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self._mask == other._mask and self._order == other._order
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._mask, self._order))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._mask | other._mask, max(self._order, other._order))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._mask & other._mask, max(self._order, other._order))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._mask & ~other._mask, self._order)

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self._order) - 1) & ~self._mask, self._order)

    def add(self, v: int) -> "VertexSet":
        return VertexSet.of(self._order, [*self, v])

    def to_list(self) -> list[int]:
        return list(bits(self._mask))

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self))}}}, order={self._order})"

    def __str__(self) -> str:
        return format_set(self)


SetLike = Union[VertexSet, Iterable[int]]


def as_mask(s: SetLike, order: int) -> int:
    """Coerce a VertexSet or an iterable of indices to a mask over ``order`` vertices."""
    if isinstance(s, VertexSet):
        if s.mask >> order:
            raise ValueError(f"set {s} does not fit a graph of order {order}")
        return s.mask
    return VertexSet.of(order, s).mask


def format_set(s: SetLike) -> str:
    """Comma separated ascending indices (empty string for the empty set)."""
    return ",".join(str(i) for i in sorted(s))


def parse_set(text: str, order: int | None = None) -> list[int]:
    """Parse ``"0,2,5-7"`` into a sorted index list.  Ranges are inclusive."""
    out: set[int] = set()
    text = text.strip()
    if text in ("", "-", "{}"):
        return []
    for part in text.strip("{}").split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", part)
        if m:
            a, b = int(m[1]), int(m[2])
            if a > b:
                raise ValueError(f"empty range {part!r}")
            out.update(range(a, b + 1))
        elif part.isdigit():
            out.add(int(part))
        else:
            raise ValueError(f"bad set element {part!r}")
    if order is not None:
        bad = [i for i in out if i >= order]
        if bad:
            raise ValueError(f"vertex {min(bad)} out of range for order {order}")
    return sorted(out)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..order-1``.

    ``rows[u]`` is the neighbourhood bitmask of ``u``.  Labels are cosmetic and
    do not take part in equality.
    """

    order: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            if n > MAX_ORDER:
                raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")
            raise GraphError("a graph needs at least one vertex")
        if len(self.rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(self.rows)}")
        for u, row in enumerate(self.rows):
            if row >> n:
                raise GraphError(f"row {u} has bits beyond the vertex range")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in bits(row):
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        if self.labels is not None and len(self.labels) != n:
            raise GraphError("label count does not match order")

    @classmethod
    def from_edges(
        cls, order: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> "Graph":
        if order > MAX_ORDER:
            raise CapacityError(f"order {order} exceeds capacity {MAX_ORDER}")
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows), tuple(labels) if labels is not None else None)

    def __len__(self) -> int:
        return self.order

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def label(self, u: int) -> str:
        if self.labels is not None:
            return self.labels[u]
        return str(u)

    def with_labels(self, labels: Sequence[str] | None) -> "Graph":
        return Graph(self.order, self.rows, tuple(labels) if labels is not None else None)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled ``0..k-1`` in the order given."""
        pos = {v: i for i, v in enumerate(vertices)}
        edges = [(pos[u], pos[v]) for u in vertices for v in bits(self.rows[u]) if v in pos and u < v]
        return Graph.from_edges(len(vertices), edges)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size()})"


# --------------------------------------------------------------------------
# families


FAMILY_KINDS = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "wheel": 1,
    "petersen": 0,
    "mary_tree": 2,
    "empty": 1,
}

_FAMILY_ALIASES = {
    "p": "path",
    "c": "cycle",
    "k": "complete",
    "bipartite": "complete_bipartite",
    "kmn": "complete_bipartite",
    "w": "wheel",
    "tree": "mary_tree",
    "null": "empty",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ParameterError(f"unknown family {self.kind!r}")
        if len(self.params) != FAMILY_KINDS[self.kind]:
            raise ParameterError(
                f"{self.kind} takes {FAMILY_KINDS[self.kind]} parameter(s), got {len(self.params)}"
            )
        k, p = self.kind, self.params
        if k == "path" and p[0] < 1:
            raise ParameterError("path needs n >= 1")
        if k == "cycle" and p[0] < 3:
            raise ParameterError("cycle needs n >= 3")
        if k == "complete" and p[0] < 1:
            raise ParameterError("complete needs n >= 1")
        if k == "empty" and p[0] < 1:
            raise ParameterError("empty needs n >= 1")
        if k == "complete_bipartite" and min(p) < 1:
            raise ParameterError("complete_bipartite needs m, n >= 1")
        if k == "wheel" and p[0] < 4:
            raise ParameterError("wheel needs n >= 4")
        if k == "mary_tree" and (p[0] < 2 or p[1] < 1):
            raise ParameterError("mary_tree needs arity >= 2 and depth >= 1")

    @property
    def order(self) -> int:
        k, p = self.kind, self.params
        if k == "petersen":
            return 10
        if k == "complete_bipartite":
            return p[0] + p[1]
        if k == "mary_tree":
            a, d = p
            return (a ** (d + 1) - 1) // (a - 1)
        return p[0]

    def __str__(self) -> str:
        return ":".join([self.kind, *map(str, self.params)])

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``"cycle:5"``, ``"complete_bipartite:3:2"`` or ``"complete_bipartite:3,2"``."""
        name, _, rest = text.strip().partition(":")
        name = name.strip().lower()
        name = _FAMILY_ALIASES.get(name, name)
        try:
            params = tuple(int(x) for x in re.split(r"[:,]", rest) if x.strip()) if rest else ()
        except ValueError:
            raise ParameterError(f"non-integer parameter in {text!r}") from None
        return cls(name, params)


def path(n: int) -> Graph:
    return build_family(FamilySpec("path", (n,)))


def cycle(n: int) -> Graph:
    return build_family(FamilySpec("cycle", (n,)))


def complete(n: int) -> Graph:
    return build_family(FamilySpec("complete", (n,)))


def complete_bipartite(m: int, n: int) -> Graph:
    return build_family(FamilySpec("complete_bipartite", (m, n)))


def wheel(n: int) -> Graph:
    return build_family(FamilySpec("wheel", (n,)))


def petersen() -> Graph:
    return build_family(FamilySpec("petersen"))


def mary_tree(arity: int, depth: int) -> Graph:
    return build_family(FamilySpec("mary_tree", (arity, depth)))


def empty(n: int) -> Graph:
    return build_family(FamilySpec("empty", (n,)))


def build_family(spec: FamilySpec) -> Graph:
    """Build the canonical member of a family.

    Vertex orders: paths and cycles in traversal order; the wheel ``W_n`` has
    ``n`` vertices in total, rim ``0..n-2`` and hub ``n-1``; Petersen has the
    outer 5-cycle on ``0..4`` and the inner pentagram on ``5..9`` with spokes
    ``i -- i+5``; ``K_{m,n}`` lists part A before part B; m-ary trees are
    complete and indexed breadth first.
    """
    n = spec.order
    if n > MAX_ORDER:
        raise CapacityError(f"{spec} has {n} vertices, capacity is {MAX_ORDER}")
    k, p = spec.kind, spec.params
    if k == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif k == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif k == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif k == "empty":
        edges = []
    elif k == "complete_bipartite":
        a, b = p
        edges = [(i, a + j) for i in range(a) for j in range(b)]
    elif k == "wheel":
        rim = n - 1
        edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    elif k == "petersen":
        edges = (
            [(i, (i + 1) % 5) for i in range(5)]
            + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
            + [(i, i + 5) for i in range(5)]
        )
    elif k == "mary_tree":
        arity = p[0]
        edges = [((c - 1) // arity, c) for c in range(1, n)]
    else:  # pragma: no cover - FamilySpec validates kinds
        raise ParameterError(k)
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------
# products

PRODUCT_OPS = ("cartesian", "strong", "lexicographic", "corona")

_OP_ALIASES = {
    "box": "cartesian",
    "cartesian": "cartesian",
    "strong": "strong",
    "lex": "lexicographic",
    "lexicographic": "lexicographic",
    "corona": "corona",
}


@dataclass(frozen=True)
class ProductSpec:
    op: str
    left: "FamilySpec | ProductSpec"
    right: "FamilySpec | ProductSpec"

    def __post_init__(self) -> None:
        if self.op not in PRODUCT_OPS:
            raise ParameterError(f"unknown product {self.op!r}")
        if self.order > MAX_ORDER:
            raise CapacityError(f"{self} has {self.order} vertices, capacity is {MAX_ORDER}")

    @property
    def order(self) -> int:
        a, b = self.left.order, self.right.order
        return a * b + a if self.op == "corona" else a * b

    def __str__(self) -> str:
        sym = {"cartesian": "box", "strong": "strong", "lexicographic": "lex", "corona": "corona"}
        return f"({self.left} {sym[self.op]} {self.right})"


def _check_product_order(order: int) -> None:
    if order > MAX_ORDER:
        raise CapacityError(f"product has {order} vertices, capacity is {MAX_ORDER}")


def _pair_labels(g: Graph, h: Graph) -> list[str]:
    return [f"v_{{{u},{v}}}" for u in range(g.order) for v in range(h.order)]


def _product(g: Graph, h: Graph, adjacent) -> Graph:
    nh = h.order
    order = g.order * nh
    _check_product_order(order)
    rows = [0] * order
    for u in range(g.order):
        for v in range(nh):
            row = 0
            for u2 in range(g.order):
                for v2 in range(nh):
                    if (u, v) != (u2, v2) and adjacent(u, v, u2, v2):
                        row |= 1 << (u2 * nh + v2)
            rows[u * nh + v] = row
    return Graph(order, tuple(rows), tuple(_pair_labels(g, h)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g □ h`` with vertex ``(u, v)`` at index ``u*|h| + v``."""
    ge, he = g.has_edge, h.has_edge
    return _product(g, h, lambda u, v, u2, v2: (u == u2 and he(v, v2)) or (v == v2 and ge(u, u2)))


def strong_product(g: Graph, h: Graph) -> Graph:
    ge, he = g.has_edge, h.has_edge
    return _product(
        g,
        h,
        lambda u, v, u2, v2: (u == u2 or ge(u, u2)) and (v == v2 or he(v, v2)),
    )


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """``g · h``: ``(u,v) ~ (u',v')`` iff ``uu'`` in E(g), or ``u = u'`` and ``vv'`` in E(h)."""
    ge, he = g.has_edge, h.has_edge
    return _product(g, h, lambda u, v, u2, v2: ge(u, u2) or (u == u2 and he(v, v2)))


def corona(g: Graph, h: Graph) -> Graph:
    """``g ∘ h``.

    Vertices ``0..m-1`` are ``g``; copy ``i`` of ``h`` sits at
    ``m + i*n .. m + (i+1)*n - 1`` and every vertex of it is joined to ``i``.
    """
    m, n = g.order, h.order
    order = m * n + m
    _check_product_order(order)
    edges = list(g.edges())
    for i in range(m):
        base = m + i * n
        edges += [(base + a, base + b) for a, b in h.edges()]
        edges += [(i, base + a) for a in range(n)]
    labels = [f"g_{i}" for i in range(m)] + [f"h_{{{i},{a}}}" for i in range(m) for a in range(n)]
    return Graph.from_edges(order, edges, labels)


_PRODUCT_FUNCS = {
    "cartesian": cartesian_product,
    "strong": strong_product,
    "lexicographic": lexicographic_product,
    "corona": corona,
}


def product(op: str, g: Graph, h: Graph) -> Graph:
    return _PRODUCT_FUNCS[_OP_ALIASES.get(op, op)](g, h)


def build(spec: "FamilySpec | ProductSpec") -> Graph:
    if isinstance(spec, FamilySpec):
        return build_family(spec)
    return product(spec.op, build(spec.left), build(spec.right))


# --------------------------------------------------------------------------
# expression grammar:  EXPR := FAMILY | '(' EXPR OP EXPR ')'
# a bare top-level "A op B" is accepted as if parenthesised.

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([A-Za-z_][A-Za-z_0-9]*(?::[0-9]+(?:[:,][0-9]+)*)?))")


class ExpressionError(ParseError):
    def __init__(self, message: str, position: int):
        self.position = position
        ValueError.__init__(self, f"at position {position}: {message}")
        self.line = None


def _tokenize(text: str) -> list[tuple[str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character {text[pos]!r}", pos)
        tok = m.group(0).strip()
        out.append((tok, m.start() + len(m.group(0)) - len(m.group(0).lstrip())))
        pos = m.end()
    return out


def parse_expression(text: str) -> "FamilySpec | ProductSpec":
    """Parse a family/product expression such as ``"(path:4 box (cycle:3 lex empty:2))"``."""
    toks = _tokenize(text)
    if not toks:
        raise ExpressionError("empty expression", 0)
    i = 0

    def atom():
        nonlocal i
        if i >= len(toks):
            raise ExpressionError("unexpected end of expression", len(text))
        tok, pos = toks[i]
        if tok == "(":
            i += 1
            left = atom()
            op = operator()
            right = atom()
            if i >= len(toks) or toks[i][0] != ")":
                raise ExpressionError("expected ')'", toks[i][1] if i < len(toks) else len(text))
            i += 1
            return ProductSpec(op, left, right)
        if tok == ")":
            raise ExpressionError("unexpected ')'", pos)
        i += 1
        if tok.split(":")[0].lower() in _OP_ALIASES:
            raise ExpressionError(f"expected a family, got operator {tok!r}", pos)
        try:
            return FamilySpec.parse(tok)
        except ParameterError as exc:
            raise ExpressionError(str(exc), pos) from None

    def operator() -> str:
        nonlocal i
        if i >= len(toks):
            raise ExpressionError("expected a product operator", len(text))
        tok, pos = toks[i]
        if tok.lower() not in _OP_ALIASES:
            raise ExpressionError(f"unknown operator {tok!r}", pos)
        i += 1
        return _OP_ALIASES[tok.lower()]

    expr = atom()
    if i < len(toks):
        op = operator()
        right = atom()
        expr = ProductSpec(op, expr, right)
    if i < len(toks):
        raise ExpressionError("trailing input; parenthesise chained products", toks[i][1])
    return expr


# --------------------------------------------------------------------------
# structure


def isolated_vertices(g: Graph) -> VertexSet:
    return VertexSet(mask_of(u for u, r in enumerate(g.rows) if not r), g.order)


def modules_of_order_two(g: Graph) -> list[tuple[int, int]]:
    """Unordered pairs ``{u, v}`` with ``N(u) - {v} == N(v) - {u}``, lexicographically."""
    out = []
    rows = g.rows
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                out.append((u, v))
    return out


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.order):
        if seen >> s & 1:
            continue
        comp = 1 << s
        queue = deque([s])
        while queue:
            u = queue.popleft()
            new = g.rows[u] & ~comp
            comp |= new
            queue.extend(bits(new))
        seen |= comp
        out.append(comp)
    return out


def connected_component_count(g: Graph) -> int:
    return len(components(g))


def is_connected(g: Graph) -> bool:
    return connected_component_count(g) == 1


def is_complete(g: Graph) -> bool:
    full = g.full_mask
    return all(row == full & ~(1 << u) for u, row in enumerate(g.rows))


# --------------------------------------------------------------------------
# edge-list text format


def serialize_graph(g: Graph, with_labels: bool = True) -> str:
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    if with_labels and g.labels is not None:
        lines += [f"L {i} {text}" for i, text in enumerate(g.labels)]
    return "\n".join(lines)


def parse_graph(text: str) -> Graph:
    """Parse the ``"n m"`` header + ``m`` edge lines format.

    Duplicate edges, loops and out-of-range indices are errors.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ParseError(f"malformed header {line!r}, expected 'n m'", lineno)
            header = (int(parts[0]), int(parts[1]))
            if header[0] < 1:
                raise ParseError("order must be at least 1", lineno)
            if header[0] > MAX_ORDER:
                raise CapacityError(f"order {header[0]} exceeds capacity {MAX_ORDER}")
            continue
        n, m = header
        if line.startswith("L"):
            parts = line.split(None, 2)
            if len(parts) < 2 or not parts[1].isdigit():
                raise ParseError(f"malformed label line {line!r}", lineno)
            i = int(parts[1])
            if i >= n:
                raise ParseError(f"label for vertex {i} >= n = {n}", lineno)
            labels[i] = parts[2] if len(parts) > 2 else ""
            continue
        if labels:
            raise ParseError("edge line after label lines", lineno)
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"malformed edge line {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise ParseError(f"vertex index {max(u, v)} >= n = {n}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    label_tuple = None
    if labels:
        label_tuple = tuple(labels.get(i, str(i)) for i in range(n))
    return Graph.from_edges(n, edges, label_tuple)

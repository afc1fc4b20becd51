"""Immutable simple graphs, the graph6 codec, and basic structural queries.

Vertices are 0..n-1.  Adjacency is kept twice: sorted neighbor tuples for
iteration and per-vertex bitmasks for the kernels.  All operations that
"modify" a graph return a new one.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels

REMOVED = -1


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position in the line."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class Graph:
    """Immutable undirected simple graph."""

    __slots__ = ("n", "adj", "masks", "_hash")

    def __init__(self, n: int, edges=()):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"vertex count must be a non-negative int, got {n!r}")
        masks = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", tuple(masks))
        object.__setattr__(
            self, "adj", tuple(tuple(_bits(m)) for m in masks)
        )
        object.__setattr__(self, "_hash", hash((n, self.masks)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_masks(cls, masks) -> "Graph":
        g = cls.__new__(cls)
        n = len(masks)
        masks = tuple(int(m) for m in masks)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "masks", masks)
        object.__setattr__(g, "adj", tuple(tuple(_bits(m)) for m in masks))
        object.__setattr__(g, "_hash", hash((n, masks)))
        return g

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.masks[u] >> v & 1)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return _kernels.component_count(self.masks, self.full_mask) == 1

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not in graph")
        masks = list(self.masks)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph.from_masks(masks)

    def relabel(self, perm) -> "Graph":
        """New graph where new vertex i takes the role of old vertex perm[i]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        pos = [0] * self.n
        for new, old in enumerate(perm):
            pos[old] = new
        masks = [0] * self.n
        for new, old in enumerate(perm):
            m = self.masks[old]
            out = 0
            while m:
                bit = m & -m
                m ^= bit
                out |= 1 << pos[bit.bit_length() - 1]
            masks[new] = out
        return Graph.from_masks(masks)

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.masks == other.masks
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph({self.n}, {self.edges()!r})"


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit.bit_length() - 1


def mask_of(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def tuple_of(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


@dataclass(frozen=True)
class ComponentPartition:
    """Components of G - S: a count and per-vertex labels (REMOVED for S)."""

    count: int
    labels: tuple[int, ...]


def components_after_removal(g: Graph, removed) -> ComponentPartition:
    """Partition of G - S into connected components.

    Component ids are assigned in order of each component's smallest vertex.
    Removed vertices get the REMOVED (-1) label.
    """
    s_mask = mask_of(removed)
    if s_mask & ~g.full_mask:
        raise ValueError("removed vertices out of range")
    labels = [REMOVED] * g.n
    comps = _kernels.component_masks(g.masks, g.full_mask & ~s_mask)
    for cid, comp in enumerate(comps):
        for v in tuple_of(comp):
            labels[v] = cid
    return ComponentPartition(count=len(comps), labels=tuple(labels))


def degree_profile(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(minimum degree, per-vertex degree tuple).  Undefined for n = 0."""
    if g.n == 0:
        raise ValueError("degree profile undefined for the empty graph")
    degrees = tuple(len(a) for a in g.adj)
    return (min(degrees), degrees)


def is_bridge(g: Graph, edge) -> bool:
    """Whether deleting the edge increases the number of components."""
    u, v = edge
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not in graph")
    before = _kernels.component_count(g.masks, g.full_mask)
    masks = list(g.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return _kernels.component_count(masks, g.full_mask) > before


# ---------------------------------------------------------------------------
# graph6 codec
#
# Format: an optional ">>graph6<<" header, a vertex count N(n), then the
# upper triangle of the adjacency matrix in column order (x_01, x_02, x_12,
# x_03, ...), packed big-endian into 6-bit groups, each group stored as one
# printable byte value 63..126 (group + 63), zero-padded to a multiple of 6.
# N(n) is one byte (n + 63) for n <= 62, or 126 followed by three bytes
# carrying 18 bits of n for n <= 258047.  Larger graphs are out of scope.
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"
_LONG_N_MAX = 258047


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optional header tolerated) into a Graph."""
    text = line.rstrip("\r\n")
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if not text:
        raise Graph6ParseError("empty graph6 line")
    data = text.encode("ascii", errors="replace")
    for off, byte in enumerate(data):
        if byte < 63 or byte > 126:
            raise Graph6ParseError(f"byte {byte!r} outside graph6 range 63..126", off)

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6ParseError("8-byte vertex counts not supported", 0)
        if len(data) < 4:
            raise Graph6ParseError("truncated long-form vertex count", 0)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body_start = 4
    else:
        n = data[0] - 63
        body_start = 1

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[body_start:]
    if len(body) != nbytes:
        raise Graph6ParseError(
            f"edge data holds {len(body)} bytes, expected {nbytes} for n={n}",
            body_start,
        )
    edges = []
    bit_index = 0
    u, v = 0, 1
    for pos, byte in enumerate(body):
        group = byte - 63
        for shift in range(5, -1, -1):
            if bit_index >= nbits:
                if group >> shift & 1:
                    raise Graph6ParseError(
                        "nonzero padding bit", body_start + pos
                    )
                continue
            if group >> shift & 1:
                edges.append((u, v))
            bit_index += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a Graph as a canonical graph6 line (no header, zero padding)."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= _LONG_N_MAX:
        head = bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError(f"graphs with n={n} > {_LONG_N_MAX} not supported")
    out = bytearray(head)
    group = 0
    filled = 0
    for v in range(1, n):
        for u in range(v):
            group = group << 1 | (g.masks[u] >> v & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return out.decode("ascii")


def iter_graph6_lines(lines):
    """Yield (line_number, stripped_line) for parseable lines.

    Blank lines and standalone header lines are skipped; line numbers are
    1-based over the raw input.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text == _HEADER:
            continue
        yield lineno, text

"""Named graph families and exhaustive small-graph enumeration.

Enumeration is one representative per isomorphism class, deduplicated by
canonical form and emitted in canonical-key order, so corpus scans are
deterministic.  The pendant-tree construction (take a tree with maximum
degree 3 whose degree-1 and degree-3 vertices form an independent set, then
delete every degree-3 vertex and join its three neighbors into a triangle)
lives here as ``build_half_tough``; downstream checks verify rather than
assume that its outputs are minimally 1/2-tough and claw-free.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .canon import canonical_graph, canonical_key
from .graphs import Graph

ENUMERATION_CAP = 8
TREE_ENUMERATION_CAP = 14


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def make_star(k: int) -> Graph:
    """K_{1,k}: center 0 joined to leaves 1..k."""
    if k < 1:
        raise ValueError("star needs k >= 1")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def make_net() -> Graph:
    """Triangle 0,1,2 with pendant vertices 3,4,5."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def make_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


class InvalidTreeError(ValueError):
    """The construction input fails one of its validity conditions."""


@dataclass(frozen=True)
class TreeSpec:
    """A candidate construction input with validity recomputed on demand.

    Flags are derived from the graph itself so a spec can never claim
    validity its tree does not have.
    """

    tree: Graph

    @classmethod
    def from_graph(cls, g: Graph) -> "TreeSpec":
        return cls(tree=g)

    @property
    def is_tree(self) -> bool:
        return self.tree.n >= 1 and self.tree.m == self.tree.n - 1 and self.tree.is_connected()

    @property
    def max_degree_ok(self) -> bool:
        return all(self.tree.degree(v) <= 3 for v in range(self.tree.n))

    @property
    def independence_ok(self) -> bool:
        marked = [v for v in range(self.tree.n) if self.tree.degree(v) in (1, 3)]
        return not any(self.tree.has_edge(a, b) for a, b in combinations(marked, 2))

    def violations(self) -> list[str]:
        out = []
        if not self.is_tree:
            out.append("not a tree")
        if not self.max_degree_ok:
            out.append("maximum degree exceeds 3")
        if self.is_tree and not self.independence_ok:
            out.append("degree-1 and degree-3 vertices are not independent")
        return out

    @property
    def valid(self) -> bool:
        return not self.violations()


def build_half_tough(spec: TreeSpec | Graph) -> Graph:
    """Delete every degree-3 vertex of the tree, triangulating its neighbors.

    Surviving vertices are compacted in their original order.  Raises
    InvalidTreeError naming the violated condition when the spec is invalid.
    """
    if isinstance(spec, Graph):
        spec = TreeSpec(spec)
    bad = spec.violations()
    if bad:
        raise InvalidTreeError(f"invalid construction input: {bad[0]}")
    t = spec.tree
    keep = [v for v in range(t.n) if t.degree(v) != 3]
    idx = {v: i for i, v in enumerate(keep)}
    edges = [(idx[a], idx[b]) for a, b in t.edges() if a in idx and b in idx]
    for x in range(t.n):
        if t.degree(x) == 3:
            # neighbors of a degree-3 vertex are degree-2 by independence
            corners = [idx[y] for y in t.neighbors(x)]
            edges.extend(combinations(corners, 2))
    return Graph(len(keep), edges)


@lru_cache(maxsize=None)
def _graphs_up_to_iso(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, []),)
    seen: dict[tuple[int, int], Graph] = {}
    for g in _graphs_up_to_iso(n - 1):
        base = g.edges()
        for sub in range(1 << (n - 1)):
            extra = [(i, n - 1) for i in range(n - 1) if sub >> i & 1]
            h = canonical_graph(Graph(n, base + extra))
            seen.setdefault(canonical_key(h), h)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All simple graphs on n vertices up to isomorphism, canonical order."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_CAP}")
    return _graphs_up_to_iso(n)


@lru_cache(maxsize=None)
def _connected_up_to_iso(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in _graphs_up_to_iso(n) if g.is_connected())


def enumerate_connected(n: int) -> tuple[Graph, ...]:
    """Connected graphs on n vertices up to isomorphism, canonical order."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_CAP}")
    return _connected_up_to_iso(n)


@lru_cache(maxsize=None)
def _trees_up_to_iso(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, []),)
    seen: dict[tuple[int, int], Graph] = {}
    for t in _trees_up_to_iso(n - 1):
        base = t.edges()
        for v in range(n - 1):
            h = canonical_graph(Graph(n, base + [(v, n - 1)]))
            seen.setdefault(canonical_key(h), h)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_trees(n: int) -> tuple[Graph, ...]:
    """Trees on n vertices up to isomorphism, canonical order."""
    if not 1 <= n <= TREE_ENUMERATION_CAP:
        raise ValueError(f"tree enumeration supports 1 <= n <= {TREE_ENUMERATION_CAP}")
    return _trees_up_to_iso(n)


def half_tough_family(max_n: int = 8) -> tuple[Graph, ...]:
    """Every construction output with at most max_n vertices, up to isomorphism.

    A tree on n_T vertices with d3 degree-3 vertices yields n_T - d3 output
    vertices, and the validity conditions force 5*d3 <= 2*(n' - 2) for output
    size n', so trees up to max_n + (2*(max_n - 2)) // 5 vertices suffice.
    Trees with fewer than 3 vertices are skipped: the single vertex builds a
    complete graph and the single edge is invalid.
    """
    if max_n < 3:
        raise ValueError("family needs max_n >= 3")
    d3_cap = (2 * (max_n - 2)) // 5
    out: dict[tuple[int, int], Graph] = {}
    for n_t in range(3, max_n + d3_cap + 1):
        for tree in enumerate_trees(n_t):
            spec = TreeSpec(tree)
            if not spec.valid:
                continue
            g = build_half_tough(spec)
            if g.n > max_n:
                continue
            g = canonical_graph(g)
            out.setdefault(canonical_key(g), g)
    return tuple(out[k] for k in sorted(out))

"""Canonical labelling by iterative refinement with backtracking.

The canonical key of a graph is the minimum upper-triangle adjacency
bitstring over all labellings reachable by the search, which restricts
candidate orderings to those compatible with the equitable degree partition.
Individualizing one vertex of the first non-singleton cell and re-refining
keeps the leaf count near the automorphism count, which is small for
everything this package enumerates (n <= 14).  Complete and empty graphs are
shortcut since every labelling gives the same key.
"""
from __future__ import annotations

from functools import lru_cache

from .graphs import Graph


def _refine(masks, cells):
    """Equitable refinement: split cells by neighbor counts into other cells.

    Cell order (and the order of split parts, by signature ascending) is
    label-independent, which is what makes the search canonical.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for splitter in list(cells):
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    buckets.setdefault(bin(masks[v] & smask).count("1"), []).append(v)
                if len(buckets) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for key in sorted(buckets):
                        new_cells.append(buckets[key])
            cells = new_cells
            if changed:
                break
    return cells


def _key_for_perm(masks, perm):
    key = 0
    pos = len(perm)
    for j in range(1, pos):
        vj = perm[j]
        for i in range(j):
            key = key << 1 | (masks[perm[i]] >> vj & 1)
    return key


@lru_cache(maxsize=1 << 16)
def canonical_form(n: int, masks: tuple) -> tuple[int, tuple[int, ...]]:
    """(canonical key, canonical permutation) for an adjacency-mask tuple.

    The permutation maps new label i to old vertex perm[i]; relabelling by it
    yields the canonical representative.  Keys are only comparable between
    graphs with equal n.
    """
    if n == 0:
        return (0, ())
    m2 = sum(bin(m).count("1") for m in masks)
    if m2 == 0 or m2 == n * (n - 1):
        perm = tuple(range(n))
        return (_key_for_perm(masks, perm), perm)

    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(bin(masks[v]).count("1"), []).append(v)
    initial = [by_degree[d] for d in sorted(by_degree)]

    best_key = None
    best_perm = None

    def search(cells):
        nonlocal best_key, best_perm
        cells = _refine(masks, cells)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            perm = tuple(c[0] for c in cells)
            key = _key_for_perm(masks, perm)
            if best_key is None or key < best_key:
                best_key, best_perm = key, perm
            return
        cell = cells[target]
        for v in sorted(cell):
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(initial)
    return (best_key, best_perm)


def canonical_key(g: Graph) -> tuple[int, int]:
    """Hashable isomorphism invariant: equal keys iff isomorphic graphs."""
    key, _ = canonical_form(g.n, g.masks)
    return (g.n, key)


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    _, perm = canonical_form(g.n, g.masks)
    return g.relabel(perm)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_key(a) == canonical_key(b)

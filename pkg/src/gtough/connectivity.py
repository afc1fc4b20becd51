"""Vertex connectivity, minimum vertex cuts, and atoms.

kappa is computed by Menger's theorem: the minimum over non-adjacent pairs of
the maximum number of internally vertex-disjoint paths, via unit-capacity
max-flow on the split-vertex digraph.  A brute-force subset oracle is kept as
an independent second route.  Cut and atom enumeration are exhaustive subset
searches over the kernels, so they are desk-scale tools (n around 16).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import _kernels
from .common import ClauseVerdict
from .graphs import Graph, mask_of, tuple_of


class CompleteGraphError(ValueError):
    """Raised by operations undefined on complete graphs."""


@dataclass(frozen=True)
class ConnectivityResult:
    """kappa plus a witness.

    Complete graphs get kappa = n - 1, ``complete=True`` and no cut.
    Disconnected graphs get kappa = 0 with the empty cut.  Otherwise ``cut``
    is the lexicographically least minimum vertex cut and ``parts`` the
    component count after removing it.
    """

    kappa: int
    complete: bool
    cut: tuple[int, ...] | None
    parts: int | None


def _max_disjoint_paths(g: Graph, s: int, t: int, cutoff: int) -> int:
    """Internally vertex-disjoint s-t paths, stopping early at ``cutoff``.

    Unit-capacity max-flow on the digraph where each vertex v splits into
    v_in -> v_out (capacity 1) and each edge uv gives u_out -> v_in and
    v_out -> u_in.  Node 2v is v_in, 2v+1 is v_out.
    """
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1 if v not in (s, t) else cutoff + 1
    for u, v in g.edges():
        cap[(2 * u + 1, 2 * v)] = cutoff + 1
        cap[(2 * v + 1, 2 * u)] = cutoff + 1
    out: list[list[int]] = [[] for _ in range(2 * n)]
    for a, b in cap:
        out[a].append(b)
        out[b].append(a)  # residual arc
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            a = queue.pop(0)
            for b in out[a]:
                if b not in parent and cap.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] = cap.get((a, b), 0) - 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> ConnectivityResult:
    """kappa(G) with a witness cut (see ConnectivityResult)."""
    n = g.n
    if n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    if g.is_complete():
        return ConnectivityResult(kappa=n - 1, complete=True, cut=None, parts=None)
    if not g.is_connected():
        parts = _kernels.component_count(g.masks, g.full_mask)
        return ConnectivityResult(kappa=0, complete=False, cut=(), parts=parts)

    best = min(len(a) for a in g.adj)  # kappa <= delta
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            best = min(best, _max_disjoint_paths(g, u, v, best))
            if best == 0:
                break
    cut = _first_cut_of_size(g, best)
    parts = _kernels.component_count(g.masks, g.full_mask & ~mask_of(cut))
    return ConnectivityResult(kappa=best, complete=False, cut=cut, parts=parts)


def _first_cut_of_size(g: Graph, k: int) -> tuple[int, ...]:
    """Lexicographically least S with |S| = k and w(G-S) >= 2."""
    full = g.full_mask
    for combo in combinations(range(g.n), k):
        if _kernels.component_count(g.masks, full & ~mask_of(combo)) >= 2:
            return combo
    raise ValueError(f"no disconnecting set of size {k}")


def vertex_connectivity_bruteforce(g: Graph) -> int:
    """Independent oracle: smallest k admitting a disconnecting k-set.

    Complete graphs return n - 1 by convention.  Subset enumeration only; no
    flow machinery shared with vertex_connectivity.
    """
    n = g.n
    if n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    if g.is_complete():
        return n - 1
    adj = [set(a) for a in g.adj]

    def comps(removed: set) -> int:
        seen: set[int] = set()
        cnt = 0
        for s in range(n):
            if s in removed or s in seen:
                continue
            cnt += 1
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in removed and y not in seen:
                        seen.add(y)
                        stack.append(y)
        return cnt

    for k in range(0, n - 1):
        for combo in combinations(range(n), k):
            if comps(set(combo)) >= 2:
                return k
    raise AssertionError("noncomplete graph must have a cut")


def min_cuts_containing(g: Graph, v: int, k: int) -> list[tuple[int, ...]]:
    """All vertex cuts of size exactly k that contain v, lexicographic order.

    Exhaustive over subsets.  Requires a connected noncomplete graph and
    1 <= k <= n - 2.
    """
    if g.is_complete():
        raise CompleteGraphError("complete graphs have no vertex cuts")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if not 1 <= k <= g.n - 2:
        raise ValueError(f"cut size {k} out of range 1..{g.n - 2}")
    if not g.is_connected():
        raise ValueError("min_cuts_containing expects a connected graph")
    cuts = _kernels.cuts_of_size(g.masks, g.n, k, 1 << v)
    return [tuple_of(c) for c in cuts]


def all_min_cuts(g: Graph) -> list[tuple[int, ...]]:
    """Every minimum vertex cut, lexicographic order.

    For disconnected graphs this is the single empty cut, consistent with
    kappa = 0.
    """
    if g.is_complete():
        raise CompleteGraphError("complete graphs have no vertex cuts")
    kappa = vertex_connectivity(g).kappa
    return [tuple_of(c) for c in _kernels.cuts_of_size(g.masks, g.n, kappa, 0)]


@dataclass(frozen=True)
class AtomRecord:
    """A minimum-cardinality fragment with its boundary (= the cut producing it)."""

    atom: tuple[int, ...]
    boundary: tuple[int, ...]
    kappa: int


def atoms(g: Graph) -> list[AtomRecord]:
    """All atoms of G: smallest components of G - T over all minimum cuts T.

    Uses the minimum-fragment convention: a fragment is any component left by
    some minimum cut, and an atom is a fragment of minimum cardinality over
    all of them.  Every atom's neighborhood is exactly its producing cut.
    Undefined for complete graphs.
    """
    if g.is_complete():
        raise CompleteGraphError("atoms undefined for complete graphs")
    full = g.full_mask
    fragments: dict[int, int] = {}  # fragment mask -> boundary mask
    for cut_mask in _kernels.cuts_of_size(g.masks, g.n, vertex_connectivity(g).kappa, 0):
        for comp in _kernels.component_masks(g.masks, full & ~cut_mask):
            fragments.setdefault(comp, cut_mask)
    smallest = min(bin(f).count("1") for f in fragments)
    records = []
    for frag, cut_mask in fragments.items():
        if bin(frag).count("1") != smallest:
            continue
        boundary = 0
        for v in tuple_of(frag):
            boundary |= g.masks[v]
        boundary &= ~frag
        records.append(
            AtomRecord(
                atom=tuple_of(frag),
                boundary=tuple_of(boundary),
                kappa=bin(cut_mask).count("1"),
            )
        )
    records.sort(key=lambda r: r.atom)
    return records


def check_mader_atom_property(g: Graph) -> ClauseVerdict:
    """For every atom A and minimum cut T: if A meets T then A ⊆ T and
    |A| <= kappa/2.

    Vacuous for complete graphs (no cuts) and checked in full otherwise;
    exhaustive over all minimum cuts.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if g.is_complete():
        return ClauseVerdict(
            clause="mader-atoms",
            applicable=False,
            holds=True,
            witness={"reason": "complete graph has no cuts"},
        )
    if not g.is_connected():
        return ClauseVerdict(
            clause="mader-atoms",
            applicable=False,
            holds=True,
            witness={"reason": "disconnected graph"},
        )
    kappa = vertex_connectivity(g).kappa
    atom_records = atoms(g)
    cuts = all_min_cuts(g)
    checked = 0
    for rec in atom_records:
        a_set = set(rec.atom)
        for cut in cuts:
            t_set = set(cut)
            if not a_set & t_set:
                continue
            checked += 1
            if not a_set <= t_set or Fraction(len(a_set)) > Fraction(kappa, 2):
                return ClauseVerdict(
                    clause="mader-atoms",
                    applicable=True,
                    holds=False,
                    witness={
                        "atom": list(rec.atom),
                        "cut": list(cut),
                        "kappa": kappa,
                    },
                )
    return ClauseVerdict(
        clause="mader-atoms",
        applicable=True,
        holds=True,
        witness={
            "atoms": [list(r.atom) for r in atom_records],
            "min_cuts": len(cuts),
            "overlapping_pairs": checked,
            "kappa": kappa,
        },
    )

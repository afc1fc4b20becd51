"""Exact toughness, minimality at a threshold, and per-edge cut certificates.

Toughness tau(G) is the minimum of |S| / w(G-S) over vertex sets S leaving at
least two components; complete graphs have no such S and get tau = infinity.
Disconnected graphs get tau = 0 (the empty set already leaves >= 2
components).  All arithmetic is exact: thresholds enter as Fractions (or
"p/q" strings) and floats are rejected outright.

Two independent routes are kept deliberately: ``toughness`` drives the pruned
kernel search, while ``toughness_bruteforce`` enumerates every subset and
counts components with union-find over edge lists, sharing no code with the
kernels.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import _kernels
from .common import as_fraction, fraction_str
from .graphs import Graph, is_bridge, mask_of, tuple_of


class NoCertificateError(ValueError):
    """The edge keeps the graph at or above the threshold; no certificate exists."""


class DecompositionUndefinedError(ValueError):
    """Certificate statistics need a nonempty detached part."""


@dataclass(frozen=True)
class Toughness:
    """tau as a reduced Fraction plus an optimal witness set.

    ``value is None`` encodes infinity (complete graphs), with no witness.
    Otherwise the witness is the lexicographically least optimal set (sorted
    vertex tuples compared with prefixes first).
    """

    value: Fraction | None
    witness: tuple[int, ...] | None

    @property
    def infinite(self) -> bool:
        return self.value is None

    def at_least(self, t) -> bool:
        return self.infinite or self.value >= as_fraction(t)

    def __str__(self) -> str:
        return fraction_str(self.value)


def toughness(g: Graph) -> Toughness:
    """Exact tau(G) with the lexicographically least optimal witness."""
    if g.n == 0:
        raise ValueError("toughness undefined for the empty graph")
    if g.is_complete():
        return Toughness(value=None, witness=None)
    p, q, wit = _kernels.min_ratio_cut(g.masks, g.n)
    return Toughness(value=Fraction(p, q), witness=tuple_of(wit))


def toughness_bruteforce(g: Graph) -> Toughness:
    """Independent oracle: full subset enumeration, union-find components."""
    if g.n == 0:
        raise ValueError("toughness undefined for the empty graph")
    if g.is_complete():
        return Toughness(value=None, witness=None)
    n = g.n
    edges = g.edges()
    best_ratio: Fraction | None = None
    best_set: tuple[int, ...] | None = None
    for size in range(0, n - 1):
        for removed in combinations(range(n), size):
            w = _unionfind_components(n, edges, set(removed))
            if w < 2:
                continue
            ratio = Fraction(size, w)
            if (
                best_ratio is None
                or ratio < best_ratio
                or (ratio == best_ratio and removed < best_set)
            ):
                best_ratio, best_set = ratio, removed
    assert best_ratio is not None  # noncomplete graphs always have a witness
    return Toughness(value=best_ratio, witness=best_set)


def _unionfind_components(n: int, edges, removed: set) -> int:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    alive = n - len(removed)
    if alive == 0:
        return 0
    count = alive
    for u, v in edges:
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def is_t_tough(g: Graph, t) -> bool:
    """Whether tau(G) >= t."""
    t = as_fraction(t)
    if t <= 0:
        raise ValueError("threshold must be positive")
    return toughness(g).at_least(t)


@dataclass(frozen=True)
class EdgeCertificate:
    """Per-edge witness that deleting the edge drops toughness below t.

    Either the edge is a bridge of G (``bridge_case``, empty cut), or ``cut``
    is the smallest (then lexicographically least) vertex set S avoiding both
    endpoints with

        w(G - S) <= |S| / t   and   w((G - e) - S) > |S| / t,

    which forces e to bridge its component of G - S.  The decomposition
    fields describe G - S: ``edge_component`` is the component holding the
    edge, ``detached`` the union of all other components, and ``side_u`` /
    ``side_v`` the two halves of the edge's component after also deleting e
    (side_u contains edge[0]).
    """

    edge: tuple[int, int]
    cut: tuple[int, ...]
    bridge_case: bool
    edge_component: tuple[int, ...]
    detached: tuple[int, ...]
    side_u: tuple[int, ...]
    side_v: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.cut)

    def violations(self, g: Graph, t) -> list[str]:
        """Re-verify every certificate invariant against g; empty = valid."""
        t = as_fraction(t)
        out = []
        u, v = self.edge
        if not g.has_edge(u, v):
            return ["edge missing from graph"]
        endpoint_cut = bool(set(self.cut) & {u, v})
        if endpoint_cut:
            out.append("cut contains an endpoint")
        cover = sorted(self.cut + self.edge_component + self.detached)
        if cover != list(range(g.n)):
            out.append("cut/edge_component/detached do not partition the vertices")
        if self.bridge_case:
            if self.cut:
                out.append("bridge case must have an empty cut")
            if not is_bridge(g, self.edge):
                out.append("bridge case on a non-bridge")
        else:
            s_mask = mask_of(self.cut)
            alive = g.full_mask & ~s_mask
            w1 = _kernels.component_count(g.masks, alive)
            ge = g.without_edge(u, v)
            w2 = _kernels.component_count(ge.masks, alive)
            k = len(self.cut)
            if not Fraction(w1) * t <= Fraction(k):
                out.append("w(G-S) exceeds |S|/t")
            if not Fraction(w2) * t > Fraction(k):
                out.append("w((G-e)-S) does not exceed |S|/t")
            if w2 != w1 + 1:
                out.append("edge does not bridge G-S")
        if sorted(self.side_u + self.side_v) != sorted(self.edge_component):
            out.append("sides do not partition the edge's component")
        if u not in self.side_u or v not in self.side_v:
            out.append("sides do not contain their endpoints")
        # recompute the decomposition from scratch; undefined when the cut
        # swallowed an endpoint, which was already reported above
        if not endpoint_cut:
            expect = _decompose(g, self.edge, self.cut)
            for name in ("edge_component", "detached", "side_u", "side_v"):
                if getattr(self, name) != getattr(expect, name):
                    out.append(f"{name} mismatch with recomputation")
        return out


def _decompose(g: Graph, edge, cut) -> EdgeCertificate:
    u, v = edge
    s_mask = mask_of(cut)
    alive = g.full_mask & ~s_mask
    comps = _kernels.component_masks(g.masks, alive)
    home = next(c for c in comps if c >> u & 1)
    detached = alive & ~home
    ge = g.without_edge(u, v)
    half = _kernels.component_masks(ge.masks, home)
    side_u = next(c for c in half if c >> u & 1)
    side_v = next(c for c in half if c >> v & 1)
    return EdgeCertificate(
        edge=(u, v),
        cut=tuple(cut),
        bridge_case=not cut and is_bridge(g, (u, v)),
        edge_component=tuple_of(home),
        detached=tuple_of(detached),
        side_u=tuple_of(side_u),
        side_v=tuple_of(side_v),
    )


def edge_certificate(g: Graph, edge, t) -> EdgeCertificate:
    """Certificate that deleting ``edge`` drops toughness below t.

    Bridges use the empty cut.  Otherwise the smallest admissible cut is
    located by exhaustive search (smallest size, then lexicographically
    least).  Raises NoCertificateError when tau(G - e) >= t, i.e. the edge
    deletion does not hurt.  Meaningful when g is minimally t-tough; for
    other graphs the returned structure still satisfies its local
    inequalities but certifies nothing global.
    """
    t = as_fraction(t)
    if t <= 0:
        raise ValueError("threshold must be positive")
    u, v = sorted(edge)
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not in graph")
    if is_bridge(g, (u, v)):
        return _decompose(g, (u, v), ())
    after = toughness(g.without_edge(u, v))
    if after.at_least(t):
        raise NoCertificateError(
            f"deleting ({u}, {v}) keeps toughness at {after} >= {t}"
        )
    s_mask = _kernels.certificate_search(
        g.masks, g.n, u, v, t.numerator, t.denominator
    )
    if s_mask is None:
        raise NoCertificateError(
            f"no cut set certifies edge ({u}, {v}) at threshold {t}"
        )
    return _decompose(g, (u, v), tuple_of(s_mask))


def all_edge_certificates(g: Graph, edge, t) -> tuple[EdgeCertificate, ...]:
    """Every minimum-size certificate for the edge, in lexicographic cut order.

    The minimum cut size is fixed by the bracket inequalities, but several
    cuts of that size may satisfy them; conclusions quantified over "a
    minimum vertex set" can be audited against all of them.  Bridges have
    exactly one certificate (the empty cut).
    """
    t = as_fraction(t)
    first = edge_certificate(g, edge, t)
    if first.bridge_case:
        return (first,)
    u, v = first.edge
    k = first.size
    want = k * t.denominator // t.numerator
    ge = g.without_edge(u, v)
    out = []
    pool = [x for x in range(g.n) if x != u and x != v]
    for cut in combinations(pool, k):
        alive = g.full_mask & ~mask_of(cut)
        if _kernels.component_count(g.masks, alive) != want:
            continue
        if _kernels.component_count(ge.masks, alive) != want + 1:
            continue
        out.append(_decompose(g, (u, v), cut))
    return tuple(out)


@dataclass(frozen=True)
class MinimalityResult:
    """Outcome of the minimally-t-tough test.

    When minimal, ``certificates`` holds one EdgeCertificate per edge in
    sorted edge order.  Otherwise ``failure`` identifies the first violation:
    "toughness-mismatch" (with ``tau``) or "edge-keeps-toughness" (with
    ``failing_edge`` and ``tau_after``).
    """

    minimal: bool
    tau: Toughness
    certificates: tuple[EdgeCertificate, ...] | None = None
    failure: str | None = None
    failing_edge: tuple[int, int] | None = None
    tau_after: Toughness | None = None


def is_minimally_t_tough(g: Graph, t) -> MinimalityResult:
    """tau(G) == t and every single edge deletion drops toughness below t."""
    t = as_fraction(t)
    if t <= 0:
        raise ValueError("threshold must be positive")
    tau = toughness(g)
    if tau.infinite or tau.value != t:
        return MinimalityResult(minimal=False, tau=tau, failure="toughness-mismatch")
    for e in g.edges():
        after = toughness(g.without_edge(*e))
        if after.at_least(t):
            return MinimalityResult(
                minimal=False,
                tau=tau,
                failure="edge-keeps-toughness",
                failing_edge=e,
                tau_after=after,
            )
    certs = tuple(edge_certificate(g, e, t) for e in g.edges())
    return MinimalityResult(minimal=True, tau=tau, certificates=certs)


@dataclass(frozen=True)
class DecompositionStats:
    """Contact structure between a certificate's cut and its components.

    ``edge_side_contacts``: cut vertices with a neighbor in the edge's
    component.  ``exclusive_contacts``: those among them with no neighbor in
    the detached part.  ``detached_components`` lists the components of the
    detached part (each a sorted tuple) with ``detached_contact_counts[i]``
    cut vertices adjacent to component i.
    """

    edge_side_contacts: tuple[int, ...]
    exclusive_contacts: tuple[int, ...]
    detached_components: tuple[tuple[int, ...], ...]
    detached_contact_counts: tuple[int, ...]


def certificate_decomposition_stats(cert: EdgeCertificate, g: Graph) -> DecompositionStats:
    """Contact statistics for a certificate with a nonempty detached part."""
    if not cert.detached:
        raise DecompositionUndefinedError(
            "certificate has an empty detached part; no contact statistics"
        )
    home = mask_of(cert.edge_component)
    away = mask_of(cert.detached)
    contacts = tuple(s for s in cert.cut if g.masks[s] & home)
    exclusive = tuple(s for s in contacts if not g.masks[s] & away)
    comps = _kernels.component_masks(g.masks, away)
    counts = tuple(
        sum(1 for s in cert.cut if g.masks[s] & comp) for comp in comps
    )
    return DecompositionStats(
        edge_side_contacts=contacts,
        exclusive_contacts=exclusive,
        detached_components=tuple(tuple_of(c) for c in comps),
        detached_contact_counts=counts,
    )

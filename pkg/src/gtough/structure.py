"""Structural verdicts for minimally tough claw-free graphs.

Each checker returns ClauseVerdict records: ``applicable`` reports whether
the hypothesis held, ``holds`` whether the conclusion was verified (vacuously
true when not applicable), and ``witness`` carries the concrete sets behind
the answer.  Conclusions of the form "x lies in a vertex cut of size exactly
2t" require 2t to be an integer; when it is not, the verdict is returned
with ``evaluable=False`` instead of guessing a rounding.

Threshold checks here are per-edge statements about minimally t-tough
graphs.  The checkers verify the local certificate conditions themselves but
trust the caller for global minimality, which the scan pipeline establishes
once per graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import _kernels
from .common import ClauseVerdict, as_fraction, ceil_fraction, fraction_str
from .connectivity import vertex_connectivity, min_cuts_containing
from .generators import TreeSpec, build_half_tough
from .graphs import Graph, degree_profile, mask_of
from .toughness import (
    EdgeCertificate,
    all_edge_certificates,
    edge_certificate,
    is_minimally_t_tough,
    toughness,
)

CLAUSE_IDS = (
    "attachment-overlap",
    "attachment-range",
    "saturated-attachment",
    "near-saturated-attachment",
    "split-endpoints",
    "pendant-endpoint",
)


@dataclass(frozen=True)
class Claw:
    """An induced K_{1,3}: a center adjacent to three pairwise non-neighbors."""

    center: int
    leaves: tuple[int, int, int]


def find_claw(g: Graph) -> Claw | None:
    """Lexicographically least claw (by center, then leaf triple), or None."""
    for c in range(g.n):
        nb = g.adj[c]
        if len(nb) < 3:
            continue
        for triple in combinations(nb, 3):
            a, b, d = triple
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return Claw(center=c, leaves=triple)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def check_matthews_sumner(g: Graph) -> ClauseVerdict:
    """Twice the toughness equals the connectivity, for claw-free graphs.

    Applicable to noncomplete claw-free graphs; disconnected ones count
    (both sides are 0).  Complete graphs and graphs with a claw are vacuous.
    """
    claw = find_claw(g)
    if g.is_complete() or claw is not None:
        why = "complete" if claw is None else "has a claw"
        witness = {"reason": why}
        if claw is not None:
            witness["claw"] = {"center": claw.center, "leaves": list(claw.leaves)}
        return ClauseVerdict("ms", applicable=False, holds=True, witness=witness)
    tau = toughness(g).value
    kappa = vertex_connectivity(g).kappa
    ok = 2 * tau == kappa
    return ClauseVerdict(
        "ms",
        applicable=True,
        holds=ok,
        witness={"tau": fraction_str(tau), "kappa": kappa},
    )


class _NotEvaluable(Exception):
    """A conclusion needs cuts of size exactly 2t but 2t is not an integer."""


def _in_cut_of_size(g: Graph, v: int, size: Fraction) -> bool:
    # out-of-range sizes admit no cuts at all, so membership is plainly false
    if size.denominator != 1:
        raise _NotEvaluable
    k = int(size)
    if not 1 <= k <= g.n - 2:
        return False
    return bool(min_cuts_containing(g, v, k))


def check_endpoint_cuts(g: Graph, edge, t) -> ClauseVerdict:
    """Edges whose certificate detaches nothing constrain their endpoints.

    Applicable when the certificate's detached part is empty; then either
    the minimum degree is at most 2t, or each endpoint lies in a vertex cut
    of size exactly 2t.
    """
    t = as_fraction(t)
    if not g.is_connected():
        raise ValueError("endpoint check expects a connected graph")
    cert = edge_certificate(g, edge, t)
    if cert.detached:
        return ClauseVerdict(
            "endpoints",
            applicable=False,
            holds=True,
            witness={"reason": "detached part nonempty"},
        )
    delta = degree_profile(g)[0]
    two_t = 2 * t
    if Fraction(delta) <= two_t:
        return ClauseVerdict(
            "endpoints",
            applicable=True,
            holds=True,
            witness={"delta": delta, "two_t": fraction_str(two_t)},
        )
    u, v = cert.edge
    try:
        in_u = _in_cut_of_size(g, u, two_t)
        in_v = _in_cut_of_size(g, v, two_t)
    except _NotEvaluable:
        return ClauseVerdict(
            "endpoints",
            applicable=True,
            holds=True,
            evaluable=False,
            witness={"reason": "2t is not an integer", "two_t": fraction_str(two_t)},
        )
    witness = {"delta": delta, "two_t": fraction_str(two_t), "u_in_cut": in_u, "v_in_cut": in_v}
    return ClauseVerdict("endpoints", applicable=True, holds=in_u and in_v, witness=witness)


def _clauses_for_certificate(g: Graph, t: Fraction, cert: EdgeCertificate,
                             deep4: bool) -> list[ClauseVerdict]:
    u, v = cert.edge
    cut_label = {"cut": list(cert.cut)}
    if not cert.detached:
        vac = {"reason": "detached part empty", **cut_label}
        return [ClauseVerdict(cid, applicable=False, holds=True, witness=vac)
                for cid in CLAUSE_IDS]

    home = mask_of(cert.edge_component)
    away = mask_of(cert.detached)
    k = cert.size
    contacts = tuple(s for s in cert.cut if g.masks[s] & home)
    s1 = tuple(s for s in contacts if not g.masks[s] & away)
    d_comps = _kernels.component_masks(g.masks, away)
    d_contacts = [tuple(s for s in cert.cut if g.masks[s] & c) for c in d_comps]
    two_t = 2 * t
    out = []

    def cut_member(vs) -> list[bool]:
        return [_in_cut_of_size(g, x, two_t) for x in vs]

    def verdict(cid, applicable, holds=True, evaluable=True, **extra):
        out.append(ClauseVerdict(cid, applicable=applicable,
                                 holds=holds if applicable and evaluable else True,
                                 evaluable=evaluable,
                                 witness={**cut_label, **extra}))

    def not_evaluable(cid, **extra):
        verdict(cid, True, evaluable=False,
                reason="2t is not an integer", two_t=fraction_str(two_t), **extra)

    # clause 1: with a large cut, the edge component shares few cut contacts
    # with any other component
    if Fraction(k) >= ceil_fraction(3 * t):
        limit = two_t - 1
        worst = None
        for comp, nsc in zip(d_comps, d_contacts):
            overlap = tuple(s for s in nsc if s in contacts)
            if Fraction(len(overlap)) > limit and worst is None:
                worst = {"component": sorted(_bits_list(comp)), "overlap": list(overlap)}
        verdict("attachment-overlap", True, holds=worst is None,
                k=k, limit=fraction_str(limit),
                **({"violating": worst} if worst else {}))
    else:
        verdict("attachment-overlap", False,
                reason="cut smaller than ceil(3t)", k=k)

    # clause 2: exclusive contacts are few and total contacts sit in [2t, 4t-1-|S1|];
    # at the upper wall the shared contacts must lie in exact-size cuts
    basic = (
        Fraction(len(s1)) <= ceil_fraction(t) - 1
        and two_t <= Fraction(len(contacts)) <= 4 * t - 1 - len(s1)
    )
    info = {"contacts": list(contacts), "exclusive": list(s1)}
    if not basic:
        verdict("attachment-range", True, holds=False, **info)
    elif Fraction(len(s1)) == 4 * t - 1 - len(contacts):
        shared = tuple(s for s in cert.cut if s not in s1)
        try:
            flags = cut_member(shared)
        except _NotEvaluable:
            not_evaluable("attachment-range", **info)
        else:
            verdict("attachment-range", True, holds=all(flags),
                    tight=True, shared=list(shared), in_cut=flags, **info)
    else:
        verdict("attachment-range", True, holds=True, **info)

    # clause 3: a fully saturated attachment forces every cut vertex into an
    # exact-size cut
    if Fraction(len(contacts)) == 4 * t - 1:
        try:
            flags = cut_member(cert.cut)
        except _NotEvaluable:
            not_evaluable("saturated-attachment")
        else:
            verdict("saturated-attachment", True, holds=all(flags), in_cut=flags)
    else:
        verdict("saturated-attachment", False,
                reason="contact count differs from 4t-1", contacts=list(contacts))

    # clause 4: one short of saturation bounds every other component's
    # attachment; the deep part also pins 2t-1 contacts into exact-size cuts
    if Fraction(len(contacts)) == 4 * t - 2:
        sizes = [len(nsc) for nsc in d_contacts]
        first = all(Fraction(s) <= two_t + 1 for s in sizes)
        if not deep4:
            verdict("near-saturated-attachment", True, holds=first,
                    attachment_sizes=sizes, deep_part="skipped")
        else:
            try:
                flags = cut_member(contacts)
            except _NotEvaluable:
                not_evaluable("near-saturated-attachment", attachment_sizes=sizes)
            else:
                deep = Fraction(sum(flags)) >= two_t - 1
                verdict("near-saturated-attachment", True, holds=first and deep,
                        attachment_sizes=sizes, contacts_in_cut=flags)
    else:
        verdict("near-saturated-attachment", False,
                reason="contact count differs from 4t-2", contacts=list(contacts))

    # clause 5: both endpoints keep company; a cut vertex seeing exactly
    # {u, v} inside the edge component pins both endpoints, otherwise one
    # endpoint together with all exclusive contacts is pinned
    if cert.side_u != (u,) and cert.side_v != (v,):
        pin_uv = any((g.masks[w] & home) == (1 << u | 1 << v) for w in cert.cut)
        try:
            if pin_uv:
                flags = cut_member((u, v))
                verdict("split-endpoints", True, holds=all(flags),
                        mode="shared-neighbor", endpoints_in_cut=flags)
            else:
                fu = cut_member((u,) + s1)
                fv = cut_member((v,) + s1)
                verdict("split-endpoints", True, holds=all(fu) or all(fv),
                        mode="one-sided", u_side=fu, v_side=fv)
        except _NotEvaluable:
            not_evaluable("split-endpoints")
    else:
        verdict("split-endpoints", False, reason="an endpoint is alone on its side")

    # clause 6: an endpoint alone on its side has small degree or pins the
    # other endpoint
    lone_u = cert.side_u == (u,) and cert.side_v != (v,)
    lone_v = cert.side_v == (v,) and cert.side_u != (u,)
    if lone_u or lone_v:
        # the statement names the lone endpoint; swap roles when it is v
        x, y = (u, v) if lone_u else (v, u)
        if Fraction(g.degree(x)) <= two_t + 1:
            verdict("pendant-endpoint", True, holds=True,
                    lone=x, degree=g.degree(x))
        else:
            try:
                in_cut = _in_cut_of_size(g, y, two_t)
            except _NotEvaluable:
                not_evaluable("pendant-endpoint", lone=x)
            else:
                verdict("pendant-endpoint", True, holds=in_cut,
                        lone=x, degree=g.degree(x), other_in_cut=in_cut)
    else:
        verdict("pendant-endpoint", False,
                reason="sides are not a lone endpoint plus a larger side")

    return out


def _bits_list(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def _merge_verdicts(per_cert: list[list[ClauseVerdict]], n_certs: int) -> list[ClauseVerdict]:
    merged = []
    for idx, cid in enumerate(CLAUSE_IDS):
        rows = [vs[idx] for vs in per_cert]
        applicable = [r for r in rows if r.applicable]
        if not applicable:
            merged.append(ClauseVerdict(cid, applicable=False, holds=True,
                                        witness={"certificates": n_certs}))
            continue
        bad = next((r for r in applicable if r.failed), None)
        if bad is not None:
            merged.append(ClauseVerdict(cid, applicable=True, holds=False,
                                        witness=bad.witness))
            continue
        blocked = next((r for r in applicable if not r.evaluable), None)
        if blocked is not None:
            merged.append(ClauseVerdict(cid, applicable=True, holds=True,
                                        evaluable=False, witness=blocked.witness))
            continue
        merged.append(ClauseVerdict(cid, applicable=True, holds=True,
                                    witness={"certificates": n_certs,
                                             "applicable_instances": len(applicable)}))
    return merged


def certificate_clauses(g: Graph, edge, t, exhaustive: bool = False) -> list[ClauseVerdict]:
    """Six attachment verdicts for an edge's certificate decomposition.

    All six are vacuous when the detached part is empty.  By default the
    clauses are evaluated against the canonical (smallest, lexicographically
    least) certificate, and clause 4 covers only its attachment-size part.
    ``exhaustive=True`` audits every minimum certificate and turns on clause
    4's expensive second conclusion; each merged verdict then fails if any
    certificate fails it.
    """
    t = as_fraction(t)
    if t <= 0:
        raise ValueError("threshold must be positive")
    if not g.is_connected():
        raise ValueError("clause checks expect a connected graph")
    if exhaustive:
        certs = all_edge_certificates(g, edge, t)
    else:
        certs = (edge_certificate(g, edge, t),)
    per_cert = [_clauses_for_certificate(g, t, c, deep4=exhaustive) for c in certs]
    if len(per_cert) == 1:
        return per_cert[0]
    return _merge_verdicts(per_cert, len(certs))


@dataclass(frozen=True)
class DegreeBoundReport:
    """Minimum degree against the proved and conjectured ceilings.

    ``bound`` is ceil((10t-5)/3) for t >= 2 and ceil(2t) below that, where
    the small thresholds have their own exact results; ``conjecture_bound``
    is always ceil(2t).
    """

    t: Fraction
    delta: int
    bound: int
    satisfied: bool
    conjecture_bound: int
    conjecture_satisfied: bool


def check_degree_bound(g: Graph, t) -> DegreeBoundReport:
    t = as_fraction(t)
    if t <= 0:
        raise ValueError("threshold must be positive")
    delta = degree_profile(g)[0]
    conjecture = ceil_fraction(2 * t)
    if t >= 2:
        bound = ceil_fraction((10 * t - 5) / 3)
    else:
        bound = conjecture
    return DegreeBoundReport(
        t=t,
        delta=delta,
        bound=bound,
        satisfied=delta <= bound,
        conjecture_bound=conjecture,
        conjecture_satisfied=delta <= conjecture,
    )


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [
        tr
        for tr in combinations(range(g.n), 3)
        if g.has_edge(tr[0], tr[1]) and g.has_edge(tr[0], tr[2]) and g.has_edge(tr[1], tr[2])
    ]


def invert_half_tough(g: Graph) -> tuple[TreeSpec | None, str | None]:
    """Reverse the pendant-tree construction, if g is an output of it.

    Every triangle is replaced by a fresh degree-3 vertex joined to its three
    corners.  Returns (spec, None) when the resulting graph is a valid
    construction input that rebuilds exactly g, else (None, reason).
    """
    tris = _triangles(g)
    used = set()
    for tr in tris:
        for pair in combinations(tr, 2):
            if pair in used:
                return None, "two triangles share an edge"
            used.add(pair)
    edges = [e for e in g.edges() if e not in used]
    for i, tr in enumerate(tris):
        edges.extend((c, g.n + i) for c in tr)
    spec = TreeSpec(Graph(g.n + len(tris), edges))
    bad = spec.violations()
    if bad:
        return None, f"inverted graph is not a valid input: {bad[0]}"
    rebuilt = build_half_tough(spec)
    if rebuilt != g:
        # centers are appended last, so a rebuild of a true output is literal
        return None, "rebuild does not reproduce the graph"
    return spec, None


def check_half_tough_construction(g: Graph) -> ClauseVerdict:
    """Membership test for the pendant-tree construction class.

    Applicable to connected, claw-free, minimally 1/2-tough graphs: each one
    should be reconstructible by de-contracting its triangles into a tree
    with maximum degree 3 whose degree-1 and degree-3 vertices are
    independent.
    """
    half = Fraction(1, 2)
    claw = find_claw(g)
    minimal = g.is_connected() and claw is None and is_minimally_t_tough(g, half).minimal
    if not minimal:
        return ClauseVerdict(
            "construction",
            applicable=False,
            holds=True,
            witness={"reason": "not a connected minimally 1/2-tough claw-free graph"},
        )
    spec, reason = invert_half_tough(g)
    if spec is None:
        return ClauseVerdict(
            "construction", applicable=True, holds=False, witness={"reason": reason}
        )
    return ClauseVerdict(
        "construction",
        applicable=True,
        holds=True,
        witness={"tree_edges": [list(e) for e in spec.tree.edges()],
                 "triangles": len(_triangles(g))},
    )

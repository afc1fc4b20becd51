"""Pure-Python bitset kernels.

Reference implementation of the hot search primitives.  Graphs are passed as
a sequence of adjacency bitmasks (``masks[v]`` has bit ``u`` set iff ``uv`` is
an edge) plus a vertex count; vertex sets travel as plain ints.  Python ints
are arbitrary-width, so this backend works for any ``n``; the compiled twin
in ``_fast.pyx`` covers ``n <= 64`` and must return identical values.
"""
from __future__ import annotations

from itertools import combinations
from math import gcd

NAME = "python"


def component_count(masks, alive: int) -> int:
    """Number of connected components of the subgraph induced on ``alive``."""
    count = 0
    rem = alive
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                nxt |= masks[bit.bit_length() - 1]
            frontier = nxt & rem & ~comp
            comp |= frontier
        rem &= ~comp
        count += 1
    return count


def component_masks(masks, alive: int) -> list[int]:
    """Component bitmasks of the subgraph induced on ``alive``.

    Ordered by smallest member, which makes downstream labellings
    deterministic.
    """
    out = []
    rem = alive
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                nxt |= masks[bit.bit_length() - 1]
            frontier = nxt & rem & ~comp
            comp |= frontier
        rem &= ~comp
        out.append(comp)
    return out


def _suffix_gain_table(masks, n: int) -> list[list[int]]:
    """gain[i][r]: largest possible component-count increase from removing r
    vertices chosen among indices >= i.

    Removing a vertex of degree d can raise the count by at most d - 1, so the
    bound is the sum of the r largest values of max(deg - 1, 0) over the
    suffix.  Admissible because degrees in the alive subgraph never exceed
    degrees in the full graph.
    """
    degs = [bin(masks[i]).count("1") for i in range(n)]
    table = []
    for i in range(n + 1):
        vals = sorted((max(d - 1, 0) for d in degs[i:]), reverse=True)
        acc = [0]
        for v in vals:
            acc.append(acc[-1] + v)
        table.append(acc)
    return table


def min_ratio_cut(masks, n: int) -> tuple[int, int, int]:
    """Exact minimum of |S| / w(G-S) over vertex sets with w(G-S) >= 2.

    Returns ``(p, q, witness_mask)`` with p/q reduced and the witness the
    lexicographically least optimal set (vertex tuples compared as sorted
    sequences, prefixes first).  Disconnected graphs yield ``(0, 1, 0)``.
    Raises ValueError when no removal disconnects (complete graphs).

    The search runs one DFS per removal size k, pruned by the suffix gain
    bound and by the best ratio found so far.  Including a vertex that is
    isolated in the current alive graph is skipped: such a set's ratio is
    strictly beaten by the same set without that vertex (size drops by one
    while the width grows by one), so no optimum is lost.
    """
    full = (1 << n) - 1
    if component_count(masks, full) >= 2:
        return (0, 1, 0)
    gains = _suffix_gain_table(masks, n)
    best_p = best_q = 0
    found = False

    for k in range(1, n - 1):
        if found and k * best_q >= best_p * (n - k):
            break  # even the widest possible split cannot beat the best ratio
        best_w = 1
        stack = [(0, 0, 0)]  # (next index, chosen count, removed mask)
        while stack:
            i, chosen, removed = stack.pop()
            need = k - chosen
            if need == 0:
                w = component_count(masks, full ^ removed)
                if w > best_w:
                    best_w = w
                continue
            if n - i < need:
                continue
            w_part = component_count(masks, full ^ removed)
            gain_row = gains[i]
            cap = w_part + gain_row[min(need, len(gain_row) - 1)]
            if cap > n - k:
                cap = n - k
            if cap <= best_w:
                continue
            if found and k * best_q >= best_p * cap:
                continue
            bit = 1 << i
            stack.append((i + 1, chosen, removed))
            if masks[i] & (full ^ removed) & ~bit:
                stack.append((i + 1, chosen + 1, removed | bit))
        if best_w >= 2 and (not found or k * best_q < best_p * best_w):
            g = gcd(k, best_w)
            best_p, best_q, found = k // g, best_w // g, True

    if not found:
        raise ValueError("no removal disconnects this graph")
    witness = _lex_min_witness(masks, n, best_p, best_q)
    return (best_p, best_q, witness)


def _lex_min_witness(masks, n: int, p: int, q: int) -> int:
    """Lexicographically least S with w(G-S) >= 2 and |S|/w(G-S) == p/q.

    Depth-first, always extending with the smallest unused vertex, testing
    each set on arrival; the visit order equals sorted-tuple order with
    prefixes first, so the first hit is the answer.  A subtree is entered
    only if some permitted size is still reachable: r more removals change
    the width by at least -r and at most the suffix gain bound, and the
    target width at size s is exactly q*s/p.  The prune must stay admissible
    (skip only subtrees with no valid set) or the lex-least guarantee breaks.
    """
    full = (1 << n) - 1
    # |S| = (p/q) * w and w <= n - |S|  =>  |S| <= p*n / (p+q)
    max_size = (p * n) // (p + q)
    gains = _suffix_gain_table(masks, n)

    def extendable(w_now: int, start: int, size: int) -> bool:
        row = gains[start]
        top = len(row) - 1
        for r in range(1, max_size - size + 1):
            num = q * (size + r)
            if num % p:
                continue
            target = num // p
            if target < 2 or target < w_now - r:
                continue
            if target <= w_now + row[min(r, top)]:
                return True
        return False

    def descend(start: int, mask: int, size: int) -> int | None:
        for j in range(start, n):
            child = mask | (1 << j)
            w = component_count(masks, full ^ child)
            if w >= 2 and q * (size + 1) == p * w:
                return child
            if size + 1 < max_size and extendable(w, j + 1, size + 1):
                hit = descend(j + 1, child, size + 1)
                if hit is not None:
                    return hit
        return None

    hit = descend(0, 0, 0)
    if hit is None:
        raise RuntimeError("optimal ratio has no witness; solver is inconsistent")
    return hit


def cuts_of_size(masks, n: int, k: int, required: int = 0) -> list[int]:
    """All vertex sets S (as masks) with required ⊆ S, |S| = k, w(G-S) >= 2.

    Emitted in lexicographic order of the sorted vertex tuples.  Exponential
    by nature; meant for desk-scale n.
    """
    full = (1 << n) - 1
    if required & ~full:
        raise ValueError("required vertices out of range")
    base = bin(required).count("1")
    free = [v for v in range(n) if not required >> v & 1]
    rest = k - base
    if rest < 0 or rest > len(free):
        return []
    out = []
    for combo in combinations(free, rest):
        s_mask = required
        for v in combo:
            s_mask |= 1 << v
        if component_count(masks, full ^ s_mask) >= 2:
            out.append(s_mask)
    return out


def certificate_search(masks, n: int, u: int, v: int, p: int, q: int) -> int | None:
    """Smallest (then lexicographically least) S avoiding u,v with

        w(G-S) * (p/q) <= |S|  and  w((G-e)-S) * (p/q) > |S|,   e = uv.

    Deleting one edge changes the component count by at most one, so the two
    inequalities force w(G-S) = floor(|S|*q/p) and w((G-e)-S) = w(G-S) + 1,
    i.e. e bridges its component of G-S.  Returns the witness mask or None.
    """
    full = (1 << n) - 1
    ebit = (1 << u) | (1 << v)
    masks_no_e = list(masks)
    masks_no_e[u] &= ~(1 << v)
    masks_no_e[v] &= ~(1 << u)
    free = [w for w in range(n) if not ebit >> w & 1]
    for k in range(1, n - 1):
        want = (k * q) // p
        if want < 1 or want > n - k:
            continue
        for combo in combinations(free, k):
            s_mask = 0
            for w in combo:
                s_mask |= 1 << w
            alive = full ^ s_mask
            if component_count(masks, alive) != want:
                continue
            if component_count(masks_no_e, alive) == want + 1:
                return s_mask
    return None

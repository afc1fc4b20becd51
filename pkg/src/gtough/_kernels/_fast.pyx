# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled bitset kernels for graphs on up to 64 vertices.

Mirrors ``gtough._kernels.pyref`` exactly; the algorithm notes and the
correctness argument for the pruning rules live there.  Both backends must
return identical values for identical inputs (the results are canonical:
reduced ratios, lexicographically least witnesses, lexicographic cut order).
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NAME = "compiled"
MAX_N = 64


cdef int _load(object masks, uint64_t* adj) except -1:
    cdef Py_ssize_t n = len(masks)
    cdef Py_ssize_t i
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        adj[i] = <uint64_t> masks[i]
    return <int> n


cdef inline uint64_t _full_mask(int n) nogil:
    if n >= 64:
        return <uint64_t> 0xFFFFFFFFFFFFFFFFULL
    return ((<uint64_t> 1) << n) - 1


cdef inline int _count(uint64_t* adj, uint64_t alive) nogil:
    cdef uint64_t rem = alive
    cdef uint64_t comp, frontier, nxt, f, bit
    cdef int cnt = 0
    while rem:
        bit = rem & (~rem + 1)
        comp = bit
        frontier = bit
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & (~f + 1)
                f ^= bit
                nxt |= adj[__builtin_ctzll(bit)]
            frontier = nxt & rem & (~comp)
            comp |= frontier
        rem &= ~comp
        cnt += 1
    return cnt


def component_count(masks, alive):
    cdef uint64_t adj[64]
    _load(masks, adj)
    return _count(adj, <uint64_t> alive)


def component_masks(masks, alive):
    cdef uint64_t adj[64]
    _load(masks, adj)
    cdef uint64_t rem = <uint64_t> alive
    cdef uint64_t comp, frontier, nxt, f, bit
    out = []
    while rem:
        bit = rem & (~rem + 1)
        comp = bit
        frontier = bit
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & (~f + 1)
                f ^= bit
                nxt |= adj[__builtin_ctzll(bit)]
            frontier = nxt & rem & (~comp)
            comp |= frontier
        rem &= ~comp
        out.append(<object> comp)
    return out


cdef long long _gcd(long long a, long long b) nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef struct _WidthCtx:
    uint64_t adj[64]
    int n
    uint64_t full
    int k
    int best_w
    int found
    long long bp
    long long bq
    int gsum[65][65]


cdef void _width_dfs(_WidthCtx* ctx, int i, int chosen, uint64_t removed) nogil:
    cdef int need = ctx.k - chosen
    cdef int w, wpart, cap, avail
    cdef uint64_t bit
    if need == 0:
        w = _count(ctx.adj, ctx.full ^ removed)
        if w > ctx.best_w:
            ctx.best_w = w
        return
    if ctx.n - i < need:
        return
    wpart = _count(ctx.adj, ctx.full ^ removed)
    avail = ctx.n - i
    cap = wpart + ctx.gsum[i][need if need <= avail else avail]
    if cap > ctx.n - ctx.k:
        cap = ctx.n - ctx.k
    if cap <= ctx.best_w:
        return
    if ctx.found and (<long long> ctx.k) * ctx.bq >= ctx.bp * (<long long> cap):
        return
    bit = (<uint64_t> 1) << i
    if ctx.adj[i] & (ctx.full ^ removed) & (~bit):
        _width_dfs(ctx, i + 1, chosen + 1, removed | bit)
    _width_dfs(ctx, i + 1, chosen, removed)


cdef struct _WitCtx:
    uint64_t adj[64]
    int n
    uint64_t full
    long long p
    long long q
    int max_size
    int found
    uint64_t result
    int gsum[65][65]


cdef int _wit_extendable(_WitCtx* ctx, int w_now, int start, int size) nogil:
    cdef int r, top, idx
    cdef long long num, target
    top = ctx.n - start
    for r in range(1, ctx.max_size - size + 1):
        num = ctx.q * (<long long> (size + r))
        if num % ctx.p:
            continue
        target = num // ctx.p
        if target < 2 or target < <long long> (w_now - r):
            continue
        idx = r if r < top else top
        if target <= <long long> w_now + <long long> ctx.gsum[start][idx]:
            return 1
    return 0


cdef void _wit_dfs(_WitCtx* ctx, int start, uint64_t mask, int size) nogil:
    cdef int j, w
    cdef uint64_t child
    for j in range(start, ctx.n):
        if ctx.found:
            return
        child = mask | ((<uint64_t> 1) << j)
        w = _count(ctx.adj, ctx.full ^ child)
        if w >= 2 and ctx.q * (size + 1) == ctx.p * w:
            ctx.found = 1
            ctx.result = child
            return
        if size + 1 < ctx.max_size and _wit_extendable(ctx, w, j + 1, size + 1):
            _wit_dfs(ctx, j + 1, child, size + 1)


def min_ratio_cut(masks, n):
    cdef _WidthCtx ctx
    cdef int nn = _load(masks, ctx.adj)
    if nn != <int> n:
        raise ValueError("mask count does not match n")
    ctx.n = nn
    ctx.full = _full_mask(nn)
    if _count(ctx.adj, ctx.full) >= 2:
        return (0, 1, 0)

    cdef int degs[64]
    cdef int vals[64]
    cdef int i, j, t, length, key
    for i in range(nn):
        degs[i] = __builtin_popcountll(ctx.adj[i])
    for i in range(nn + 1):
        length = nn - i
        for j in range(length):
            vals[j] = degs[i + j] - 1
            if vals[j] < 0:
                vals[j] = 0
        for j in range(1, length):           # insertion sort, descending
            key = vals[j]
            t = j - 1
            while t >= 0 and vals[t] < key:
                vals[t + 1] = vals[t]
                t -= 1
            vals[t + 1] = key
        ctx.gsum[i][0] = 0
        for j in range(length):
            ctx.gsum[i][j + 1] = ctx.gsum[i][j] + vals[j]

    ctx.found = 0
    ctx.bp = 0
    ctx.bq = 0
    cdef int k
    cdef long long g
    for k in range(1, nn - 1):
        if ctx.found and (<long long> k) * ctx.bq >= ctx.bp * (<long long> (nn - k)):
            break
        ctx.k = k
        ctx.best_w = 1
        _width_dfs(&ctx, 0, 0, 0)
        if ctx.best_w >= 2 and (not ctx.found or
                                (<long long> k) * ctx.bq < ctx.bp * (<long long> ctx.best_w)):
            g = _gcd(<long long> k, <long long> ctx.best_w)
            ctx.bp = k // g
            ctx.bq = ctx.best_w // g
            ctx.found = 1
    if not ctx.found:
        raise ValueError("no removal disconnects this graph")

    cdef _WitCtx wit
    for i in range(nn):
        wit.adj[i] = ctx.adj[i]
    for i in range(nn + 1):
        for j in range(nn - i + 1):
            wit.gsum[i][j] = ctx.gsum[i][j]
    wit.n = nn
    wit.full = ctx.full
    wit.p = ctx.bp
    wit.q = ctx.bq
    wit.max_size = <int> ((ctx.bp * nn) // (ctx.bp + ctx.bq))
    wit.found = 0
    wit.result = 0
    _wit_dfs(&wit, 0, 0, 0)
    if not wit.found:
        raise RuntimeError("optimal ratio has no witness; solver is inconsistent")
    return (<object> ctx.bp, <object> ctx.bq, <object> wit.result)


def cuts_of_size(masks, n, k, required=0):
    cdef uint64_t adj[64]
    cdef int nn = _load(masks, adj)
    if nn != <int> n:
        raise ValueError("mask count does not match n")
    cdef uint64_t full = _full_mask(nn)
    cdef uint64_t req = <uint64_t> required
    if req & (~full):
        raise ValueError("required vertices out of range")
    cdef int kk = <int> k
    cdef int base = __builtin_popcountll(req)
    cdef int fr[64]
    cdef int m = 0
    cdef int v, t
    for v in range(nn):
        if not (req >> v) & 1:
            fr[m] = v
            m += 1
    cdef int rest = kk - base
    out = []
    if rest < 0 or rest > m:
        return out
    cdef uint64_t s
    if rest == 0:
        if _count(adj, full ^ req) >= 2:
            out.append(<object> req)
        return out
    cdef int idx[64]
    for t in range(rest):
        idx[t] = t
    while True:
        s = req
        for t in range(rest):
            s |= (<uint64_t> 1) << fr[idx[t]]
        if _count(adj, full ^ s) >= 2:
            out.append(<object> s)
        t = rest - 1
        while t >= 0 and idx[t] == m - rest + t:
            t -= 1
        if t < 0:
            break
        idx[t] += 1
        for v in range(t + 1, rest):
            idx[v] = idx[v - 1] + 1
    return out


def certificate_search(masks, n, u, v, p, q):
    cdef uint64_t adj[64]
    cdef uint64_t adj_ne[64]
    cdef int nn = _load(masks, adj)
    if nn != <int> n:
        raise ValueError("mask count does not match n")
    cdef int uu = <int> u
    cdef int vv = <int> v
    cdef long long pp = <long long> p
    cdef long long qq = <long long> q
    cdef uint64_t full = _full_mask(nn)
    cdef int i, t, w1
    for i in range(nn):
        adj_ne[i] = adj[i]
    adj_ne[uu] &= ~((<uint64_t> 1) << vv)
    adj_ne[vv] &= ~((<uint64_t> 1) << uu)
    cdef int fr[64]
    cdef int m = 0
    for i in range(nn):
        if i != uu and i != vv:
            fr[m] = i
            m += 1
    cdef int idx[64]
    cdef uint64_t s, alive
    cdef int k
    cdef long long want
    for k in range(1, nn - 1):
        want = ((<long long> k) * qq) // pp
        if want < 1 or want > nn - k:
            continue
        if k > m:
            continue
        for t in range(k):
            idx[t] = t
        while True:
            s = 0
            for t in range(k):
                s |= (<uint64_t> 1) << fr[idx[t]]
            alive = full ^ s
            w1 = _count(adj, alive)
            if w1 == <int> want and _count(adj_ne, alive) == w1 + 1:
                return <object> s
            t = k - 1
            while t >= 0 and idx[t] == m - k + t:
                t -= 1
            if t < 0:
                break
            idx[t] += 1
            for i in range(t + 1, k):
                idx[i] = idx[i - 1] + 1
    return None

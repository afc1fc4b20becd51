"""Micro-benchmark comparing the pure-Python and compiled kernels."""
from __future__ import annotations

import random
from itertools import combinations
from time import perf_counter

from . import _kernels
from .graphs import Graph

DEFAULT_SIZES = (10, 12, 14, 16)
DEFAULT_TRIALS = 3
SEED = 1729


def _sample(n: int, rng: random.Random) -> Graph:
    # keep density moderate so the cut search has real work to do
    edges = [e for e in combinations(range(n), 2) if rng.random() < 0.35]
    g = Graph(n, edges)
    if not g.is_connected() or g.is_complete():
        return _sample(n, rng)
    return g


def _time_backend(backend, graphs) -> float:
    started = perf_counter()
    for g in graphs:
        backend.min_ratio_cut(g.masks, g.n)
    return (perf_counter() - started) * 1000


def run_bench(sizes=DEFAULT_SIZES, trials=DEFAULT_TRIALS, out=print) -> int:
    backends = _kernels.backends()
    pyref = backends["python"]
    fast = backends.get("compiled")
    rng = random.Random(SEED)
    out(f"min_ratio_cut benchmark, {trials} graphs per size, seed {SEED}")
    if fast is None:
        out("compiled backend not built; timing pure Python only")
    header = f"{'n':>4} {'edges':>6} {'python ms':>10}"
    if fast is not None:
        header += f" {'compiled ms':>12} {'speedup':>8}"
    out(header)
    for n in sizes:
        graphs = [_sample(n, rng) for _ in range(trials)]
        edges = sum(g.m for g in graphs) // len(graphs)
        py_ms = _time_backend(pyref, graphs)
        row = f"{n:>4} {edges:>6} {py_ms:>10.1f}"
        if fast is not None:
            fast_ms = _time_backend(fast, graphs)
            ratio = py_ms / fast_ms if fast_ms > 0 else float("inf")
            row += f" {fast_ms:>12.1f} {ratio:>7.1f}x"
        out(row)
    return 0

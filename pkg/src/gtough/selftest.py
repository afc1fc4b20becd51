"""Built-in integrity suite: fixtures with frozen values plus oracle parity.

The fixture corpus ships with the package (data/selftest.g6 and
data/selftest_expected.json); its toughness, connectivity and claw values
were computed by the brute-force oracles and are compared here against the
production pipeline.  A second stage re-derives a seeded random batch both
ways.  Any mismatch is printed and the run exits nonzero.
"""
from __future__ import annotations

import json
import random
from importlib import resources
from itertools import combinations

from . import _kernels
from .connectivity import vertex_connectivity, vertex_connectivity_bruteforce
from .graphs import Graph, parse_graph6, write_graph6
from .structure import find_claw
from .graphs import degree_profile
from .toughness import toughness, toughness_bruteforce

FIXTURE_G6 = "selftest.g6"
FIXTURE_EXPECTED = "selftest_expected.json"

RANDOM_GRAPHS = 120
RANDOM_SEED = 20240311


def _load_fixture(name: str) -> str:
    ref = resources.files("gtough").joinpath("data").joinpath(name)
    if not ref.is_file():
        raise FileNotFoundError(
            f"selftest fixture missing: {name} (expected inside the gtough/data "
            f"package directory; reinstall the package)"
        )
    return ref.read_text()


def _check_fixtures(out) -> int:
    expected = json.loads(_load_fixture(FIXTURE_EXPECTED))
    lines = [ln for ln in _load_fixture(FIXTURE_G6).splitlines() if ln.strip()]
    rows = expected["graphs"]
    if len(lines) != len(rows):
        out(f"FAIL fixtures: {len(lines)} graphs but {len(rows)} expected rows")
        return 1
    failures = 0
    for text, row in zip(lines, rows):
        problems = []
        if text != row["graph6"]:
            problems.append(f"graph6 text {text!r} != {row['graph6']!r}")
        g = parse_graph6(text)
        if write_graph6(g) != text:
            problems.append("graph6 round-trip changed the encoding")
        if (g.n, g.m) != (row["n"], row["m"]):
            problems.append(f"size ({g.n},{g.m}) != ({row['n']},{row['m']})")
        tau = toughness(g)
        if str(tau) != row["tau"]:
            problems.append(f"tau {tau} != {row['tau']}")
        witness = list(tau.witness) if tau.witness is not None else None
        if witness != row["tau_witness"]:
            problems.append(f"tau witness {witness} != {row['tau_witness']}")
        if vertex_connectivity(g).kappa != row["kappa"]:
            problems.append(f"kappa {vertex_connectivity(g).kappa} != {row['kappa']}")
        if degree_profile(g)[0] != row["delta"]:
            problems.append("minimum degree mismatch")
        if (find_claw(g) is None) != row["claw_free"]:
            problems.append("claw-freeness mismatch")
        if problems:
            failures += 1
            out(f"FAIL fixture {row['name']}: " + "; ".join(problems))
    if not failures:
        out(f"ok fixtures: {len(rows)} graphs match frozen oracle values")
    return failures


def _check_oracle_parity(out) -> int:
    rng = random.Random(RANDOM_SEED)
    failures = 0
    for _ in range(RANDOM_GRAPHS):
        n = rng.randint(1, 7)
        p = rng.choice((0.2, 0.4, 0.6, 0.8))
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = Graph(n, edges)
        fast, slow = toughness(g), toughness_bruteforce(g)
        if (fast.value, fast.witness) != (slow.value, slow.witness):
            failures += 1
            out(f"FAIL oracle parity (toughness) on {write_graph6(g)}: "
                f"{fast} vs {slow}")
        if vertex_connectivity(g).kappa != vertex_connectivity_bruteforce(g):
            failures += 1
            out(f"FAIL oracle parity (connectivity) on {write_graph6(g)}")
    if not failures:
        out(f"ok oracle parity: {RANDOM_GRAPHS} seeded random graphs, "
            f"solver == brute force")
    return failures


def _check_kernel_parity(out) -> int:
    if not _kernels.has_compiled():
        out("ok kernel parity: skipped (compiled backend not built)")
        return 0
    pyref = _kernels.backends()["python"]
    fast = _kernels.backends()["compiled"]
    rng = random.Random(RANDOM_SEED + 1)
    failures = 0
    for _ in range(60):
        n = rng.randint(2, 9)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        g = Graph(n, edges)
        if g.is_complete():
            continue
        if pyref.min_ratio_cut(g.masks, g.n) != fast.min_ratio_cut(g.masks, g.n):
            failures += 1
            out(f"FAIL kernel parity on {write_graph6(g)}")
    if not failures:
        out("ok kernel parity: python and compiled kernels agree")
    return failures


def run_selftest(out=print) -> int:
    """Run all suites; returns 0 when everything passes."""
    try:
        failures = _check_fixtures(out)
    except FileNotFoundError as exc:
        out(f"FAIL {exc}")
        return 1
    failures += _check_oracle_parity(out)
    failures += _check_kernel_parity(out)
    if failures:
        out(f"selftest: {failures} failure(s)")
        return 1
    out("selftest: all suites passed")
    return 0

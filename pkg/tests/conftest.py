"""Shared corpora for the suite.

Full enumeration up to n = 8 dominates the suite's runtime, so the corpora
are session-scoped.  The enumerators themselves are cached inside the
package, which makes direct calls in unit tests free once a fixture ran.
"""
from fractions import Fraction

import pytest

from gtough import (
    Graph,
    enumerate_connected,
    is_claw_free,
    is_minimally_t_tough,
    toughness,
)


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


@pytest.fixture(scope="session")
def connected7():
    return tuple(g for n in range(1, 8) for g in enumerate_connected(n))


@pytest.fixture(scope="session")
def connected8():
    return tuple(g for n in range(1, 9) for g in enumerate_connected(n))


@pytest.fixture(scope="session")
def min_tough_claw_free(connected8):
    """Minimally t-tough claw-free graphs with n <= 8, keyed by t.

    Covers the two thresholds the structural checks target: 1/2 and 1.
    """
    wanted = (Fraction(1, 2), Fraction(1))
    out = {t: [] for t in wanted}
    for g in connected8:
        if g.n < 3 or g.is_complete() or not is_claw_free(g):
            continue
        tau = toughness(g).value
        if tau not in out:
            continue
        if is_minimally_t_tough(g, tau).minimal:
            out[tau].append(g)
    return {t: tuple(v) for t, v in out.items()}

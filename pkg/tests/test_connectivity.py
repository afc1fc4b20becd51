"""Vertex connectivity, minimum cuts, atoms, and the atom containment check."""
import random

import pytest

from gtough import (
    CompleteGraphError,
    Graph,
    all_min_cuts,
    atoms,
    check_mader_atom_property,
    components_after_removal,
    make_complete,
    make_cycle,
    make_path,
    make_petersen,
    make_star,
    min_cuts_containing,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)
from gtough.generators import enumerate_connected
from .conftest import random_graph


def test_kappa_fixtures():
    r = vertex_connectivity(make_cycle(4))
    assert r.kappa == 2 and not r.complete
    assert r.cut == (0, 2) and r.parts == 2

    r = vertex_connectivity(make_complete(4))
    assert r.kappa == 3 and r.complete and r.cut is None and r.parts is None

    r = vertex_connectivity(make_star(3))
    assert r.kappa == 1 and r.cut == (0,) and r.parts == 3

    r = vertex_connectivity(Graph(4, [(0, 1), (2, 3)]))
    assert r.kappa == 0 and r.cut == () and r.parts == 2

    assert vertex_connectivity(make_petersen()).kappa == 3
    assert vertex_connectivity(Graph(1)).kappa == 0
    with pytest.raises(ValueError):
        vertex_connectivity(Graph(0))


def test_kappa_matches_bruteforce_small(connected7):
    for g in connected7:
        if g.n > 6:
            continue
        assert vertex_connectivity(g).kappa == vertex_connectivity_bruteforce(g)


def test_kappa_matches_bruteforce_random():
    rng = random.Random(31)
    for _ in range(120):
        g = random_graph(rng, rng.randrange(1, 8), rng.random())
        assert vertex_connectivity(g).kappa == vertex_connectivity_bruteforce(g)


def test_witness_cut_disconnects():
    rng = random.Random(32)
    for _ in range(80):
        g = random_graph(rng, rng.randrange(2, 9), 0.3 + 0.5 * rng.random())
        r = vertex_connectivity(g)
        if r.complete or r.kappa == 0:
            continue
        assert len(r.cut) == r.kappa
        assert components_after_removal(g, r.cut).count == r.parts >= 2


def test_min_cuts_containing():
    g = make_cycle(4)
    assert min_cuts_containing(g, 0, 2) == [(0, 2)]
    assert min_cuts_containing(g, 0, 1) == []
    star = make_star(3)
    assert min_cuts_containing(star, 0, 1) == [(0,)]
    assert min_cuts_containing(star, 1, 2) == [(0, 1)]
    with pytest.raises(CompleteGraphError):
        min_cuts_containing(make_complete(4), 0, 1)
    with pytest.raises(ValueError):
        min_cuts_containing(g, 0, 3)
    with pytest.raises(ValueError):
        min_cuts_containing(g, 9, 1)
    with pytest.raises(ValueError):
        min_cuts_containing(Graph(4, [(0, 1), (2, 3)]), 0, 1)


def test_all_min_cuts():
    assert all_min_cuts(make_cycle(4)) == [(0, 2), (1, 3)]
    assert all_min_cuts(make_star(3)) == [(0,)]
    assert all_min_cuts(Graph(3, [(0, 1)])) == [()]
    with pytest.raises(CompleteGraphError):
        all_min_cuts(make_complete(3))


def test_atoms_examples():
    recs = atoms(make_cycle(4))
    assert [r.atom for r in recs] == [(0,), (1,), (2,), (3,)]
    assert recs[0].boundary == (1, 3) and recs[0].kappa == 2

    recs = atoms(make_star(3))
    assert [r.atom for r in recs] == [(1,), (2,), (3,)]
    assert all(r.boundary == (0,) for r in recs)

    with pytest.raises(CompleteGraphError):
        atoms(make_complete(4))


def test_atom_boundary_is_minimum_cut():
    rng = random.Random(33)
    checked = 0
    while checked < 60:
        g = random_graph(rng, rng.randrange(4, 9), 0.4 + 0.4 * rng.random())
        if not g.is_connected() or g.is_complete():
            continue
        kappa = vertex_connectivity(g).kappa
        for rec in atoms(g):
            assert rec.kappa == kappa
            assert len(rec.boundary) == kappa
        checked += 1


def test_mader_verdicts():
    v = check_mader_atom_property(make_complete(5))
    assert not v.applicable and v.holds

    v = check_mader_atom_property(Graph(4, [(0, 1), (2, 3)]))
    assert not v.applicable and v.holds

    for g in (make_cycle(5), make_star(3), make_petersen(), make_path(6)):
        v = check_mader_atom_property(g)
        assert v.applicable and v.holds and not v.failed
    with pytest.raises(ValueError):
        check_mader_atom_property(Graph(0))

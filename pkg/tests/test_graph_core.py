"""Graph construction, immutability, and the basic structural queries."""
import pytest

from gtough import (
    REMOVED,
    Graph,
    components_after_removal,
    degree_profile,
    is_bridge,
    make_cycle,
    make_path,
    mask_of,
    tuple_of,
)


def test_build_and_edges():
    g = Graph(4, [(0, 1), (2, 1), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1) == (0, 2)
    assert g.degree(2) == 2
    assert g.has_edge(1, 0) and not g.has_edge(0, 3)
    assert not g.has_edge(-1, 0) and not g.has_edge(7, 0)


def test_edges_accept_any_iterable():
    g = Graph(3, ((u, u + 1) for u in range(2)))
    assert g.edges() == [(0, 1), (1, 2)]


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph(-1)
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])


def test_immutable():
    g = make_path(3)
    with pytest.raises(AttributeError):
        g.n = 5
    assert hash(g) == hash(Graph(3, [(0, 1), (1, 2)]))
    assert g == Graph(3, [(1, 2), (0, 1)])
    assert g != Graph(3, [(0, 1)])
    assert g != "Bw"


def test_duplicate_edges_collapse():
    g = Graph(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_masks_and_helpers():
    g = make_cycle(4)
    assert g.full_mask == 0b1111
    assert mask_of((0, 2)) == 0b101
    assert tuple_of(0b1010) == (1, 3)
    assert g.masks[0] == mask_of((1, 3))


def test_without_edge():
    g = make_cycle(4)
    h = g.without_edge(0, 1)
    assert h.m == 3 and g.m == 4
    assert not h.has_edge(0, 1)
    with pytest.raises(ValueError):
        g.without_edge(0, 2)


def test_relabel_roundtrip():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    h = g.relabel((3, 2, 1, 0))
    assert h.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.relabel((1, 0, 2, 3)).edges() == [(0, 1), (0, 2), (2, 3)]
    with pytest.raises(ValueError):
        g.relabel((0, 0, 1, 2))


def test_connectivity_flags():
    assert make_cycle(4).is_connected()
    assert not Graph(3, [(0, 1)]).is_connected()
    assert Graph(0).is_connected()
    assert Graph(1).is_complete()
    assert not make_path(3).is_complete()


def test_components_after_removal():
    g = make_cycle(6)
    part = components_after_removal(g, (0, 3))
    assert part.count == 2
    assert part.labels == (REMOVED, 0, 0, REMOVED, 1, 1)
    assert components_after_removal(g, ()).count == 1
    with pytest.raises(ValueError):
        components_after_removal(g, (9,))


def test_degree_profile():
    delta, degrees = degree_profile(make_path(4))
    assert delta == 1
    assert degrees == (1, 2, 2, 1)
    with pytest.raises(ValueError):
        degree_profile(Graph(0))


def test_is_bridge():
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    assert is_bridge(g, (2, 3))
    assert is_bridge(g, (3, 4))
    assert not is_bridge(g, (0, 1))
    with pytest.raises(ValueError):
        is_bridge(g, (0, 4))

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected, graphs
from leafspan.graph import (CapacityError, Graph, Graph6Error, GraphError, bits, cross_edge_count,
                            degree_profile, delete_vertices, disjoint_union, induced_subgraph, join,
                            mask_of, multiple, parse_graph6, validate, write_graph6)


def test_graph6_known_strings():
    assert write_graph6(Graph.complete(3)) == "Bw"
    assert write_graph6(Graph.complete(2)) == "A_"
    assert write_graph6(Graph.empty(2)) == "A?"
    assert parse_graph6("Bw") == Graph.complete(3)
    assert parse_graph6(write_graph6(Graph.cycle(5))) == Graph.cycle(5)


def test_graph6_header_and_whitespace():
    assert parse_graph6(">>graph6<<Bw\n") == Graph.complete(3)


@pytest.mark.parametrize("bad", ["", "?", "B", "Bw?", "B\x7f", "Bx", "~??"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_error_offset():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("B\x01")
    assert info.value.offset >= 1


def test_roundtrip_order6_enumeration():
    gs = connected(6)
    assert len(gs) == 112
    for g in gs:
        assert parse_graph6(write_graph6(g)) == g


def test_roundtrip_random_large():
    rng = random.Random(20260101)
    for _ in range(200):
        n = rng.randint(1, 64)
        p = rng.random()
        g = Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])
        assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=30))
def test_roundtrip_property(g):
    s = write_graph6(g)
    assert s.isprintable() and all(63 <= ord(c) <= 126 for c in s)
    assert parse_graph6(s) == g


def test_constructor_validation():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(CapacityError):
        Graph.empty(65)


def test_capacity_of_operations():
    with pytest.raises(CapacityError):
        disjoint_union(Graph.complete(40), Graph.complete(30))
    with pytest.raises(CapacityError):
        join(Graph.empty(33), Graph.empty(32))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_join_and_union_arithmetic(g, h):
    u = disjoint_union(g, h)
    j = join(g, h)
    assert u.n == j.n == g.n + h.n
    assert u.size == g.size + h.size
    assert j.size == g.size + h.size + g.n * h.n
    a, b = g.full, (h.full << g.n)
    assert cross_edge_count(u, a, b) == 0
    assert cross_edge_count(j, a, b) == g.n * h.n
    assert induced_subgraph(j, a) == g and induced_subgraph(j, b) == h


def test_multiple():
    g = multiple(Graph.complete(2), 3)
    assert g.n == 6 and g.size == 3 and len(g.components()) == 3


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=9), st.data())
def test_induced_is_functorial(g, data):
    s = data.draw(st.integers(1, g.full))
    t = data.draw(st.integers(1, g.full))
    st_mask = s & t
    if not st_mask:
        return
    # induce on s, then on the image of s & t inside it
    hs = induced_subgraph(g, s)
    pos = {v: i for i, v in enumerate(bits(s))}
    inner = mask_of(pos[v] for v in bits(st_mask))
    assert induced_subgraph(hs, inner) == induced_subgraph(g, st_mask)
    assert delete_vertices(g, g.full & ~s) == hs


def test_induced_empty_raises():
    with pytest.raises(GraphError):
        induced_subgraph(Graph.complete(3), 0)


def test_cross_edges_overlap_raises():
    with pytest.raises(GraphError):
        cross_edge_count(Graph.complete(3), 0b011, 0b110)


def test_degree_profile():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    assert degree_profile(g) == (1, 3, [1, 1, 1, 3], True)
    assert degree_profile(Graph.empty(3))[3] is False
    validate(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10), st.data())
def test_relabel_preserves_structure(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = g.relabel(perm)
    assert h.size == g.size
    assert sorted(h.degrees) == sorted(g.degrees)
    assert all(h.has_edge(i, j) == g.has_edge(perm[i], perm[j]) for i in range(g.n) for j in range(g.n))


def test_components():
    g = disjoint_union(Graph.path(3), Graph.cycle(4))
    assert not g.is_connected()
    assert sorted(c.bit_count() for c in g.components()) == [3, 4]
    assert str(g) == write_graph6(g)

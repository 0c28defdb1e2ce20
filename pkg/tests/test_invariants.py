from hypothesis import given, settings

import oracles
from conftest import connected_upto, graphs
from leafspan.constructions import petersen
from leafspan.graph import Graph, disjoint_union
from leafspan.invariants import (complement, disconnects, independence, is_independent,
                                 is_triangle_free, is_two_connected, regularity, sigma,
                                 vertex_connectivity, vertex_connectivity_bruteforce)


def test_kappa_matches_bruteforce_on_small_corpus():
    for g in connected_upto(6):
        assert vertex_connectivity(g).kappa == vertex_connectivity_bruteforce(g), str(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_kappa_property(g):
    res = vertex_connectivity(g)
    assert res.kappa == vertex_connectivity_bruteforce(g)
    assert res.kappa <= min(g.degrees)
    if g.n >= 2 and g.size < g.n * (g.n - 1) // 2:
        # the reported cut is a genuine minimum separator
        assert res.min_cut.bit_count() == res.kappa
        assert disconnects(g, res.min_cut)


def test_kappa_special_cases():
    assert vertex_connectivity(Graph.complete(5)).kappa == 4
    d = vertex_connectivity(disjoint_union(Graph.complete(3), Graph.complete(2)))
    assert d.kappa == 0 and d.min_cut == 0
    assert vertex_connectivity(Graph.path(4)).kappa == 1
    assert vertex_connectivity(Graph.cycle(6)).kappa == 2


def test_two_connected():
    assert is_two_connected(Graph.cycle(3))
    assert not is_two_connected(Graph.complete(2))
    assert not is_two_connected(Graph.path(5))


def test_petersen_values():
    p = petersen()
    assert vertex_connectivity(p).kappa == 3
    res = independence(p)
    assert res.alpha == 4 and is_independent(p, res.witness)
    assert res.sigma == {1: 3, 2: 6, 3: 9, 4: 12}
    assert regularity(p) == 3
    assert is_triangle_free(p)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_alpha_and_sigma_against_subset_scan(g):
    res = independence(g)
    assert res.alpha == oracles.alpha_bruteforce(g)
    assert is_independent(g, res.witness) and res.witness.bit_count() == res.alpha
    for k in range(1, 4):
        assert sigma(g, k) == oracles.sigma_bruteforce(g, k)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_alpha_is_clique_number_of_complement(g):
    h = complement(g)
    clique = max(len(s) for s in oracles.independent_sets(complement(h)))
    assert independence(g).alpha == clique
    assert complement(h) == g


def test_sigma_undefined():
    assert sigma(Graph.complete(4), 2) is None
    assert sigma(Graph.cycle(5), 3) is None
    assert sigma(Graph.cycle(6), 3) == 6


def test_predicates():
    assert regularity(Graph.path(3)) is None
    assert not is_triangle_free(Graph.complete(3))
    assert regularity(Graph.cycle(7)) == 2

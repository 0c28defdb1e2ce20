import pytest
from hypothesis import given, settings

import oracles
from conftest import connected_upto, graphs
from leafspan.constructions import petersen, petersen_triangle
from leafspan.cycles import (CycleWitness, circumference, circumference_dp, is_cycle_of,
                             is_hamiltonian, is_path_of, is_traceable, longest_cycle_properties,
                             longest_path, longest_path_dp, normalize_cycle)
from leafspan.graph import Graph, GraphError


def test_engines_agree_up_to_6():
    for g in connected_upto(6):
        c, w = circumference(g)
        assert c == circumference_dp(g)
        if c:
            assert is_cycle_of(g, w.vertices) and w.length == c
        p, pw = longest_path(g)
        assert p == longest_path_dp(g) and is_path_of(g, pw.vertices)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_against_permutation_search(g):
    assert circumference(g)[0] == oracles.circumference_bruteforce(g)
    assert longest_path(g)[0] == oracles.longest_path_bruteforce(g)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_dfs_matches_dp(g):
    c, w = circumference(g)
    assert c == circumference_dp(g)
    assert longest_path(g)[0] == longest_path_dp(g)
    if c:
        assert tuple(w.vertices) == normalize_cycle(w.vertices)


def test_forest_has_no_cycle():
    assert circumference(Graph.path(5)) == (0, None)
    assert circumference_dp(Graph.path(5)) == 0


def test_petersen():
    p = petersen()
    assert circumference(p)[0] == 9
    assert not is_hamiltonian(p)
    assert is_traceable(p)
    assert longest_path(p)[0] == 10
    assert circumference(petersen_triangle())[0] == 11


def test_normalize_cycle():
    assert normalize_cycle([3, 1, 2, 0]) == (0, 2, 1, 3)
    assert normalize_cycle([2, 0, 1]) == (0, 1, 2)


def test_properties_hold_on_longest_cycles():
    for g in connected_upto(6):
        c, w = circumference(g)
        if c:
            assert longest_cycle_properties(g, w).all_hold, str(g)


def test_non_longest_cycle_violates_property_one():
    # C5 with chord 0-2: the 4-cycle 0,2,3,4 is not longest and its
    # consecutive vertices 0, 2 share the off-cycle neighbour 1
    g = Graph.cycle(5).add_edge(0, 2)
    props = longest_cycle_properties(g, CycleWitness((0, 2, 3, 4)))
    assert not props.no_common_off_neighbour
    assert not props.all_hold
    assert longest_cycle_properties(g, circumference(g)[1]).all_hold


def test_path_bound_readings():
    # C4 plus an off-cycle edge 4-5 whose ends both see only vertex 0: the
    # loose reading counts the 2-vertex path against the bound 1, the
    # primary one does not
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (0, 4), (0, 5)])
    c, w = circumference(g)
    assert c == 4
    props = longest_cycle_properties(g, w)
    assert props.path_bound and not props.path_bound_loose
    assert props.readings_disagree and props.all_hold


def test_rejects_non_cycle():
    with pytest.raises(GraphError):
        longest_cycle_properties(Graph.path(4), CycleWitness((0, 1, 2, 3)))

import pytest

from leafspan.constructions import (compose_f1, compose_f2, family_f3, family_f4, family_f5,
                                    family_f6, is_in_family_F, named, petersen, petersen_triangle,
                                    sharpness_g1, sharpness_g2)
from leafspan.cycles import circumference
from leafspan.graph import BudgetError, Graph, GraphError, write_graph6
from leafspan.invariants import is_two_connected, regularity, sigma


TEMPLATES = [
    (family_f3, (2, 2, 2), 8),
    (family_f3, (2, 3, 4), 11),
    (family_f4, (4, 0), 11),
    (family_f4, (2, 2), 13),
    (family_f4, (0, 4), 15),
    (family_f5, (4,), 15),
    (family_f6, (4,), 14),
]


@pytest.mark.parametrize("make,args,order", TEMPLATES)
def test_template_orders_and_membership(make, args, order):
    g = make(*args)
    assert g.n == order
    assert is_two_connected(g)
    assert sigma(g, 3) >= g.n
    res = is_in_family_F(g)
    assert res.member and res.subclass == "F" + make.__name__[-1]


@pytest.mark.parametrize("make,args", [
    (family_f3, (1, 2, 2)), (family_f4, (1, 2)), (family_f4, (-1, 5)),
    (family_f5, (3,)), (family_f6, (3,)),
])
def test_template_domains(make, args):
    with pytest.raises(GraphError):
        make(*args)


def test_templates_are_byte_stable():
    assert write_graph6(family_f6(4)) == "M~~~ffo{N_]@{?{?_"
    assert write_graph6(family_f3(2, 2, 2)) == write_graph6(family_f3(2, 2, 2))


def test_petersen_shape():
    p = petersen()
    assert p.n == 10 and p.size == 15 and regularity(p) == 3
    assert not is_in_family_F(p).member
    t = petersen_triangle()
    assert t.n == 12 and regularity(t) == 3


@pytest.mark.parametrize("n", range(5, 17))
def test_g1(n):
    g = sharpness_g1(n)
    assert min(g.degrees) == 2 and circumference(g)[0] == n - 1


@pytest.mark.parametrize("n", range(8, 17))
def test_g2(n):
    g = sharpness_g2(n)
    assert min(g.degrees) == 2 and circumference(g)[0] == n - 2


def test_compositions():
    f1 = compose_f1(Graph.cycle(3), Graph.cycle(3))
    assert f1.n == 6 and f1.size == 7
    assert is_in_family_F(f1).subclass == "F1"
    f2 = compose_f2(Graph.complete(4), Graph.complete(4))
    assert f2.n == 7
    assert is_in_family_F(f2).subclass == "F2"
    assert is_in_family_F(compose_f1(Graph.complete(2), Graph.cycle(4))).member
    with pytest.raises(GraphError):
        compose_f1(Graph.path(3), Graph.cycle(3))
    with pytest.raises(GraphError):
        compose_f2(Graph.complete(2), Graph.cycle(3))


def test_non_members():
    assert not is_in_family_F(Graph.cycle(6)).member
    assert not is_in_family_F(Graph.path(5)).member
    # a spanning subgraph of F6 template that stays 2-connected is still a member
    g = family_f6(4).remove_edge(0, 1)
    assert is_in_family_F(g).subclass == "F6"


def test_membership_budget():
    with pytest.raises(BudgetError):
        is_in_family_F(Graph.cycle(17))


def test_named_registry():
    assert named("petersen") == petersen()
    assert named("cycle", 5) == Graph.cycle(5)
    with pytest.raises(GraphError):
        named("g1")
    with pytest.raises(GraphError):
        named("nope")

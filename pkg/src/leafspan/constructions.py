"""Named graphs and the exceptional families F1..F6.

Labelings are fixed so that generated graph6 strings are byte-stable:

* joins put the left operand first (``K_s`` core before the parts);
* disjoint unions keep operand order;
* path/cycle constructions map v_1..v_n to 0..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .cycles import is_hamiltonian
from .graph import (BudgetError, Graph, GraphError, bits, disjoint_union, induced_subgraph,
                    join, mask_of, multiple)
from .invariants import is_two_connected

MEMBERSHIP_MAX_ORDER = 16


def complete(n: int) -> Graph:
    return Graph.complete(n)


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order,
    adjacent when disjoint."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges)


def petersen_triangle() -> Graph:
    """Petersen graph with vertex 0 replaced by a triangle.

    Vertices 1..9 become 0..8; the triangle is 9, 10, 11, and the former
    neighbours of vertex 0 (ascending) attach to 9, 10, 11 in that order.
    """
    p = petersen()
    edges = [(u - 1, v - 1) for u, v in p.edges() if u != 0]
    edges += [(9, 10), (10, 11), (9, 11)]
    for t, u in enumerate(p.neighbours(0)):
        edges.append((9 + t, u - 1))
    return Graph.from_edges(12, edges)


def sharpness_g1(n: int) -> Graph:
    """C_{n-1} on v_1..v_{n-1} plus v_n adjacent to v_1 and v_3."""
    if n < 5:
        raise GraphError("G1 needs n >= 5")
    edges = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    edges += [(n - 1, 0), (n - 1, 2)]
    return Graph.from_edges(n, edges)


def sharpness_g2(n: int) -> Graph:
    """C_{n-2} plus v_{n-1} ~ v_1, v_3 and v_n ~ v_{n-5}, v_{n-3}."""
    if n < 8:
        raise GraphError("G2 needs n >= 8")
    edges = [(i, (i + 1) % (n - 2)) for i in range(n - 2)]
    edges += [(n - 2, 0), (n - 2, 2), (n - 1, n - 6), (n - 1, n - 4)]
    return Graph.from_edges(n, edges)


def _cliques(sizes) -> Graph:
    out = None
    for s in sizes:
        out = Graph.complete(s) if out is None else disjoint_union(out, Graph.complete(s))
    return out


def family_f3(a: int, b: int, c: int) -> Graph:
    """K_2 v (K_a + K_b + K_c), a, b, c >= 2; order a + b + c + 2."""
    if min(a, b, c) < 2:
        raise GraphError("F3 needs a, b, c >= 2")
    return join(Graph.complete(2), _cliques([a, b, c]))


def family_f4(a: int, b: int) -> Graph:
    """K_3 v (aK_2 + bK_3), a, b >= 0, a + b = 4; order 2a + 3b + 3."""
    if a < 0 or b < 0 or a + b != 4:
        raise GraphError("F4 needs a, b >= 0 with a + b = 4")
    return join(Graph.complete(3), _cliques([2] * a + [3] * b))


def family_f5(s: int) -> Graph:
    """K_s v (sK_2 + K_3), s >= 4; order 3s + 3."""
    if s < 4:
        raise GraphError("F5 needs s >= 4")
    return join(Graph.complete(s), disjoint_union(multiple(Graph.complete(2), s), Graph.complete(3)))


def family_f6(s: int) -> Graph:
    """K_s v (s+1)K_2, s >= 4; order 3s + 2."""
    if s < 4:
        raise GraphError("F6 needs s >= 4")
    return join(Graph.complete(s), multiple(Graph.complete(2), s + 1))


def _is_k2(g: Graph) -> bool:
    return g.n == 2 and g.size == 1


def _part_ok(g: Graph) -> bool:
    return _is_k2(g) or is_hamiltonian(g)


def compose_f1(ga: Graph, gb: Graph) -> Graph:
    """ga + gb plus the single edge between vertex 0 of each part."""
    if not (_part_ok(ga) and _part_ok(gb)):
        raise GraphError("F1 parts must be hamiltonian or K2")
    g = disjoint_union(ga, gb)
    return g.add_edge(0, ga.n)


def compose_f2(ga: Graph, gb: Graph) -> Graph:
    """ga and gb glued by identifying their vertex 0.

    ga keeps labels 0..|ga|-1; gb's vertices 1.. follow in order.
    """
    if not ((is_hamiltonian(ga) and is_hamiltonian(gb)) or (_is_k2(ga) and _is_k2(gb))):
        raise GraphError("F2 parts must both be hamiltonian or both K2")
    n = ga.n + gb.n - 1
    if n > 64:
        raise GraphError("combined order exceeds 64")

    def place(v):
        return 0 if v == 0 else ga.n + v - 1

    edges = ga.edges() + [(place(u), place(v)) for u, v in gb.edges()]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# membership


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    subclass: Optional[str] = None
    # F1: {"A", "B"}; F2: {"A", "B", "shared"}; F3..F6: {"core", "parts"}
    partition: dict = field(default_factory=dict)


def _f1(g: Graph) -> Optional[MembershipResult]:
    for u, v in g.edges():
        h = g.remove_edge(u, v)
        a = h.component_of(u)
        if (a >> v) & 1:
            continue
        b = g.full & ~a
        if h.component_of(v) != b:
            continue
        if _part_ok(induced_subgraph(g, a)) and _part_ok(induced_subgraph(g, b)):
            return MembershipResult(True, "F1", {"A": bits(a), "B": bits(b)})
    return None


def _f2(g: Graph) -> Optional[MembershipResult]:
    for x in range(g.n):
        rest = g.full & ~(1 << x)
        comps = g.components(rest)
        if len(comps) < 2:
            continue
        # split the components into two nonempty groups
        first, others = comps[0], comps[1:]
        for r in range(len(others)):
            for extra in combinations(others, r):
                side = first
                for c in extra:
                    side |= c
                a = side | (1 << x)
                b = (rest & ~side) | (1 << x)
                ga, gb = induced_subgraph(g, a), induced_subgraph(g, b)
                if (_is_k2(ga) and _is_k2(gb)) or (is_hamiltonian(ga) and is_hamiltonian(gb)):
                    return MembershipResult(True, "F2", {"A": bits(a), "B": bits(b), "shared": x})
    return None


def _pack(sizes: list[int], bins: list[int], exact: bool) -> Optional[list[int]]:
    """Assign component sizes to bins.

    exact: every bin filled to exactly its capacity.  Otherwise bins hold
    lower bounds and every bin must reach its bound.  Returns the bin index
    per component or None.
    """
    order = sorted(range(len(sizes)), key=lambda i: -sizes[i])
    load = [0] * len(bins)
    assign = [0] * len(sizes)
    total = sum(sizes)

    def rec(t):
        if t == len(order):
            return all(l == c for l, c in zip(load, bins)) if exact else all(l >= c for l, c in zip(load, bins))
        i = order[t]
        tried = set()
        for j in range(len(bins)):
            key = (load[j], bins[j])
            if key in tried:
                continue
            tried.add(key)
            if exact and load[j] + sizes[i] > bins[j]:
                continue
            load[j] += sizes[i]
            assign[i] = j
            if rec(t + 1):
                return True
            load[j] -= sizes[i]
        return False

    if exact and total != sum(bins):
        return None
    return assign if rec(0) else None


def _template_search(g: Graph, core_size: int, bins: list[int], exact: bool, tag: str):
    if core_size >= g.n:
        return None
    for core in combinations(range(g.n), core_size):
        cmask = mask_of(core)
        comps = g.components(g.full & ~cmask)
        sizes = [c.bit_count() for c in comps]
        assign = _pack(sizes, bins, exact)
        if assign is None:
            continue
        parts = [0] * len(bins)
        for c, j in zip(comps, assign):
            parts[j] |= c
        return MembershipResult(True, tag, {"core": list(core), "parts": [bits(p) for p in parts]})
    return None


def _f3(g: Graph):
    if g.n < 8:
        return None
    return _template_search(g, 2, [2, 2, 2], exact=False, tag="F3")


def _f4(g: Graph):
    b = g.n - 11
    if not 0 <= b <= 4:
        return None
    return _template_search(g, 3, [2] * (4 - b) + [3] * b, exact=True, tag="F4")


def _f5(g: Graph):
    if (g.n - 3) % 3 or (g.n - 3) // 3 < 4:
        return None
    s = (g.n - 3) // 3
    return _template_search(g, s, [2] * s + [3], exact=True, tag="F5")


def _f6(g: Graph):
    if (g.n - 2) % 3 or (g.n - 2) // 3 < 4:
        return None
    s = (g.n - 2) // 3
    return _template_search(g, s, [2] * (s + 1), exact=True, tag="F6")


def is_in_family_F(g: Graph) -> MembershipResult:
    """Decide membership in F1 u ... u F6.

    F1 and F2 are found through bridges and cut vertices.  F3..F6 ask for a
    2-connected g and a core set whose removal leaves components that pack
    into the template's clique parts (template edges are exactly: inside the
    core, core-to-everything, inside a part).
    """
    if g.n > MEMBERSHIP_MAX_ORDER:
        raise BudgetError(f"family membership is limited to n <= {MEMBERSHIP_MAX_ORDER}")
    if not g.is_connected():
        return MembershipResult(False)
    if g.n >= 3 and is_two_connected(g):
        for test in (_f3, _f4, _f5, _f6):
            res = test(g)
            if res is not None:
                return res
        return MembershipResult(False)
    for test in (_f1, _f2):
        res = test(g)
        if res is not None:
            return res
    return MembershipResult(False)


NAMED = {
    "petersen": lambda n=None: petersen(),
    "petersen-triangle": lambda n=None: petersen_triangle(),
    "g1": lambda n: sharpness_g1(n),
    "g2": lambda n: sharpness_g2(n),
    "cycle": lambda n: Graph.cycle(n),
    "complete": lambda n: Graph.complete(n),
    "path": lambda n: Graph.path(n),
}

NEEDS_ORDER = {"g1", "g2", "cycle", "complete", "path"}


def named(name: str, n: Optional[int] = None) -> Graph:
    if name not in NAMED:
        raise GraphError(f"unknown named graph {name!r}")
    if name in NEEDS_ORDER:
        if n is None:
            raise GraphError(f"{name} needs an order")
        return NAMED[name](n)
    return NAMED[name]()

"""Leaf number via the max-leaf spanning tree / minimum connected dominating
set duality, plus a spanning-tree enumeration oracle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import _jit, kernels
from .graph import BudgetError, Graph, GraphError, bits

_U64 = (1 << 64) - 1
ORACLE_MAX_ORDER = 9


@dataclass(frozen=True)
class SpanningTreeWitness:
    root: int
    parent: dict[int, int]  # non-root vertex -> tree parent
    leaf_count: int

    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(v, p), max(v, p)) for v, p in self.parent.items())

    def degrees(self, n: int) -> list[int]:
        deg = [0] * n
        for v, p in self.parent.items():
            deg[v] += 1
            deg[p] += 1
        return deg


@dataclass(frozen=True)
class LeafNumberResult:
    leaf_number: int
    witness: SpanningTreeWitness
    cds: int


def _require_connected(g: Graph):
    if g.n < 2:
        raise GraphError("leaf number is undefined for a single vertex")
    if not g.is_connected():
        raise GraphError("graph is disconnected")


def min_connected_dominating_set(g: Graph) -> int:
    """Lexicographically smallest minimum connected dominating set (bitmask)."""
    _require_connected(g)
    return int(kernels.min_cds(g.kernel_adj, g.n)) & _U64


def tree_from_cds(g: Graph, cds: int) -> SpanningTreeWitness:
    """BFS tree of G[cds] with every other vertex hung off a cds neighbour."""
    root = (cds & -cds).bit_length() - 1
    parent: dict[int, int] = {}
    seen = 1 << root
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v] & cds & ~seen):
            seen |= 1 << u
            parent[u] = v
            queue.append(u)
    for v in bits(g.full & ~cds):
        parent[v] = (g.adj[v] & cds & -(g.adj[v] & cds)).bit_length() - 1
    deg = [0] * g.n
    for v, p in parent.items():
        deg[v] += 1
        deg[p] += 1
    return SpanningTreeWitness(root, parent, sum(1 for d in deg if d == 1))


def leaf_number(g: Graph) -> LeafNumberResult:
    """Exact L(G) for a connected graph with n >= 2.

    For n >= 3, L(G) = n - |minimum CDS|; L(K2) = 2.
    """
    _require_connected(g)
    cds = min_connected_dominating_set(g)
    tree = tree_from_cds(g, cds)
    value = 2 if g.n == 2 else g.n - cds.bit_count()
    if tree.leaf_count != value:
        # cannot happen for a minimum CDS; guards the duality wiring
        raise AssertionError(f"witness has {tree.leaf_count} leaves, expected {value}")
    return LeafNumberResult(value, tree, cds)


def leaf_number_oracle(g: Graph) -> int:
    """Max leaf count by enumerating every spanning tree (n <= 9)."""
    _require_connected(g)
    if g.n > ORACLE_MAX_ORDER:
        raise BudgetError(f"spanning-tree oracle is limited to n <= {ORACLE_MAX_ORDER}")
    edges = g.edges()
    eu = _jit.to_kernel_adj([u for u, _ in edges])
    ev = _jit.to_kernel_adj([v for _, v in edges])
    return int(kernels.max_leaf_by_trees(eu, ev, len(edges), g.n))


def is_spanning_tree_of(g: Graph, tree: SpanningTreeWitness) -> bool:
    if len(tree.parent) != g.n - 1 or tree.root in tree.parent:
        return False
    if any(not g.has_edge(v, p) for v, p in tree.parent.items()):
        return False
    # every vertex climbs to the root without revisiting
    for v in range(g.n):
        seen = set()
        while v != tree.root:
            if v in seen or v not in tree.parent:
                return False
            seen.add(v)
            v = tree.parent[v]
    return True

"""Connectivity, independence and degree-sum invariants."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from . import kernels
from .graph import Graph, bits, mask_of

_U64 = (1 << 64) - 1


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    min_cut: int  # bitmask; 0 for complete or disconnected graphs


@dataclass(frozen=True)
class IndependenceResult:
    alpha: int
    witness: int
    sigma: dict[int, int] = field(default_factory=dict)


def _local_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> tuple[int, int]:
    """Max number of internally disjoint s-t paths for non-adjacent s, t.

    Each vertex v is split into v_in = 2v and v_out = 2v + 1 joined by a unit
    arc; edges become arcs u_out -> v_in.  Returns (flow, separator mask).
    """
    size = 2 * g.n
    residual = [dict() for _ in range(size)]

    def arc(a, b, c):
        residual[a][b] = residual[a].get(b, 0) + c
        residual[b].setdefault(a, 0)

    for v in range(g.n):
        if v != s and v != t:
            arc(2 * v, 2 * v + 1, 1)
        for u in bits(g.adj[v]):
            arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while cap is None or flow < cap:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b, c in residual[a].items():
                if c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            residual[a][b] -= 1
            residual[b][a] += 1
            b = a
        flow += 1
    # vertices whose in-node is reachable but out-node is not form the cut
    seen = {source}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b, c in residual[a].items():
            if c > 0 and b not in seen:
                seen.add(b)
                queue.append(b)
    cut = 0
    for v in range(g.n):
        if 2 * v in seen and 2 * v + 1 not in seen:
            cut |= 1 << v
    return flow, cut


def vertex_connectivity(g: Graph) -> ConnectivityResult:
    """Exact kappa(G) with a minimum separating set.

    Follows Even's scheme: some minimum separator misses one of the first
    kappa + 1 vertices, so only pairs starting there need a flow.
    K_n gets kappa = n - 1 and an empty cut by convention.
    """
    n = g.n
    if not g.is_connected():
        return ConnectivityResult(0, 0)
    if g.size == n * (n - 1) // 2:
        return ConnectivityResult(n - 1, 0)
    v0 = min(range(n), key=lambda v: g.degrees[v])
    best, best_cut = g.degrees[v0], g.adj[v0]
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if g.has_edge(i, j):
                continue
            k, cut = _local_connectivity(g, i, j, cap=best)
            if k < best:
                best, best_cut = k, cut
        i += 1
    return ConnectivityResult(best, best_cut)


def vertex_connectivity_bruteforce(g: Graph) -> int:
    """Smallest deletion set that disconnects g; n - 1 if none does."""
    if g.n > 12:
        raise ValueError("brute-force connectivity is limited to n <= 12")
    for k in range(g.n - 1):
        for s in combinations(range(g.n), k):
            rest = g.full & ~mask_of(s)
            if rest and g.component_of((rest & -rest).bit_length() - 1, rest) != rest:
                return k
    return g.n - 1


def disconnects(g: Graph, cut: int) -> bool:
    rest = g.full & ~cut
    if not rest:
        return False
    return g.component_of((rest & -rest).bit_length() - 1, rest) != rest


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not g.is_connected():
        return False
    # no cut vertex
    return all(not disconnects(g, 1 << v) for v in range(g.n))


def independence(g: Graph, max_k: int | None = None) -> IndependenceResult:
    """alpha(G), a maximum independent set, and sigma_k for k <= alpha.

    ``max_k`` caps which sigma_k are computed (all of 1..alpha by default).
    """
    adj = g.kernel_adj
    witness = int(kernels.max_independent_set(adj, g.n)) & _U64
    alpha = witness.bit_count()
    top = alpha if max_k is None else min(alpha, max_k)
    sigma = {k: int(kernels.min_degree_sum(adj, g.n, k)) for k in range(1, top + 1)}
    return IndependenceResult(alpha, witness, sigma)


def sigma(g: Graph, k: int) -> int | None:
    """sigma_k(G), or None when G has no independent set of size k."""
    value = int(kernels.min_degree_sum(g.kernel_adj, g.n, k))
    return None if value < 0 else value


def is_independent(g: Graph, s: int) -> bool:
    return all(not (g.adj[v] & s) for v in bits(s))


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges())


def regularity(g: Graph) -> int | None:
    degs = set(g.degrees)
    return degs.pop() if len(degs) == 1 else None


def complement(g: Graph) -> Graph:
    return Graph(g.n, tuple(g.full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))

"""Longest cycles and paths, hamiltonicity, and structural checks on a
longest cycle."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import BudgetError, Graph, GraphError, bits

DP_MAX_ORDER = 20


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def normalize_cycle(seq) -> tuple[int, ...]:
    """Rotate to the smallest vertex, then head towards its smaller neighbour."""
    seq = list(seq)
    i = seq.index(min(seq))
    seq = seq[i:] + seq[:i]
    if len(seq) > 2 and seq[1] > seq[-1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


def is_cycle_of(g: Graph, seq) -> bool:
    k = len(seq)
    if k < 3 or len(set(seq)) != k or any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k))


def is_path_of(g: Graph, seq) -> bool:
    if not seq or len(set(seq)) != len(seq) or any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def circumference(g: Graph) -> tuple[int, CycleWitness | None]:
    """(c(G), longest cycle); (0, None) when G is a forest."""
    length, verts = kernels.longest_cycle_dfs(g.kernel_adj, g.n)
    if length == 0:
        return 0, None
    return int(length), CycleWitness(normalize_cycle(int(v) for v in verts))


def circumference_dp(g: Graph) -> int:
    """c(G) by subset dynamic programming; independent of the DFS engine."""
    if g.n > DP_MAX_ORDER:
        raise BudgetError(f"subset DP is limited to n <= {DP_MAX_ORDER}")
    return int(kernels.longest_cycle_dp(g.kernel_adj, g.n))


def longest_path(g: Graph) -> tuple[int, PathWitness]:
    length, verts = kernels.longest_path_dfs(g.kernel_adj, g.n)
    return int(length), PathWitness(tuple(int(v) for v in verts))


def longest_path_dp(g: Graph) -> int:
    if g.n > DP_MAX_ORDER:
        raise BudgetError(f"subset DP is limited to n <= {DP_MAX_ORDER}")
    return int(kernels.longest_path_dp(g.kernel_adj, g.n))


def is_hamiltonian(g: Graph) -> bool:
    return g.n >= 3 and circumference(g)[0] == g.n


def is_traceable(g: Graph) -> bool:
    return longest_path(g)[0] == g.n


@dataclass(frozen=True)
class CycleProperties:
    """Checks on a longest cycle C = c_1..c_k (indices mod k).

    no_common_off_neighbour: consecutive c_i, c_{i+1} share no neighbour
        off C.
    successor_exclusion: for off-cycle x, y (x = y allowed) and i != j with
        c_i, c_j in N(x), not both c_{i+1}, c_{j+1} lie in N(y).
    path_bound: every path p_1..p_s in G - V(C) whose ends attach to two
        different cycle vertices has s <= floor(k/2) - 1.
    path_bound_loose: the same bound over paths whose ends merely each have
        some cycle neighbour.  Reported for comparison only.
    """

    k: int
    no_common_off_neighbour: bool
    successor_exclusion: bool
    path_bound: bool
    path_bound_loose: bool
    longest_attached_path: int
    longest_touching_path: int

    @property
    def bound(self) -> int:
        return self.k // 2 - 1

    @property
    def all_hold(self) -> bool:
        return self.no_common_off_neighbour and self.successor_exclusion and self.path_bound

    @property
    def readings_disagree(self) -> bool:
        return self.path_bound != self.path_bound_loose


def _off_cycle_paths(g: Graph, off: int):
    """Yield (first, last, order) for every simple path inside ``off``."""
    for s in bits(off):
        stack = [(s, 1 << s, 1)]
        while stack:
            v, used, order = stack.pop()
            yield s, v, order
            for u in bits(g.adj[v] & off & ~used):
                stack.append((u, used | (1 << u), order + 1))


def longest_cycle_properties(g: Graph, cycle: CycleWitness) -> CycleProperties:
    seq = list(cycle.vertices)
    if not is_cycle_of(g, seq):
        raise GraphError("witness is not a cycle of the graph")
    k = len(seq)
    on = 0
    for v in seq:
        on |= 1 << v
    off = g.full & ~on

    prop1 = all(not (g.adj[seq[i]] & g.adj[seq[(i + 1) % k]] & off) for i in range(k))

    prop2 = True
    for x in bits(off):
        succ = 0
        for i in range(k):
            if g.has_edge(x, seq[i]):
                succ |= 1 << seq[(i + 1) % k]
        if succ.bit_count() < 2:
            continue
        for y in bits(off):
            if (succ & g.adj[y]).bit_count() >= 2:
                prop2 = False
                break
        if not prop2:
            break

    attached = touching = 0
    for a, b, order in _off_cycle_paths(g, off):
        na, nb = g.adj[a] & on, g.adj[b] & on
        if not na or not nb:
            continue
        touching = max(touching, order)
        # two different attachment vertices exist unless both ends see
        # only the same single cycle vertex
        if not (na == nb and na.bit_count() == 1):
            attached = max(attached, order)
    bound = k // 2 - 1
    return CycleProperties(
        k=k,
        no_common_off_neighbour=prop1,
        successor_exclusion=prop2,
        path_bound=attached <= bound,
        path_bound_loose=touching <= bound,
        longest_attached_path=attached,
        longest_touching_path=touching,
    )

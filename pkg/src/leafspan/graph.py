"""Immutable small graphs on bitmask adjacency, graph6 I/O and graph algebra."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import _jit

MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid graph, vertex set or construction argument."""


class CapacityError(GraphError):
    """A construction would exceed :data:`MAX_ORDER` vertices."""


class BudgetError(RuntimeError):
    """Input is larger than an exhaustive routine is allowed to handle."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> list[int]:
    """Ascending list of the vertices in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask.
    """

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise CapacityError(f"order must lie in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if (nb >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(nb):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    # basic queries ------------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbours(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def closed_neighbourhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    @cached_property
    def size(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @cached_property
    def kernel_adj(self):
        """Adjacency in the representation the active kernel backend expects."""
        return _jit.to_kernel_adj(self.adj)

    def component_of(self, v: int, within: int | None = None) -> int:
        allowed = self.full if within is None else within
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def is_connected(self) -> bool:
        return self.component_of(0) == self.full

    def components(self, within: int | None = None) -> list[int]:
        left = self.full if within is None else within
        out = []
        while left:
            comp = self.component_of((left & -left).bit_length() - 1, left)
            out.append(comp)
            left &= ~comp
        return out

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex i is the old vertex ``perm[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        adj = [0] * self.n
        for i, v in enumerate(perm):
            m = 0
            for u in bits(self.adj[v]):
                m |= 1 << pos[u]
            adj[i] = m
        return Graph(self.n, tuple(adj))

    def add_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def __str__(self) -> str:
        return write_graph6(self)


# ---------------------------------------------------------------------------
# graph6


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    """graph6 line (without newline) for ``g``; padding bits are zero."""
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Parse one graph6 encoding (surrounding whitespace is ignored)."""
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", i)
    data = [ord(ch) - 63 for ch in text]
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(text) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated 6-byte order field", len(text))
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 3-byte order field", len(text))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(f"order {n} outside 1..{MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error("edge data truncated", len(text))
    if len(body) > nbytes:
        raise Graph6Error("trailing characters after edge data", pos + nbytes)
    pad = nbytes * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", pos + nbytes - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# algebra


def _check_capacity(total: int):
    if total > MAX_ORDER:
        raise CapacityError(f"combined order {total} exceeds {MAX_ORDER}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H; g keeps labels 0..|g|-1, h is shifted up by |g|."""
    _check_capacity(g.n + h.n)
    return Graph(g.n + h.n, g.adj + tuple(a << g.n for a in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """G v H: the disjoint union plus every edge between the two sides."""
    _check_capacity(g.n + h.n)
    hmask = ((1 << h.n) - 1) << g.n
    gmask = (1 << g.n) - 1
    return Graph(g.n + h.n, tuple(a | hmask for a in g.adj) + tuple((a << g.n) | gmask for a in h.adj))


def multiple(g: Graph, t: int) -> Graph:
    """tG, t >= 1 disjoint copies."""
    if t < 1:
        raise GraphError("need at least one copy")
    out = g
    for _ in range(t - 1):
        out = disjoint_union(out, g)
    return out


def induced_subgraph(g: Graph, s: int) -> Graph:
    """G[S], relabelled to 0..|S|-1 in ascending vertex order."""
    if s == 0:
        raise GraphError("induced subgraph of the empty set")
    if s & ~g.full:
        raise GraphError("vertex set not contained in the graph")
    keep = bits(s)
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(mask_of(pos[u] for u in bits(g.adj[v] & s)))
    return Graph(len(keep), tuple(adj))


def delete_vertices(g: Graph, s: int) -> Graph:
    return induced_subgraph(g, g.full & ~s)


def cross_edge_count(g: Graph, a: int, b: int) -> int:
    """e(A, B) for disjoint vertex sets A and B."""
    if a & b:
        raise GraphError("vertex sets overlap")
    return sum((g.adj[v] & b).bit_count() for v in bits(a))


def degree_profile(g: Graph) -> tuple[int, int, list[int], bool]:
    """(min degree, max degree, sorted degree sequence, connected?)."""
    degs = sorted(g.degrees)
    return degs[0], degs[-1], degs, g.is_connected()


def validate(g: Graph) -> None:
    """Re-run the structural checks (symmetry, no loops, bits < n)."""
    Graph(g.n, g.adj)

"""Canonical forms, isomorph-free generation of connected graphs, and graph6
corpus reading."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _jit, kernels
from .graph import BudgetError, Graph, Graph6Error, GraphError, parse_graph6, write_graph6

log = logging.getLogger(__name__)

CANON_MAX_ORDER = 12
DEFAULT_MAX_ORDER = 9


def canonical_labelling(g: Graph, colour=None) -> list[int]:
    """Vertex order whose relabelling gives the canonical graph."""
    if g.n > CANON_MAX_ORDER:
        raise BudgetError(f"canonical form is limited to n <= {CANON_MAX_ORDER}")
    col = _jit.to_kernel_adj(colour if colour is not None else [0] * g.n)
    lab, _ = kernels.canonical_labelling(g.kernel_adj, g.n, col)
    return [int(v) for v in lab]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labelling(g))


def canonical_form(g: Graph) -> str:
    """Lexicographically least graph6 string over all relabellings of g."""
    return write_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.size == h.size and canonical_form(g) == canonical_form(h)


def max_enumeration_order() -> int:
    raw = os.environ.get("LEAFSPAN_BUDGET_N")
    return int(raw) if raw else DEFAULT_MAX_ORDER


def check_budget(n: int, allow_large: bool):
    if n < 1:
        raise GraphError("order must be at least 1")
    cap = max_enumeration_order()
    if allow_large:
        cap = max(cap, 10)
    if n > cap or n > CANON_MAX_ORDER:
        raise BudgetError(f"enumeration of order {n} exceeds the budget ({cap}); "
                          "pass allow_large or set LEAFSPAN_BUDGET_N")


def _extend(parent: Graph, s: int) -> Graph:
    m = parent.n
    adj = [a | ((s >> v) & 1) << m for v, a in enumerate(parent.adj)]
    adj.append(s)
    return Graph(m + 1, tuple(adj))


def _children_parent_rule(parent: Graph) -> list[Graph]:
    flags = kernels.augment_accept(parent.kernel_adj, parent.n)
    seen: dict[str, Graph] = {}
    for s in range(1, 1 << parent.n):
        if flags[s]:
            child = canonical_graph(_extend(parent, s))
            seen.setdefault(write_graph6(child), child)
    return list(seen.values())


def _next_level(parents: Iterable[Graph], method: str) -> Iterator[Graph]:
    if method == "parent":
        for p in parents:
            yield from _children_parent_rule(p)
    elif method == "global":
        seen: set[str] = set()
        for p in parents:
            for s in range(1, 1 << p.n):
                child = canonical_graph(_extend(p, s))
                key = write_graph6(child)
                if key not in seen:
                    seen.add(key)
                    yield child
    else:
        raise ValueError(f"unknown dedup method {method!r}")


def _sorted(graphs: Iterable[Graph]) -> list[Graph]:
    return sorted(graphs, key=lambda h: (h.size, write_graph6(h)))


def enumerate_connected(n: int, allow_large: bool = False, method: str = "parent") -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs
    of order n.

    Each level extends the previous one by a vertex joined to every nonempty
    subset.  ``method="parent"`` keeps a child only when the new vertex is in
    the orbit of the child's canonical deletion vertex, so no global set of
    forms is held; ``method="global"`` deduplicates every child against all
    others.  Below the final level, and for the whole output when n <= 9,
    graphs come sorted by (size, canonical graph6).  Order 10 streams
    unsorted in parent order.
    """
    check_budget(n, allow_large)
    level = [Graph(1, (0,))]
    for m in range(1, n - 1):
        level = _sorted(_next_level(level, method))
    if n == 1:
        yield from level
        return
    last = _next_level(level, method)
    if n <= DEFAULT_MAX_ORDER:
        yield from _sorted(last)
    else:
        yield from last


class CorpusError(ValueError):
    def __init__(self, lineno: int, cause: Exception):
        super().__init__(f"line {lineno}: {cause}")
        self.lineno = lineno
        self.cause = cause


@dataclass(frozen=True)
class CorpusEntry:
    lineno: int
    graph: Graph


def read_corpus(lines: Iterable[str], strict: bool = False,
                errors: list[CorpusError] | None = None) -> Iterator[CorpusEntry]:
    """Lazily parse graph6 lines, skipping blanks and ``>>graph6<<`` headers.

    A bad line raises :class:`CorpusError` in strict mode; otherwise it is
    logged, appended to ``errors`` when given, and skipped.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(">>graph6<<"):
            text = text[len(">>graph6<<"):]
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            err = CorpusError(lineno, exc)
            if strict:
                raise err from exc
            log.warning("%s", err)
            if errors is not None:
                errors.append(err)
            continue
        yield CorpusEntry(lineno, g)


def read_graphs(lines: Iterable[str], strict: bool = False) -> Iterator[Graph]:
    for entry in read_corpus(lines, strict=strict):
        yield entry.graph

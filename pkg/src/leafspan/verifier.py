"""Theorem and lemma checks as per-graph (premise, conclusion) rules, and a
suite runner that aggregates outcomes over a graph stream."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from multiprocessing import Pool
from typing import Callable, Iterable, Optional

from . import cycles, invariants, leaf
from .constructions import is_in_family_F, petersen, petersen_triangle
from .enumeration import CANON_MAX_ORDER, canonical_form
from .graph import BudgetError, Graph, bits, parse_graph6, write_graph6

VACUOUS = "vacuous"
PASS = "pass"
COUNTEREXAMPLE = "counterexample"
SKIPPED = "budget-skipped"


@lru_cache(maxsize=None)
def _exception_forms() -> frozenset:
    return frozenset({canonical_form(petersen()), canonical_form(petersen_triangle())})


class InvariantReport:
    """Memoised invariants of one graph.

    Every field is computed at most once, on first access.  Values can be
    preset through keyword arguments, which is how rule logic is tested
    against synthetic reports.  A field whose computation exceeds a budget
    is recorded as absent with a reason and re-raises on access.
    """

    FIELDS = (
        "n", "size", "delta", "Delta", "connected", "kappa", "alpha", "sigma3",
        "leaf_number", "circumference", "longest_path", "hamiltonian", "traceable",
        "triangle_free", "regular", "two_connected", "family",
    )

    def __init__(self, graph: Optional[Graph] = None, **preset):
        self.graph = graph
        self._cache = dict(preset)
        self.absent: dict[str, str] = {}

    def __getattr__(self, name):
        if name.startswith("_") or name in ("graph", "absent"):
            raise AttributeError(name)
        cache = self._cache
        if name in cache:
            return cache[name]
        if name in self.absent:
            raise BudgetError(self.absent[name])
        compute = getattr(type(self), "_compute_" + name, None)
        if compute is None:
            raise AttributeError(name)
        if self.graph is None:
            raise AttributeError(f"{name} was not preset and there is no graph")
        try:
            value = compute(self)
        except BudgetError as exc:
            self.absent[name] = str(exc)
            raise
        cache[name] = value
        return value

    # plain fields ----------------------------------------------------------

    def _compute_n(self):
        return self.graph.n

    def _compute_size(self):
        return self.graph.size

    def _compute_delta(self):
        return min(self.graph.degrees)

    def _compute_Delta(self):
        return max(self.graph.degrees)

    def _compute_degrees(self):
        return self.graph.degrees

    def _compute_connected(self):
        return self.graph.is_connected()

    def _compute_two_connected(self):
        return invariants.is_two_connected(self.graph)

    def _compute_kappa_result(self):
        return invariants.vertex_connectivity(self.graph)

    def _compute_kappa(self):
        return self.kappa_result.kappa

    def _compute_independence(self):
        return invariants.independence(self.graph, max_k=3)

    def _compute_alpha(self):
        return self.independence.alpha

    def _compute_sigma3(self):
        return self.independence.sigma.get(3)

    def _compute_triangle_free(self):
        return invariants.is_triangle_free(self.graph)

    def _compute_regular(self):
        return invariants.regularity(self.graph)

    def _compute_is_k2(self):
        return self.n == 2 and self.size == 1

    # leaf number -----------------------------------------------------------

    def _compute_leaf(self):
        if self.n < 2 or not self.connected:
            return None
        return leaf.leaf_number(self.graph)

    def _compute_leaf_number(self):
        res = self.leaf
        return None if res is None else res.leaf_number

    # cycles and paths ------------------------------------------------------

    def _compute_cycle(self):
        return cycles.circumference(self.graph)

    def _compute_circumference(self):
        return self.cycle[0]

    def _compute_path(self):
        return cycles.longest_path(self.graph)

    def _compute_longest_path(self):
        return self.path[0]

    def _compute_hamiltonian(self):
        return self.n >= 3 and self.circumference == self.n

    def _compute_traceable(self):
        return self.longest_path == self.n

    def _compute_cycle_properties(self):
        witness = self.cycle[1]
        if witness is None:
            return None
        return cycles.longest_cycle_properties(self.graph, witness)

    # structure -------------------------------------------------------------

    def _compute_family(self):
        return is_in_family_F(self.graph)

    def _compute_canonical(self):
        if self.graph.n > CANON_MAX_ORDER:
            return write_graph6(self.graph)
        return canonical_form(self.graph)

    def _compute_is_lemma12_exception(self):
        if self.n not in (10, 12) or self.regular != 3:
            return False
        return self.canonical in _exception_forms()

    # serialisation ---------------------------------------------------------

    def to_dict(self, witness: bool = False) -> dict:
        out: dict = {"graph6": write_graph6(self.graph)}
        for name in self.FIELDS:
            try:
                value = getattr(self, name)
            except BudgetError:
                value = None
            if name == "family":
                value = None if value is None else (value.subclass if value.member else False)
            out[name] = value
        if self.absent:
            out["absent"] = dict(self.absent)
        if witness:
            w: dict = {}
            if self.leaf is not None:
                w["spanning_tree"] = [list(e) for e in self.leaf.witness.edges()]
                w["cds"] = bits(self.leaf.cds)
            if self.cycle[1] is not None:
                w["cycle"] = list(self.cycle[1].vertices)
            w["path"] = list(self.path[1].vertices)
            w["min_cut"] = bits(self.kappa_result.min_cut)
            w["independent_set"] = bits(self.independence.witness)
            fam = self._cache.get("family")
            if fam is not None and fam.member:
                w["family_partition"] = fam.partition
            out["witness"] = w
        return out


def invariant_report(g: Graph) -> InvariantReport:
    return InvariantReport(g)


# ---------------------------------------------------------------------------
# rules


@dataclass(frozen=True)
class Rule:
    id: str
    statement: str
    premise: Callable[[InvariantReport], bool]
    conclusion: Callable[[InvariantReport], bool]
    uses: tuple[str, ...]
    diagnostic: bool = False


@dataclass(frozen=True)
class RuleOutcome:
    graph: str
    rule: str
    status: str
    detail: dict = field(default_factory=dict)


def _has_leaf(r) -> bool:
    return r.connected and r.n >= 2


def _leaf_le(r, bound) -> bool:
    return _has_leaf(r) and r.leaf_number <= bound


def _regular_k(r):
    return r.regular if r.connected else None


def _lem7_premise(r) -> bool:
    if not r.connected or r.is_k2:
        return False
    # kappa <= delta, so delta < alpha already rules the premise out
    if r.delta < r.alpha:
        return False
    return r.kappa >= r.alpha


def _lem10_premise(r) -> bool:
    return r.connected and r.n >= 3 and r.sigma3 is not None and r.sigma3 >= r.n


def _lem10_conclusion(r) -> bool:
    if r.circumference >= r.longest_path - 1:
        return True
    return r.family.member


def _lem12_premise(r) -> bool:
    k = _regular_k(r)
    if k is None or k < 3 or r.n > 3 * k + 3 or not r.two_connected:
        return False
    return not r.is_lemma12_exception


def _lem14_centres(r) -> list[int]:
    return [v for v, d in enumerate(r.degrees) if d == 2 * r.delta - 1]


def _lem14_premise(r) -> bool:
    return r.connected and r.delta >= 3 and _leaf_le(r, 2 * r.delta - 1) and bool(_lem14_centres(r))


def _lem14_conclusion(r) -> bool:
    g = r.graph
    return all((g.full & ~g.closed_neighbourhood(x)).bit_count() <= 2 for x in _lem14_centres(r))


def _lem17_conclusion(r) -> bool:
    return r.cycle_properties.all_hold


RULES: dict[str, Rule] = {}


def _rule(id, statement, premise, conclusion, uses, diagnostic=False):
    RULES[id] = Rule(id, statement, premise, conclusion, tuple(uses), diagnostic)


_rule("thm1", "connected, delta >= (L+2)/2 => hamiltonian",
      lambda r: _has_leaf(r) and 2 * r.delta >= r.leaf_number + 2,
      lambda r: r.hamiltonian, ["n", "delta", "leaf_number", "hamiltonian"])
_rule("thm2", "connected, delta >= (L+1)/2 => traceable",
      lambda r: _has_leaf(r) and 2 * r.delta >= r.leaf_number + 1,
      lambda r: r.traceable, ["n", "delta", "leaf_number", "traceable"])
_rule("thm3cor", "connected triangle-free, L <= 2delta-2 => hamiltonian",
      lambda r: _has_leaf(r) and r.triangle_free and r.leaf_number <= 2 * r.delta - 2,
      lambda r: r.hamiltonian, ["n", "delta", "leaf_number", "triangle_free", "hamiltonian"])
_rule("thm4", "connected, L <= 2delta-1 => c >= n-1",
      lambda r: _leaf_le(r, 2 * r.delta - 1),
      lambda r: r.circumference >= r.n - 1, ["n", "delta", "leaf_number", "circumference"])
_rule("relaxed-thm4", "connected, L <= 2delta => c >= n-1 (expected to fail)",
      lambda r: _leaf_le(r, 2 * r.delta),
      lambda r: r.circumference >= r.n - 1, ["n", "delta", "leaf_number", "circumference"],
      diagnostic=True)
_rule("thm11", "connected, n <= 3delta, L <= 2delta-1 => c >= n-1",
      lambda r: _has_leaf(r) and r.n <= 3 * r.delta and r.leaf_number <= 2 * r.delta - 1,
      lambda r: r.circumference >= r.n - 1, ["n", "delta", "leaf_number", "circumference"])
_rule("thm13", "connected k-regular, L <= 2k-1 => hamiltonian",
      lambda r: _regular_k(r) is not None and _leaf_le(r, 2 * r.regular - 1),
      lambda r: r.hamiltonian, ["n", "regular", "leaf_number", "hamiltonian"])
_rule("lem5", "connected, L <= 2delta-1 => n <= max(2delta+6, 3delta)",
      lambda r: _leaf_le(r, 2 * r.delta - 1),
      lambda r: r.n <= max(2 * r.delta + 6, 3 * r.delta), ["n", "delta", "leaf_number"])
_rule("lem6", "connected, L <= 2delta-1 => 2-connected",
      lambda r: _leaf_le(r, 2 * r.delta - 1),
      lambda r: r.two_connected, ["n", "delta", "leaf_number", "two_connected"])
_rule("lem7", "connected, not K2, kappa >= alpha => hamiltonian",
      _lem7_premise, lambda r: r.hamiltonian, ["n", "delta", "kappa", "alpha", "hamiltonian"])
_rule("lem8", "2-connected, sigma3 >= n+2 => c >= p-1",
      lambda r: r.two_connected and r.sigma3 is not None and r.sigma3 >= r.n + 2,
      lambda r: r.circumference >= r.longest_path - 1,
      ["n", "sigma3", "circumference", "longest_path"])
_rule("lem9", "connected, delta = 2, L <= 3 => c >= n-1",
      lambda r: _has_leaf(r) and r.delta == 2 and r.leaf_number <= 3,
      lambda r: r.circumference >= r.n - 1, ["n", "delta", "leaf_number", "circumference"])
_rule("lem10", "connected, n >= 3, sigma3 >= n => c >= p-1 or G in F(n)",
      _lem10_premise, _lem10_conclusion, ["n", "sigma3", "circumference", "longest_path", "family"])
_rule("lem12", "2-connected k-regular (k >= 3), n <= 3k+3, not P or P^triangle => hamiltonian",
      _lem12_premise, lambda r: r.hamiltonian, ["n", "regular", "two_connected", "hamiltonian"])
_rule("lem14", "connected, delta >= 3, L <= 2delta-1, d(x) = 2delta-1 => |V - N[x]| <= 2",
      _lem14_premise, _lem14_conclusion, ["n", "delta", "Delta", "leaf_number"])
_rule("lem15", "2-connected => c >= min(n, 2delta)",
      lambda r: r.two_connected,
      lambda r: r.circumference >= min(r.n, 2 * r.delta), ["n", "delta", "circumference"])
_rule("lem16a", "connected, delta >= 4 => L >= (2n+8)/5",
      lambda r: _has_leaf(r) and r.delta >= 4,
      lambda r: 5 * r.leaf_number >= 2 * r.n + 8, ["n", "delta", "leaf_number"])
_rule("lem16b", "connected, delta >= 5 => L >= n/2 + 2",
      lambda r: _has_leaf(r) and r.delta >= 5,
      lambda r: 2 * r.leaf_number >= r.n + 4, ["n", "delta", "leaf_number"])
_rule("lem17", "connected with a cycle => longest-cycle properties (1)-(3) hold",
      lambda r: r.connected and r.circumference > 0,
      _lem17_conclusion, ["n", "circumference"])

PAPER_RULES = tuple(rid for rid, rule in RULES.items() if not rule.diagnostic)


def resolve_rules(spec: str | Iterable[str]) -> list[Rule]:
    """Rule objects for a comma list or iterable of ids; ``all`` expands to
    every non-diagnostic rule."""
    ids = spec.split(",") if isinstance(spec, str) else list(spec)
    out: list[Rule] = []
    for rid in ids:
        rid = rid.strip()
        if not rid:
            continue
        if rid == "all":
            out.extend(RULES[x] for x in PAPER_RULES)
        elif rid in RULES:
            out.append(RULES[rid])
        else:
            raise KeyError(f"unknown rule {rid!r}")
    seen, unique = set(), []
    for rule in out:
        if rule.id not in seen:
            seen.add(rule.id)
            unique.append(rule)
    return unique


def _detail(report: InvariantReport, rule: Rule) -> dict:
    out = {}
    for name in rule.uses:
        if name in report._cache:
            value = report._cache[name]
            if name == "family":
                value = value.subclass if value.member else False
            out[name] = value
    if rule.id == "lem17" and report._cache.get("cycle_properties") is not None:
        props = report._cache["cycle_properties"]
        out.update(
            cycle=list(report.cycle[1].vertices),
            no_common_off_neighbour=props.no_common_off_neighbour,
            successor_exclusion=props.successor_exclusion,
            path_bound=props.path_bound,
            path_bound_loose=props.path_bound_loose,
            readings_disagree=props.readings_disagree,
        )
    if rule.id == "lem12" and report._cache.get("is_lemma12_exception"):
        out["exception"] = True
    return out


def evaluate_rule(g_or_report, rule: Rule | str) -> RuleOutcome:
    """Decide one rule on one graph (or a preset InvariantReport)."""
    if isinstance(rule, str):
        rule = RULES[rule]
    report = g_or_report if isinstance(g_or_report, InvariantReport) else InvariantReport(g_or_report)
    try:
        key = report.canonical if report.graph is not None else ""
        if not rule.premise(report):
            status = VACUOUS
        elif rule.conclusion(report):
            status = PASS
        else:
            status = COUNTEREXAMPLE
    except BudgetError as exc:
        return RuleOutcome(key if report.graph is not None else "", rule.id, SKIPPED, {"reason": str(exc)})
    return RuleOutcome(key, rule.id, status, _detail(report, rule))


# ---------------------------------------------------------------------------
# suites


@dataclass
class RuleTally:
    id: str
    vacuous: int = 0
    passed: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)  # [(graph6, detail)]
    diagnostic: bool = False

    @property
    def total(self) -> int:
        return self.vacuous + self.passed + self.skipped + len(self.counterexamples)


@dataclass
class SuiteReport:
    corpus: str
    graphs: int
    rules: list[RuleTally]
    elapsed_ms: float = 0.0

    def tally(self, rid: str) -> RuleTally:
        for t in self.rules:
            if t.id == rid:
                return t
        raise KeyError(rid)

    @property
    def has_counterexample(self) -> bool:
        return any(t.counterexamples for t in self.rules if not t.diagnostic)

    @property
    def has_skipped(self) -> bool:
        return any(t.skipped for t in self.rules)

    def exit_status(self, strict_budget: bool = False) -> int:
        if self.has_counterexample:
            return 1
        if strict_budget and self.has_skipped:
            return 3
        return 0

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "corpus": self.corpus,
            "graphs": self.graphs,
            "rules": [
                {
                    "id": t.id,
                    "diagnostic": t.diagnostic,
                    "vacuous": t.vacuous,
                    "pass": t.passed,
                    "skipped": t.skipped,
                    "counterexamples": [{"graph6": g6, "detail": d} for g6, d in t.counterexamples],
                }
                for t in self.rules
            ],
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def to_tsv(self) -> str:
        lines = ["rule\tvacuous\tpass\tcounterexamples\tskipped"]
        for t in self.rules:
            lines.append(f"{t.id}\t{t.vacuous}\t{t.passed}\t{len(t.counterexamples)}\t{t.skipped}")
        return "\n".join(lines) + "\n"


def _evaluate_line(args):
    g6, rule_ids = args
    report = InvariantReport(parse_graph6(g6))
    out = []
    for rid in rule_ids:
        o = evaluate_rule(report, RULES[rid])
        out.append((o.rule, o.status, o.graph, o.detail))
    return out


def run_suite(source: Iterable[Graph], rules: Iterable[Rule | str], jobs: int = 1,
              corpus: str = "") -> SuiteReport:
    """Evaluate every rule on every graph.

    Counts merge commutatively and counterexamples are sorted by canonical
    graph6, so the report does not depend on ``jobs``.
    """
    rule_list = [RULES[r] if isinstance(r, str) else r for r in rules]
    ids = tuple(r.id for r in rule_list)
    tallies = {r.id: RuleTally(r.id, diagnostic=r.diagnostic) for r in rule_list}
    start = time.perf_counter()
    work = ((write_graph6(g), ids) for g in source)
    count = 0

    def absorb(results):
        for rid, status, key, detail in results:
            t = tallies[rid]
            if status == VACUOUS:
                t.vacuous += 1
            elif status == PASS:
                t.passed += 1
            elif status == SKIPPED:
                t.skipped += 1
            else:
                t.counterexamples.append((key, detail))

    if jobs > 1:
        with Pool(jobs) as pool:
            for results in pool.imap_unordered(_evaluate_line, work, chunksize=64):
                absorb(results)
                count += 1
    else:
        for item in work:
            absorb(_evaluate_line(item))
            count += 1
    for t in tallies.values():
        t.counterexamples.sort(key=lambda ce: (ce[0], json.dumps(ce[1], sort_keys=True)))
    elapsed = (time.perf_counter() - start) * 1000.0
    return SuiteReport(corpus, count, [tallies[i] for i in ids], elapsed)

import json

import pytest

from conftest import connected
from leafspan.constructions import petersen, petersen_triangle, sharpness_g1, sharpness_g2
from leafspan.graph import Graph
from leafspan.verifier import (COUNTEREXAMPLE, PAPER_RULES, PASS, SKIPPED, VACUOUS,
                               InvariantReport, evaluate_rule, resolve_rules, run_suite)


def status(rule, **preset):
    return evaluate_rule(InvariantReport(**preset), rule).status


BASE = dict(connected=True, is_k2=False)

SYNTHETIC = [
    # rule, premise-true preset that passes, same premise but failing conclusion
    ("thm1", dict(n=6, delta=3, leaf_number=4, hamiltonian=True), dict(hamiltonian=False)),
    ("thm2", dict(n=6, delta=3, leaf_number=5, traceable=True), dict(traceable=False)),
    ("thm3cor", dict(n=6, delta=3, leaf_number=4, triangle_free=True, hamiltonian=True),
     dict(hamiltonian=False)),
    ("thm4", dict(n=7, delta=3, leaf_number=5, circumference=6), dict(circumference=5)),
    ("thm11", dict(n=9, delta=3, leaf_number=5, circumference=8), dict(circumference=7)),
    ("thm13", dict(n=8, regular=3, leaf_number=5, hamiltonian=True), dict(hamiltonian=False)),
    ("lem5", dict(n=10, delta=2, leaf_number=3), dict(n=11)),
    ("lem6", dict(n=7, delta=3, leaf_number=5, two_connected=True), dict(two_connected=False)),
    ("lem7", dict(n=6, delta=3, kappa=3, alpha=2, hamiltonian=True), dict(hamiltonian=False)),
    ("lem8", dict(n=6, two_connected=True, sigma3=9, circumference=5, longest_path=6),
     dict(circumference=4)),
    ("lem9", dict(n=7, delta=2, leaf_number=3, circumference=6), dict(circumference=5)),
    ("lem15", dict(n=9, delta=3, two_connected=True, circumference=6), dict(circumference=5)),
    ("lem16a", dict(n=10, delta=4, leaf_number=6), dict(leaf_number=5)),
    ("lem16b", dict(n=10, delta=5, leaf_number=7), dict(leaf_number=6)),
    ("relaxed-thm4", dict(n=7, delta=3, leaf_number=6, circumference=6), dict(circumference=5)),
]


@pytest.mark.parametrize("rid,ok,bad", SYNTHETIC, ids=[s[0] for s in SYNTHETIC])
def test_rule_logic_on_synthetic_reports(rid, ok, bad):
    assert status(rid, **BASE, **ok) == PASS
    assert status(rid, **BASE, **{**ok, **bad}) == COUNTEREXAMPLE
    assert status(rid, **{**BASE, "connected": False}, **ok) in (VACUOUS, PASS)


def test_lem10_family_escape():
    class Fam:
        member = True
        subclass = "F3"
    ok = dict(BASE, n=8, sigma3=8, circumference=6, longest_path=8)
    assert status("lem10", **ok, family=Fam()) == PASS
    Fam.member = False
    assert status("lem10", **ok, family=Fam()) == COUNTEREXAMPLE
    assert status("lem10", **dict(ok, sigma3=None), family=Fam()) == VACUOUS


def test_lem8_undefined_sigma_is_vacuous():
    assert status("lem8", n=4, two_connected=True, sigma3=None) == VACUOUS


def test_lem7_short_circuit():
    assert status("lem7", **BASE, delta=2, alpha=3) == VACUOUS


def test_lem12_exceptions_are_vacuous():
    for g in (petersen(), petersen_triangle()):
        out = evaluate_rule(g, "lem12")
        assert out.status == VACUOUS and out.detail.get("exception")
    assert evaluate_rule(Graph.complete(4), "lem12").status == PASS


def test_lem14_on_real_graph():
    # K4: delta 3, L = 3 <= 5 but no vertex of degree 5
    assert evaluate_rule(Graph.complete(4), "lem14").status == VACUOUS


def test_real_graph_outcomes():
    assert evaluate_rule(petersen(), "thm13").status == VACUOUS
    assert evaluate_rule(Graph.complete(4), "thm4").status == PASS
    assert evaluate_rule(Graph.cycle(5), "lem9").status == PASS
    assert evaluate_rule(sharpness_g1(9), "lem9").status == PASS
    out = evaluate_rule(sharpness_g2(10), "relaxed-thm4")
    assert out.status == COUNTEREXAMPLE
    assert out.detail["circumference"] == 8 and out.detail["leaf_number"] == 4


def test_lem17_detail():
    out = evaluate_rule(petersen(), "lem17")
    assert out.status == PASS
    assert len(out.detail["cycle"]) == 9


def test_budget_skip(monkeypatch):
    import leafspan.verifier as v

    def too_big(g):
        raise v.BudgetError("over budget")
    monkeypatch.setattr(v, "is_in_family_F", too_big)
    g = Graph.cycle(6)
    rep = InvariantReport(g, sigma3=6, circumference=4, longest_path=6)
    out = evaluate_rule(rep, "lem10")
    assert out.status == SKIPPED and "over budget" in out.detail["reason"]
    suite = run_suite([g], ["lem9"])
    assert suite.exit_status(strict_budget=True) == 0


def test_resolve_rules():
    assert [r.id for r in resolve_rules("all")] == list(PAPER_RULES)
    assert "relaxed-thm4" not in PAPER_RULES
    assert [r.id for r in resolve_rules("thm4, lem5,thm4")] == ["thm4", "lem5"]
    with pytest.raises(KeyError):
        resolve_rules("thm99")


def test_empty_corpus():
    rep = run_suite([], "thm4".split(), corpus="empty")
    assert rep.graphs == 0 and rep.exit_status() == 0
    assert rep.tally("thm4").total == 0


def test_suite_is_deterministic_across_jobs():
    gs = list(connected(5)) + [sharpness_g2(8), sharpness_g2(9)]
    rules = ["thm4", "relaxed-thm4", "lem17"]
    a = run_suite(gs, rules, jobs=1, corpus="x").to_json(timing=False)
    b = run_suite(gs, rules, jobs=2, corpus="x").to_json(timing=False)
    assert a == b
    data = json.loads(a)
    assert "elapsed_ms" not in data
    relaxed = next(r for r in data["rules"] if r["id"] == "relaxed-thm4")
    assert relaxed["diagnostic"] and len(relaxed["counterexamples"]) >= 2


def test_diagnostic_does_not_fail_suite():
    rep = run_suite([sharpness_g2(8)], ["relaxed-thm4"])
    assert rep.tally("relaxed-thm4").counterexamples
    assert rep.exit_status() == 0


def test_report_to_dict_fields():
    d = InvariantReport(petersen()).to_dict(witness=True)
    assert d["leaf_number"] == 6 and d["circumference"] == 9 and d["kappa"] == 3
    assert d["hamiltonian"] is False and d["traceable"] is True
    json.dumps(d)

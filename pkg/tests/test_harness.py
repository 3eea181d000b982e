import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from implicol import RefusalError, SuiteConfig, enumerate_labelled_graphs, graph_from_json, parse_dimacs
from implicol import harness
from implicol.harness import THEOREM_IDS, _chi_table, _oracle, resolve_theorems, run_theorem_suite, suite_report

from . import oracles
from .test_graph import graphs


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64)])
def test_enumeration_counts(n, count):
    seen = list(enumerate_labelled_graphs(n))
    assert len(seen) == len(set(seen)) == count
    assert all(g.vertices == tuple(range(n)) for g in seen)


def test_enumeration_order_and_cap():
    first = list(enumerate_labelled_graphs(3))
    assert first[0].m == 0 and first[-1].m == 3
    assert first[1].edges() == [(0, 1)]
    with pytest.raises(RefusalError):
        next(enumerate_labelled_graphs(9))


def test_config_validation():
    with pytest.raises(RefusalError):
        SuiteConfig(max_n=9)
    with pytest.raises(RefusalError, match="unknown theorem"):
        SuiteConfig(theorems=("no-such-claim",))
    with pytest.raises(RefusalError):
        SuiteConfig(k_policy="sometimes")
    assert resolve_theorems(["kempe", "poly-evaluation"]) == (
        "poly-evaluation", "kempe-implicit-edge", "kempe-implicit-identity")


def test_every_theorem_has_an_anchor():
    assert len(set(THEOREM_IDS)) == len(THEOREM_IDS) == 20
    assert all(t.anchor for t in harness.THEOREMS)


def test_small_suite_confirms_everything():
    verdicts = run_theorem_suite(SuiteConfig(max_n=4))
    assert [v.theorem_id for v in verdicts] == list(THEOREM_IDS)
    for v in verdicts:
        assert v.status == "confirmed", v.theorem_id
        assert v.instances_checked > 0 and v.counterexamples == []
    again = run_theorem_suite(SuiteConfig(max_n=4))
    assert suite_report(again) == suite_report(verdicts)


def test_closure_completeness_on_four_vertices():
    v, = run_theorem_suite(SuiteConfig(min_n=4, max_n=4, theorems=("closure-completeness",)))
    assert v.status == "confirmed" and v.instances_checked == 64


def test_range_policy_exercises_vacuous_cases():
    v, = run_theorem_suite(SuiteConfig(max_n=4, k_policy="range", theorems=("contradiction-test",)))
    assert v.status == "confirmed"
    chromatic, = run_theorem_suite(SuiteConfig(max_n=4, theorems=("contradiction-test",)))
    assert v.instances_checked > chromatic.instances_checked


def test_budget_exhaustion_is_flagged():
    verdicts = run_theorem_suite(SuiteConfig(max_n=6, time_budget=0.0, theorems=("poly-evaluation",)))
    assert [v.status for v in verdicts] == ["incomplete"]


def test_counterexamples_are_standalone(monkeypatch):
    monkeypatch.setattr(harness, "contradiction_test", lambda g, k, i, j: True)
    v, = run_theorem_suite(SuiteConfig(max_n=4, theorems=("contradiction-test",), max_counterexamples=3))
    assert v.status == "refuted" and len(v.counterexamples) == 3
    for cx in v.counterexamples:
        g = graph_from_json(cx["graph"])
        assert parse_dimacs(cx["dimacs"]) == g
        assert set(cx["params"]) == {"k", "pair", "k_colorable"}
        assert not g.has_edge(*cx["params"]["pair"])
    json.dumps(suite_report([v]))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=5), st.integers(0, 4))
def test_enumeration_oracle_matches_brute_force(g, k):
    bits = sum(1 << t for t, p in enumerate(g.pairs()) if g.has_edge(*p))
    orc = _oracle(g.n, k, bits)
    assert orc.count == oracles.count(g.n, g.edges(), k)
    for t, (i, j) in enumerate(g.pairs()):
        assert bool(orc.implicit_edges >> t & 1) == oracles.implicit_edge(g.n, g.edges(), k, i, j)
        if not g.has_edge(i, j):
            assert bool(orc.implicit_identities >> t & 1) == oracles.implicit_identity(g.n, g.edges(), k, i, j)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_subset_chromatic_table(g):
    chi, indep = _chi_table(g.masks)
    full = (1 << g.n) - 1
    assert chi[full] == oracles.chi(g.n, g.edges())
    for s in (full, full ^ 1, full >> 1, 0):
        keep = [p for p in range(g.n) if s >> p & 1]
        assert chi[s] == oracles.chi(*oracles.induced(g.n, g.edges(), keep))
        assert indep[s] == (frozenset(keep) in set(oracles.independent_sets(g.n, g.edges())))

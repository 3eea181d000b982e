import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from implicol import (GraphError, PairStatus, PreconditionError, RefusalError, chromatic_number,
                      classify_pair, closure_completeness_test, complete_graph, contradiction_test,
                      critical_independent_sets, cycle_graph, delete_edge, explicit_graph, explicit_neighborhood,
                      is_implicit_edge, is_implicit_identity, is_k_colorable, path_graph,
                      verify_bipartite_characterization)
from implicol.fixtures import FIG1A, FIG1B, FOUR_PATH
from implicol.relations import IMPLICIT_EDGE, NOT_THREE_COLORABLE, THREE_COLORABLE

from . import oracles
from .test_graph import graphs

K4_MINUS = delete_edge(complete_graph(4), 0, 1)


def test_implicit_edge_examples():
    assert is_implicit_edge(FOUR_PATH.graph, 2, 0, 3)
    assert is_implicit_edge(FIG1A.graph, 3, 1, 4)
    assert not is_implicit_edge(complete_graph(3), 3, 0, 1)
    with pytest.raises(GraphError):
        is_implicit_edge(FIG1A.graph, 3, 1, 9)
    with pytest.raises(GraphError):
        is_implicit_edge(FIG1A.graph, 3, 1, 1)


def test_implicit_identity_examples():
    assert is_implicit_identity(path_graph(3), 2, 0, 2)
    assert is_implicit_identity(K4_MINUS, 3, 0, 1)
    assert not any(is_implicit_identity(cycle_graph(5), 3, i, j) for i, j in cycle_graph(5).non_edges())
    with pytest.raises(GraphError):
        is_implicit_identity(path_graph(3), 2, 0, 1)


def test_identity_vacuous_switch():
    g = cycle_graph(5)
    assert is_implicit_identity(g, 2, 0, 2)
    assert not is_implicit_identity(g, 2, 0, 2, allow_vacuous=False)


def test_classify_examples():
    pc = classify_pair(FIG1A.graph, 3, 1, 4)
    assert pc.status is PairStatus.NON_DRAWN_IMPLICIT_EDGE and not pc.vacuous
    c4 = cycle_graph(4)
    assert all(classify_pair(c4, 2, *e).status is PairStatus.DRAWN_IMPLICIT_EDGE for e in c4.edges())
    k4 = complete_graph(4)
    for i, j in k4.pairs():
        pc = classify_pair(k4, 3, i, j)
        assert pc.implicit_edge and pc.vacuous
    assert classify_pair(FIG1A.graph, 3, 1, 2).status is PairStatus.IMPLICIT_IDENTITY
    assert classify_pair(FIG1A.graph, 3, 0, 4).status is PairStatus.FREE
    assert classify_pair(FIG1A.graph, 3, 0, 1).status is PairStatus.PLAIN_EDGE


def test_vacuous_non_edge_is_both():
    pc = classify_pair(cycle_graph(5), 2, 0, 2)
    assert pc.vacuous and pc.implicit_edge and pc.implicit_identity
    assert pc.status is PairStatus.NON_DRAWN_IMPLICIT_EDGE


def test_explicit_neighbourhood_examples():
    assert explicit_neighborhood(FIG1A.graph, 3, 1) == {0, 3, 4}
    assert explicit_neighborhood(complete_graph(3), 3, 2) == {0, 1}
    assert explicit_neighborhood(FOUR_PATH.graph, 2, 0) == {1, 3}


def test_explicit_graph_examples():
    report = explicit_graph(FOUR_PATH.graph, 2)
    assert report.explicit_graph == cycle_graph(4)
    assert report.added_edges() == [(0, 3)]
    k3 = explicit_graph(complete_graph(3), 3)
    assert k3.explicit_graph == complete_graph(3)
    assert all(pc.status is PairStatus.PLAIN_EDGE for pc in k3.classifications)
    k4 = explicit_graph(complete_graph(4), 3)
    assert k4.explicit_graph == complete_graph(4) and k4.vacuous
    assert all(pc.vacuous for pc in k4.classifications)


def test_report_json():
    data = explicit_graph(FOUR_PATH.graph, 2).to_json()
    assert data["k"] == 2 and data["vacuous"] is False
    assert data["explicitEdgesAdded"] == [[0, 3]]
    assert {"u": 0, "v": 3, "status": "non-drawn-implicit-edge"} in data["pairs"]
    assert len(data["pairs"]) == 6


def test_contradiction_examples():
    assert contradiction_test(cycle_graph(5), 2, 0, 2)
    assert not contradiction_test(path_graph(3), 2, 0, 2)
    assert not contradiction_test(FIG1A.graph, 3, 1, 4)
    with pytest.raises(GraphError):
        contradiction_test(path_graph(3), 2, 0, 1)


def test_closure_examples():
    assert closure_completeness_test(complete_graph(4)) == NOT_THREE_COLORABLE
    assert closure_completeness_test(cycle_graph(5)) == THREE_COLORABLE
    assert closure_completeness_test(FIG1B.graph) == THREE_COLORABLE
    with pytest.raises(RefusalError, match="K3"):
        closure_completeness_test(complete_graph(3))


def test_bipartite_examples():
    v = verify_bipartite_characterization(FIG1A.graph, 3, 1, 4)
    assert v.status == "confirmed" and v.instances_checked > 0
    assert verify_bipartite_characterization(path_graph(3), 2, 0, 2).status == "confirmed"
    assert verify_bipartite_characterization(cycle_graph(5), 3, 0, 2).status == "confirmed"
    with pytest.raises(PreconditionError):
        verify_bipartite_characterization(cycle_graph(5), 4, 0, 2)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2), st.integers(1, 4), st.data())
def test_reductions_match_enumeration(g, k, data):
    i, j = data.draw(st.lists(st.sampled_from(g.vertices), min_size=2, max_size=2, unique=True))
    assert is_implicit_edge(g, k, i, j) == oracles.implicit_edge(g.n, g.edges(), k, i, j)
    if not g.has_edge(i, j):
        assert is_implicit_identity(g, k, i, j) == oracles.implicit_identity(g.n, g.edges(), k, i, j)


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=1), st.integers(1, 4))
def test_closure_is_a_fixpoint(g, k):
    report = explicit_graph(g, k)
    closure = report.explicit_graph
    assert set(closure.edges()) == set(g.edges()) | set(report.implicit_edges())
    again = explicit_graph(closure, k)
    assert again.added_edges() == []
    if not report.vacuous:
        assert oracles.count(g.n, g.edges(), k) == oracles.count(closure.n, closure.edges(), k)
        assert not any(pc.status is PairStatus.NON_DRAWN_IMPLICIT_EDGE for pc in again.classifications)
        # drawn implicit edges stay implicit
        for pair in report.implicit_edges():
            assert again.classification(*pair).implicit_edge


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=1), st.integers(1, 4))
def test_vacuous_flag_and_identity_placement(g, k):
    report = explicit_graph(g, k)
    assert report.vacuous == (not is_k_colorable(g, k))
    for pc in report.classifications:
        assert pc.vacuous == report.vacuous
        if pc.implicit_identity:
            assert not g.has_edge(*pc.pair)


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=2), st.integers(1, 4))
def test_contradiction_ignores_the_pair(g, k):
    answers = {contradiction_test(g, k, i, j) for i, j in g.non_edges()}
    assert answers <= {not is_k_colorable(g, k)}


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1))
def test_critical_sets_hold_no_implicit_edge(g):
    k = chromatic_number(g)
    for s in critical_independent_sets(g, k):
        members = sorted(s)
        assert not any(is_implicit_edge(g, k, a, b) for n, a in enumerate(members) for b in members[n + 1:])


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=5), st.data())
def test_bipartite_characterisation_holds(g, data):
    k = chromatic_number(g)
    if k < 2:
        return
    i, j = data.draw(st.lists(st.sampled_from(g.vertices), min_size=2, max_size=2, unique=True))
    assert verify_bipartite_characterization(g, k, i, j).status == "confirmed"
    assert verify_bipartite_characterization(g, k, i, j, relations=(IMPLICIT_EDGE,)).ok

from implicol import chromatic_number, classify_pair, explicit_graph, is_implicit_edge, path_graph
from implicol.fixtures import FIGURES, FOUR_PATH, is_verified


def test_five_figures_present():
    assert list(FIGURES) == ["fig1a", "fig1b", "fig1c", "fig2a", "fig2b"]
    assert [(f.graph.n, f.graph.m) for f in FIGURES.values()] == [(5, 6), (8, 11), (7, 10), (6, 10), (9, 18)]


def test_every_fixture_verifies():
    for name, f in FIGURES.items():
        assert is_verified(name), name
        assert chromatic_number(f.graph) == f.k
        assert is_implicit_edge(f.graph, f.k, f.u, f.v)
        assert not f.graph.has_edge(f.u, f.v)
    assert is_verified("four-path")


def test_relations_found_in_each_figure():
    found = {name: (explicit_graph(f.graph, f.k).implicit_edges(), explicit_graph(f.graph, f.k).implicit_identities())
             for name, f in FIGURES.items()}
    assert found == {
        "fig1a": ([(1, 4)], [(1, 2)]),
        "fig1b": ([(1, 6)], []),
        "fig1c": ([(5, 6)], []),
        "fig2a": ([(0, 5)], [(0, 4)]),
        "fig2b": ([(0, 7)], []),
    }


def test_four_path():
    assert FOUR_PATH.graph == path_graph(4)
    assert classify_pair(FOUR_PATH.graph, 2, 0, 3).status.value == "non-drawn-implicit-edge"

import io

import pytest
from hypothesis import given, settings

from implicol import (DimacsParseError, Graph, complete_graph, emit_dimacs, empty_graph, explicit_graph,
                      graph_from_json, graph_to_json, parse_dimacs, path_graph, to_dot)
from implicol.fixtures import FIG1A

from .test_graph import graphs


def test_triangle():
    assert parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == complete_graph(3)


def test_edgeless():
    assert parse_dimacs("p edge 2 0\n") == empty_graph(2)


def test_fig1a_text():
    text = "p edge 5 6\ne 1 2\ne 1 3\ne 1 4\ne 2 4\ne 3 4\ne 3 5\n"
    assert parse_dimacs(text) == FIG1A.graph


def test_comments_duplicates_and_stream():
    text = "c hello\n\np edge 3 4\ne 1 2\ne 2 1\ne 2 3\nc bye\ne 2 3\n"
    assert parse_dimacs(io.StringIO(text)) == path_graph(3)


@pytest.mark.parametrize("text, lineno", [
    ("p edge x 1\n", 1),
    ("c x\np edge 3\n", 2),
    ("p edge 2 1\ne 1 3\n", 2),
    ("p edge 2 1\ne 2 2\n", 2),
    ("e 1 2\np edge 2 1\n", 1),
    ("p edge 2 1\np edge 2 1\n", 2),
    ("p edge 2 1\nq 1 2\n", 2),
    ("p edge 2 1\ne 1\n", 2),
    ("c only comments\n", 0),
])
def test_errors_name_the_line(text, lineno):
    with pytest.raises(DimacsParseError) as info:
        parse_dimacs(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}:")


def test_emit_uses_one_based_ids():
    out = emit_dimacs(path_graph(3), ["note"])
    assert out.splitlines() == ["c note", "p edge 3 2", "e 1 2", "e 2 3"]


def test_json_echo():
    data = graph_to_json(Graph(3, [(2, 1), (0, 2)]))
    assert data == {"n": 3, "edges": [[0, 2], [1, 2]]}
    assert graph_from_json(data) == Graph(3, [(0, 2), (1, 2)])
    assert graph_from_json('{"n": 2, "edges": [[0, 1]]}') == complete_graph(2)


def test_dot_styles():
    report = explicit_graph(FIG1A.graph, 3)
    dot = to_dot(FIG1A.graph, report)
    assert "1 -- 4 [style=dashed, constraint=false];" in dot
    assert "1 -- 2 [style=dotted, constraint=false];" in dot
    assert "0 -- 1;" in dot
    assert dot.startswith("graph G {") and dot.rstrip().endswith("}")


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_round_trip(g):
    assert parse_dimacs(emit_dimacs(g)) == g
    assert graph_from_json(graph_to_json(g)) == g

"""Small named graphs with a known implicit edge.

Each figure graph is transcribed node for node from a drawing of implicit
edges in 3- and 4-chromatic graphs.  Drawn node ``A<m>`` becomes vertex
``m - 1`` except in ``fig2b``, whose nodes are already numbered from 0.  The
dashed pair of each drawing is recorded as ``(u, v)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .coloring import chromatic_number
from .graph import Graph, path_graph
from .relations import is_implicit_edge


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    k: int
    u: int
    v: int
    note: str = ""

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


def _shifted(edges):
    return [(a - 1, b - 1) for a, b in edges]


# Fig. 1(a): u = A2, v = A5
FIG1A = Fixture("fig1a", Graph(5, _shifted([(1, 2), (1, 3), (1, 4), (2, 4), (3, 4), (3, 5)])),
                k=3, u=1, v=4)

# Fig. 1(b): u = A2, v = A7
FIG1B = Fixture("fig1b", Graph(8, _shifted([(1, 2), (2, 3), (1, 4), (1, 6), (3, 8), (3, 5), (4, 5),
                                            (4, 6), (5, 8), (6, 7), (7, 8)])),
                k=3, u=1, v=6)

# Fig. 1(c): u = A6, v = A7; together they see the 5-cycle A1..A5
FIG1C = Fixture("fig1c", Graph(7, _shifted([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 6), (3, 6),
                                            (5, 6), (1, 7), (4, 7)])),
                k=3, u=5, v=6)

# Fig. 2(a): u = A1, v = A6; A1..A4 is a K4
FIG2A = Fixture("fig2a", Graph(6, _shifted([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4), (5, 2),
                                            (5, 3), (5, 4), (5, 6)])),
                k=4, u=0, v=5)

# Fig. 2(b): u = A0, v = A7.  The drawing also joins A6 to an undeclared A9;
# that line is dropped.
FIG2B = Fixture("fig2b", Graph(9, [(0, 1), (0, 3), (1, 2), (2, 3), (1, 4), (4, 6), (3, 5), (5, 8),
                                   (2, 4), (2, 5), (2, 7), (4, 7), (5, 7), (7, 6), (7, 8),
                                   (1, 6), (3, 8), (6, 8)]),
                k=4, u=0, v=7, note="edge to undeclared node A9 omitted")

FOUR_PATH = Fixture("four-path", path_graph(4), k=2, u=0, v=3)

FIGURES = {f.name: f for f in (FIG1A, FIG1B, FIG1C, FIG2A, FIG2B)}


@cache
def is_verified(name: str) -> bool:
    """The fixture is k-chromatic and its dashed pair is an implicit edge."""
    f = FIGURES.get(name) or {FOUR_PATH.name: FOUR_PATH}[name]
    return chromatic_number(f.graph) == f.k and is_implicit_edge(f.graph, f.k, f.u, f.v)

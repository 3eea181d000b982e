"""Implicit edges, implicit identities and the explicit-graph closure.

A pair ``{i, j}`` is an *implicit edge* for ``k`` colours when no proper
k-colouring of ``G - ij`` gives ``i`` and ``j`` the same colour; equivalently
``(G - ij) / ij`` is not k-colourable.  A non-adjacent pair is an *implicit
identity* when every proper k-colouring of ``G`` gives both ends the same
colour; equivalently ``G + ij`` is not k-colourable.

When ``G`` has no k-colouring at all both properties hold vacuously.  Reports
carry a ``vacuous`` flag for that case instead of raising.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .coloring import _enumerate_canonical, chromatic_number, is_k_colorable
from .errors import GraphError, PreconditionError, RefusalError
from .graph import BipartiteRelation, Graph, _bits, add_edge, delete_edge, identify_vertices
from .verdict import TheoremVerdict


class PairStatus(str, Enum):
    PLAIN_EDGE = "plain-edge"
    DRAWN_IMPLICIT_EDGE = "drawn-implicit-edge"
    NON_DRAWN_IMPLICIT_EDGE = "non-drawn-implicit-edge"
    IMPLICIT_IDENTITY = "implicit-identity"
    FREE = "free"


@dataclass(frozen=True)
class PairClassification:
    pair: tuple[int, int]
    status: PairStatus
    vacuous: bool
    implicit_edge: bool
    implicit_identity: bool

    def to_json(self) -> dict:
        u, v = self.pair
        return {"u": u, "v": v, "status": self.status.value}


@dataclass(frozen=True)
class RelationReport:
    k: int
    vacuous: bool
    classifications: tuple[PairClassification, ...]
    explicit_graph: Graph

    def classification(self, u: int, v: int) -> PairClassification:
        pair = (min(u, v), max(u, v))
        for pc in self.classifications:
            if pc.pair == pair:
                return pc
        raise GraphError(f"pair {pair} is not in the report")

    def implicit_edges(self) -> list[tuple[int, int]]:
        return [pc.pair for pc in self.classifications if pc.implicit_edge]

    def implicit_identities(self) -> list[tuple[int, int]]:
        return [pc.pair for pc in self.classifications if pc.implicit_identity]

    def added_edges(self) -> list[tuple[int, int]]:
        return [pc.pair for pc in self.classifications if pc.status is PairStatus.NON_DRAWN_IMPLICIT_EDGE]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "vacuous": self.vacuous,
            "pairs": [pc.to_json() for pc in self.classifications],
            "explicitEdgesAdded": [list(p) for p in self.added_edges()],
        }


def _check(g: Graph, k: int, i: int, j: int) -> None:
    g.position(i)
    g.position(j)
    if i == j:
        raise GraphError(f"pair ({i}, {j}) must consist of two distinct vertices")
    if k < 1:
        raise GraphError(f"k must be at least 1, got {k}")


def is_implicit_edge(g: Graph, k: int, i: int, j: int) -> bool:
    """No k-colouring of ``G - ij`` colours ``i`` and ``j`` alike."""
    _check(g, k, i, j)
    merged, _ = identify_vertices(delete_edge(g, i, j, missing_ok=True), i, j)
    return not is_k_colorable(merged, k)


def is_implicit_identity(g: Graph, k: int, i: int, j: int, *, allow_vacuous: bool = True) -> bool:
    """Every k-colouring of ``G`` colours the non-adjacent ``i`` and ``j`` alike.

    With ``allow_vacuous=False`` a graph without any k-colouring yields
    ``False`` instead of the vacuous ``True``.
    """
    _check(g, k, i, j)
    if g.has_edge(i, j):
        raise GraphError(f"({i}, {j}) is an edge; implicit identities are non-adjacent pairs")
    if is_k_colorable(add_edge(g, i, j), k):
        return False
    return allow_vacuous or is_k_colorable(g, k)


def _classify(g: Graph, k: int, i: int, j: int, vacuous: bool) -> PairClassification:
    pair = (min(i, j), max(i, j))
    drawn = g.has_edge(i, j)
    if vacuous:
        status = PairStatus.DRAWN_IMPLICIT_EDGE if drawn else PairStatus.NON_DRAWN_IMPLICIT_EDGE
        return PairClassification(pair, status, True, True, not drawn)
    edge = is_implicit_edge(g, k, i, j)
    if drawn:
        status = PairStatus.DRAWN_IMPLICIT_EDGE if edge else PairStatus.PLAIN_EDGE
        return PairClassification(pair, status, False, edge, False)
    if edge:
        return PairClassification(pair, PairStatus.NON_DRAWN_IMPLICIT_EDGE, False, True, False)
    identity = is_implicit_identity(g, k, i, j)
    status = PairStatus.IMPLICIT_IDENTITY if identity else PairStatus.FREE
    return PairClassification(pair, status, False, False, identity)


def classify_pair(g: Graph, k: int, i: int, j: int) -> PairClassification:
    """Relation status of one pair.

    If ``g`` has no k-colouring the pair is reported as an implicit edge
    (drawn or not) with ``vacuous=True``, and a non-adjacent pair is also
    flagged as an implicit identity.
    """
    _check(g, k, i, j)
    return _classify(g, k, i, j, not is_k_colorable(g, k))


def explicit_neighborhood(g: Graph, k: int, v: int) -> frozenset[int]:
    """Neighbours of ``v`` plus every vertex joined to it by an implicit edge."""
    if k < 1:
        raise GraphError(f"k must be at least 1, got {k}")
    g.position(v)
    implicit = {u for u in g.vertices if u != v and is_implicit_edge(g, k, v, u)}
    return g.neighbors(v) | implicit


def explicit_graph(g: Graph, k: int) -> RelationReport:
    """Classify every pair and add every implicit edge to a copy of ``g``.

    One pass is enough: adding implicit edges does not change the set of
    k-colourings, so the result has no implicit edges left to add.
    """
    if k < 1:
        raise GraphError(f"k must be at least 1, got {k}")
    vacuous = not is_k_colorable(g, k)
    classes = tuple(_classify(g, k, i, j, vacuous) for i, j in combinations(g.vertices, 2))
    closure = Graph(g.vertices, g.edges() + [pc.pair for pc in classes
                                             if pc.status is PairStatus.NON_DRAWN_IMPLICIT_EDGE])
    return RelationReport(k, vacuous, classes, closure)


def contradiction_test(g: Graph, k: int, i: int, j: int) -> bool:
    """``True`` when the non-adjacent pair is both an implicit edge and an
    implicit identity, which happens exactly when ``g`` is not k-colourable."""
    _check(g, k, i, j)
    if g.has_edge(i, j):
        raise GraphError(f"({i}, {j}) is an edge; the test needs a non-adjacent pair")
    return is_implicit_edge(g, k, i, j) and is_implicit_identity(g, k, i, j)


THREE_COLORABLE = "3-colorable"
NOT_THREE_COLORABLE = "not-3-colorable"


def closure_completeness_test(g: Graph) -> str:
    """Decide 3-colourability from the 3-colour closure: complete means no.

    Refused for ``n <= 3`` because the closure of ``K3`` is complete although
    ``K3`` is 3-colourable.
    """
    if g.n <= 3:
        raise RefusalError(f"closure test needs at least 4 vertices (got {g.n}); K3 is complete and 3-colorable")
    closure = explicit_graph(g, 3).explicit_graph
    complete = closure.m == g.n * (g.n - 1) // 2
    return NOT_THREE_COLORABLE if complete else THREE_COLORABLE


def _kept_choices(ci: int, cj: int, k: int) -> list[tuple[int, int]]:
    """Colour pairs kept after deleting k-2 classes, never deleting i's or j's class."""
    if ci != cj:
        return [(ci, cj)]
    return [(ci, b) for b in range(k) if b != ci]


def _relation_within(masks: tuple[int, ...], keep: int, pi: int, pj: int) -> BipartiteRelation:
    """``bipartite_relation`` on the subgraph induced by the position mask ``keep``."""
    side: dict[int, int] = {}
    comp: dict[int, int] = {}
    for s in _bits(keep):
        if s in side:
            continue
        side[s], comp[s] = 0, s
        stack = [s]
        while stack:
            p = stack.pop()
            for q in _bits(masks[p] & keep):
                if q not in side:
                    side[q], comp[q] = side[p] ^ 1, s
                    stack.append(q)
                elif side[q] == side[p]:
                    return BipartiteRelation.NOT_BIPARTITE
    if comp[pi] != comp[pj]:
        return BipartiteRelation.DISCONNECTED
    return BipartiteRelation.SAME_SIDE if side[pi] == side[pj] else BipartiteRelation.OPPOSITE_SIDE


def _bipartite_outcomes(g: Graph, k: int, i: int, j: int):
    pi, pj = g.position(i), g.position(j)
    n = g.n
    for colors in _enumerate_canonical(g.masks, k):
        cm = [0] * k
        for p in range(n):
            cm[colors[p]] |= 1 << p
        for a, b in _kept_choices(colors[pi], colors[pj], k):
            yield colors, (a, b), _relation_within(g.masks, cm[a] | cm[b], pi, pj)


IMPLICIT_EDGE = "implicit-edge"
IMPLICIT_IDENTITY = "implicit-identity"


def verify_bipartite_characterization(g: Graph, k: int, i: int, j: int,
                                      relations: tuple[str, ...] = (IMPLICIT_EDGE, IMPLICIT_IDENTITY),
                                      ) -> TheoremVerdict:
    """Check the two-colour-class characterisations for one pair of a k-chromatic graph.

    For every k-colouring and every way of deleting k-2 colour classes that
    keeps ``i`` and ``j``: an implicit edge must always leave ``i`` and ``j``
    on opposite sides (checked on ``G - ij``), an implicit identity always on
    the same side.  A pair without the relation must have some deletion with
    another outcome; the search for it stops at the first witness.  Both
    claims are blind to renaming colours, so one colouring per renaming class
    is examined.
    """
    _check(g, k, i, j)
    chi = chromatic_number(g)
    if chi != k or k < 2:
        raise PreconditionError(f"need a k-chromatic graph with k >= 2; graph is {chi}-chromatic, k = {k}")
    verdict = TheoremVerdict("bipartite-characterization")

    def run(h: Graph, holds: bool, expected: BipartiteRelation, label: str) -> None:
        witnessed = False
        for colors, kept, rel in _bipartite_outcomes(h, k, i, j):
            verdict.instances_checked += 1
            if rel is expected:
                continue
            if not holds:
                witnessed = True
                break
            verdict.record({"relation": label, "pair": [i, j],
                            "coloring": {str(v): colors[p] + 1 for p, v in enumerate(h.vertices)},
                            "kept": [kept[0] + 1, kept[1] + 1], "outcome": rel.value})
        if not holds and not witnessed:
            verdict.record({"relation": "not-" + label, "pair": [i, j], "outcome": "always " + expected.value})

    if IMPLICIT_EDGE in relations:
        run(delete_edge(g, i, j, missing_ok=True), is_implicit_edge(g, k, i, j),
            BipartiteRelation.OPPOSITE_SIDE, IMPLICIT_EDGE)
    if IMPLICIT_IDENTITY in relations and not g.has_edge(i, j):
        run(g, is_implicit_identity(g, k, i, j), BipartiteRelation.SAME_SIDE, IMPLICIT_IDENTITY)
    return verdict.finish()

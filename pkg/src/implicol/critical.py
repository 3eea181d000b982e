"""Critical elements, k-critical and double-critical graphs, and ``G^-`` analysis."""
from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import chromatic_number, enumerate_k_colorings
from .errors import GraphError, PreconditionError
from .graph import Graph, delete_edge, delete_vertex, remove_vertices
from .kempe import connecting_chain_report
from .relations import is_implicit_edge, is_implicit_identity
from .verdict import TheoremVerdict

# names used in CriticalityReport.property_violations
DISCONNECTED = "disconnected"
LOW_DEGREE = "min-degree-below-k-1"
EDGE_BOUND = "2|E| < (k-1)|V| + k-3"
ORDER_K_PLUS_1 = "|V| = k+1"


@dataclass(frozen=True)
class CriticalityReport:
    chi: int
    critical_vertices: frozenset[int]
    critical_edges: frozenset[tuple[int, int]]
    is_k_critical: bool
    is_double_critical: bool
    property_violations: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "chi": self.chi,
            "criticalVertices": sorted(self.critical_vertices),
            "criticalEdges": [list(e) for e in sorted(self.critical_edges)],
            "isKCritical": self.is_k_critical,
            "isDoubleCritical": self.is_double_critical,
            "propertyViolations": list(self.property_violations),
        }


def structural_violations(g: Graph, k: int) -> tuple[str, ...]:
    """Which of the textbook properties of k-critical graphs ``g`` fails."""
    out = []
    if not g.is_connected():
        out.append(DISCONNECTED)
    if any(g.degree(v) < k - 1 for v in g.vertices):
        out.append(LOW_DEGREE)
    if 2 * g.m < (k - 1) * g.n + k - 3:
        out.append(EDGE_BOUND)
    if g.n == k + 1:
        out.append(ORDER_K_PLUS_1)
    return tuple(out)


def criticality_report(g: Graph) -> CriticalityReport:
    """Critical vertices and edges, k-criticality, double-criticality.

    Double-criticality is only granted to connected graphs: every edge
    ``xy`` must leave ``G - x - y`` (k-2)-colourable.  Structural properties
    are checked only when ``g`` is k-critical.
    """
    if g.n == 0:
        raise GraphError("criticality is undefined for the empty graph")
    chi = chromatic_number(g)
    cv = frozenset(v for v in g.vertices if chromatic_number(delete_vertex(g, v)) < chi)
    ce = frozenset(e for e in g.edges() if chromatic_number(delete_edge(g, *e)) < chi)
    k_critical = len(cv) == g.n and len(ce) == g.m
    double = g.is_connected() and all(chromatic_number(remove_vertices(g, e)) <= chi - 2 for e in g.edges())
    violations = structural_violations(g, chi) if k_critical else ()
    return CriticalityReport(chi, cv, ce, k_critical, double, violations)


def no_implicit_relations_check(g: Graph) -> TheoremVerdict:
    """A k-critical graph has no implicit edges and no implicit identities at ``k = chi``."""
    report = criticality_report(g)
    if not report.is_k_critical:
        raise PreconditionError("graph is not k-critical")
    k = report.chi
    verdict = TheoremVerdict("no-implicit-in-critical")
    for i, j in g.pairs():
        verdict.instances_checked += 1
        if is_implicit_edge(g, k, i, j):
            verdict.record({"pair": [i, j], "relation": "implicit-edge"})
        elif not g.has_edge(i, j) and is_implicit_identity(g, k, i, j):
            verdict.record({"pair": [i, j], "relation": "implicit-identity"})
    return verdict.finish()


@dataclass(frozen=True)
class GMinusReport:
    chi: int
    minus_chi: int
    implicit_identity: bool
    min_identity_chains: int | None
    colorings_checked: int

    @property
    def holds(self) -> bool:
        return (self.implicit_identity and self.min_identity_chains is not None
                and self.min_identity_chains >= self.chi - 2)


def g_minus_analysis(g: Graph, x: int, y: int) -> GMinusReport:
    """Remove the critical edge ``xy`` and inspect the ends in ``G - xy``.

    They should form an implicit identity for ``k - 1`` colours and be linked
    by at least ``k - 2`` Kempe chains in every (k-1)-colouring.
    """
    if not g.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")
    chi = chromatic_number(g)
    minus = delete_edge(g, x, y)
    minus_chi = chromatic_number(minus)
    if minus_chi >= chi:
        raise PreconditionError(f"edge ({x}, {y}) is not critical: chi(G - xy) = {minus_chi} = chi(G)")
    k = chi - 1
    identity = is_implicit_identity(minus, k, x, y, allow_vacuous=False)
    counts = [connecting_chain_report(minus, c, x, y).identity_chain_count
              for c in enumerate_k_colorings(minus, k)]
    counts = [0 if n is None else n for n in counts]
    return GMinusReport(chi, minus_chi, identity, min(counts) if counts else None, len(counts))


def critical_vertex_adjacency_check(g: Graph) -> TheoremVerdict:
    """Every critical vertex touches an end of each implicit edge and both ends
    of each implicit identity (at ``k = chi``)."""
    verdict = TheoremVerdict("critical-vertex-adjacency")
    if g.n == 0:
        return verdict.finish()
    chi = chromatic_number(g)
    critical = [z for z in g.vertices if chromatic_number(delete_vertex(g, z)) < chi]
    if not critical:
        return verdict.finish()
    edges, identities = [], []
    for i, j in g.pairs():
        if is_implicit_edge(g, chi, i, j):
            edges.append((i, j))
        elif not g.has_edge(i, j) and is_implicit_identity(g, chi, i, j):
            identities.append((i, j))
    for z in critical:
        nz = g.neighbors(z)
        for u, v in edges:
            verdict.instances_checked += 1
            if u not in nz and v not in nz:
                verdict.record({"z": z, "pair": [u, v], "relation": "implicit-edge"})
        for u, v in identities:
            verdict.instances_checked += 1
            if not (u in nz and v in nz):
                verdict.record({"z": z, "pair": [u, v], "relation": "implicit-identity"})
    return verdict.finish()

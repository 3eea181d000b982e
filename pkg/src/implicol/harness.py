"""Exhaustive verification of the colouring claims over small labelled graphs.

Every claim is checked on every labelled simple graph with ``1..max_n``
vertices.  Implicit relations are decided twice: by the library (through the
identification and edge-addition reductions) and by a brute-force numpy
enumeration of all ``k^n`` colour assignments.  Chromatic numbers of induced
subgraphs come from a subset dynamic programme, independent of the
backtracking search.
"""
from __future__ import annotations

import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .coloring import Coloring, chromatic_number, count_k_colorings
from .critical import no_implicit_relations_check
from .errors import RefusalError
from .graph import Graph, _bits, _independent_masks, contract_edge, delete_edge, identify_vertices, remove_vertices
from .io import emit_dimacs, graph_to_json
from .kempe import connecting_chain_report
from .polynomial import chromatic_polynomial, check_addition_contraction, check_deletion_contraction, evaluate
from .relations import (IMPLICIT_EDGE, IMPLICIT_IDENTITY, NOT_THREE_COLORABLE, closure_completeness_test,
                        contradiction_test, is_implicit_edge, is_implicit_identity,
                        verify_bipartite_characterization)
from .verdict import TheoremVerdict

MAX_N = 8
CHROMATIC_ONLY = "chromatic-only"
RANGE = "range"


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> tuple[tuple[int, ...], ...]:
    table = [[-1] * n for _ in range(n)]
    for t, (u, v) in enumerate(_pairs(n)):
        table[u][v] = table[v][u] = t
    return tuple(tuple(row) for row in table)


def enumerate_labelled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n(n-1)/2)`` graphs on vertices ``0..n-1``.

    Graph number ``b`` has pair ``t`` (pairs in lexicographic order) as an
    edge exactly when bit ``t`` of ``b`` is set.
    """
    if n < 0:
        raise RefusalError(f"vertex count must be non-negative, got {n}")
    if n > MAX_N:
        raise RefusalError(f"exhaustive enumeration is capped at n = {MAX_N} (asked for {n})")
    pairs = _pairs(n)
    vertices = tuple(range(n))
    for bits in range(1 << len(pairs)):
        masks = [0] * n
        for t, (u, v) in enumerate(pairs):
            if bits >> t & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        yield Graph._from_masks(vertices, tuple(masks))


# -- brute-force oracle -----------------------------------------------------------

class _Space:
    """All colour assignments ``{0..k-1}^n`` with, per assignment, the set of
    vertex pairs sharing a colour as a pair bitmask."""

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        if n == 0:
            self.assign = np.zeros((1, 0), dtype=np.int8)
        elif k == 0:
            self.assign = np.zeros((0, n), dtype=np.int8)
        else:
            grids = np.indices((k,) * n, dtype=np.int8)
            self.assign = grids.reshape(n, -1).T.copy()
        rows = self.assign.shape[0]
        self.same = np.zeros(rows, dtype=np.int64)
        for t, (u, v) in enumerate(_pairs(n)):
            self.same |= (self.assign[:, u] == self.assign[:, v]).astype(np.int64) << t
        # one assignment per colour renaming: each vertex opens at most the next new colour
        canon = np.ones(rows, dtype=bool)
        opened = np.zeros(rows, dtype=np.int16)
        for p in range(n):
            col = self.assign[:, p].astype(np.int16)
            canon &= col <= opened
            opened = np.maximum(opened, col + 1)
        self.canonical = canon


@lru_cache(maxsize=64)
def _space(n: int, k: int) -> _Space:
    return _Space(n, k)


@dataclass(frozen=True)
class _Oracle:
    count: int
    implicit_edges: int
    implicit_identities: int
    proper: np.ndarray


def _oracle(n: int, k: int, edge_bits: int) -> _Oracle:
    """Decide every pair by looking at every colour assignment."""
    sp = _space(n, k)
    full = (1 << (n * (n - 1) // 2)) - 1
    conflict = sp.same & edge_bits
    proper = conflict == 0
    count = int(proper.sum())
    same_proper = sp.same[proper]
    # a pair is not an implicit edge if some colouring of G - ij gives it one colour:
    # either a proper colouring of G does, or the pair is the only monochromatic edge
    together = int(np.bitwise_or.reduce(same_proper)) if count else 0
    lone = conflict[(conflict != 0) & ((conflict & (conflict - 1)) == 0)]
    together |= int(np.bitwise_or.reduce(lone)) if lone.size else 0
    always = int(np.bitwise_and.reduce(same_proper)) if count else full
    return _Oracle(count, full & ~together, always & ~edge_bits & full, proper)


def _chi_table(masks: tuple[int, ...]) -> tuple[list[int], list[bool]]:
    """Chromatic number and independence of every induced subgraph, by vertex subset.

    ``chi[S]`` is the least number of independent sets covering ``S``; the
    set holding the lowest vertex of ``S`` is enumerated explicitly.
    """
    n = len(masks)
    size = 1 << n
    indep = [True] * size
    chi = [0] * size
    for s in range(1, size):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        indep[s] = indep[rest] and not masks[low] & rest
        if indep[s]:
            chi[s] = 1
            continue
        best = n
        sub = rest
        while True:
            t = sub | (1 << low)
            if indep[t] and chi[s ^ t] + 1 < best:
                best = chi[s ^ t] + 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return chi, indep


# -- per-graph cache --------------------------------------------------------------------

class _Context:
    """State shared by all graphs of one suite run."""

    def __init__(self):
        self.relation_memo: dict[tuple[tuple[int, ...], int], tuple[int, int]] = {}

    def relations(self, g: Graph, k: int) -> tuple[int, int]:
        """Library decisions as pair bitmasks ``(implicit edges, implicit identities)``."""
        key = (g.masks, k)
        hit = self.relation_memo.get(key)
        if hit is not None:
            return hit
        ie = ii = 0
        for t, (u, v) in enumerate(g.pairs()):
            if is_implicit_edge(g, k, u, v):
                ie |= 1 << t
            if not g.has_edge(u, v) and is_implicit_identity(g, k, u, v):
                ii |= 1 << t
        self.relation_memo[key] = (ie, ii)
        return ie, ii


class _Instance:
    def __init__(self, g: Graph, ctx: _Context):
        self.g = g
        self.ctx = ctx
        self.n = g.n
        self.pairs = g.pairs()
        self.edge_bits = sum(1 << t for t, (u, v) in enumerate(self.pairs) if g.has_edge(u, v))
        self._chi: int | None = None
        self._table = None
        self._oracles: dict[int, _Oracle] = {}
        self._poly = None

    @property
    def chi(self) -> int:
        if self._chi is None:
            self._chi = chromatic_number(self.g)
        return self._chi

    @property
    def table(self) -> tuple[list[int], list[bool]]:
        if self._table is None:
            self._table = _chi_table(self.g.masks)
        return self._table

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def oracle(self, k: int) -> _Oracle:
        if k not in self._oracles:
            self._oracles[k] = _oracle(self.n, k, self.edge_bits)
        return self._oracles[k]

    def relations(self, k: int) -> tuple[int, int]:
        return self.ctx.relations(self.g, k)

    @property
    def poly(self):
        if self._poly is None:
            self._poly = chromatic_polynomial(self.g)
        return self._poly

    def relation_pairs(self, bits: int) -> list[tuple[int, int]]:
        return [self.pairs[t] for t in _bits(bits)]

    def critical_sets(self, k: int) -> list[int]:
        """Independent vertex masks whose removal leaves a (k-1)-chromatic graph."""
        chi, indep = self.table
        full = self.full
        return [s for s in range(1, full + 1) if indep[s] and chi[full ^ s] == k - 1]

    def colorings(self, k: int, canonical: bool = True) -> np.ndarray:
        sp = _space(self.n, k)
        mask = self.oracle(k).proper
        if canonical:
            mask = mask & sp.canonical
        return sp.assign[mask]


def _positions(mask: int) -> list[int]:
    return list(_bits(mask))


def _subpair(inst: _Instance, removed: int, u: int, v: int) -> tuple[Graph, int]:
    """``G - S`` and the pair index of ``(u, v)`` inside it."""
    h = remove_vertices(inst.g, inst.g.labels(removed))
    return h, _pair_index(h.n)[h.position(u)][h.position(v)]


# -- theorem checks -------------------------------------------------------------------------

Record = Callable[..., None]


def _lemma(inst: _Instance, k: int | None, v: TheoremVerdict, fail: Record) -> None:
    g = inst.g
    _, indep = inst.table
    for x, y in inst.pairs:
        if g.has_edge(x, y):
            h, mapping = contract_edge(g, x, y)
            op = "contract"
        else:
            h, mapping = identify_vertices(g, x, y)
            op = "identify"
        image_pos = [g.position(mapping.representative(w)) for w in h.vertices]
        images = set()
        for s in _independent_masks(h.masks):
            v.instances_checked += 1
            img = 0
            for q in _bits(s):
                img |= 1 << image_pos[q]
            if not indep[img] or img in images:
                fail(op=op, pair=[x, y], independent_set=sorted(h.labels(s)))
            images.add(img)
        # strict: the singleton of the vanished vertex has no preimage
        v.instances_checked += 1
        if len(images) >= sum(indep):
            fail(op=op, pair=[x, y], result_sets=len(images), original_sets=sum(indep))


def _poly_evaluation(max_k: int):
    def check(inst: _Instance, k: int | None, v: TheoremVerdict, fail: Record) -> None:
        for kk in range(max_k + 1):
            v.instances_checked += 1
            if evaluate(inst.poly, kk) != count_k_colorings(inst.g, kk):
                fail(k=kk)
    return check


def _deletion_contraction(inst: _Instance, k: int | None, v: TheoremVerdict, fail: Record) -> None:
    for x, y in inst.pairs:
        if inst.g.has_edge(x, y):
            v.instances_checked += 1
            if not check_deletion_contraction(inst.g, x, y):
                fail(edge=[x, y])


def _addition_contraction(inst: _Instance, k: int | None, v: TheoremVerdict, fail: Record) -> None:
    for x, y in inst.pairs:
        if not inst.g.has_edge(x, y):
            v.instances_checked += 1
            if not check_addition_contraction(inst.g, x, y):
                fail(pair=[x, y])


def _oracle_agreement(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
    ie, ii = inst.relations(k)
    orc = inst.oracle(k)
    for t, (x, y) in enumerate(inst.pairs):
        v.instances_checked += 1
        lib = (bool(ie >> t & 1), bool(ii >> t & 1))
        ref = (bool(orc.implicit_edges >> t & 1), bool(orc.implicit_identities >> t & 1))
        if lib != ref:
            fail(k=k, pair=[x, y], library=list(lib), enumeration=list(ref))
    v.instances_checked += 1
    if count_k_colorings(inst.g, k) != orc.count:
        fail(k=k, library_count=count_k_colorings(inst.g, k), enumeration_count=orc.count)


def _ie_independent_sets(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
    ie, _ = inst.relations(k)
    chi, indep = inst.table
    full = inst.full
    for t, (i, j) in enumerate(inst.pairs):
        v.instances_checked += 1
        bi, bj = 1 << i, 1 << j
        others = full & ~(bi | bj)
        witness = None
        sub = others
        while True:
            s = sub | bi | bj
            # independent in G - ij: no edge inside S other than ij itself
            if indep[s & ~bj] and indep[s & ~bi] and chi[full ^ s] < k:
                witness = s
                break
            if sub == 0:
                break
            sub = (sub - 1) & others
        if bool(ie >> t & 1) != (witness is None):
            fail(k=k, pair=[i, j], implicit_edge=bool(ie >> t & 1),
                 independent_set=None if witness is None else _positions(witness))


def _ii_independent_sets(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
    _, ii = inst.relations(k)
    chi, indep = inst.table
    full = inst.full
    for t, (i, j) in enumerate(inst.pairs):
        if inst.g.has_edge(i, j):
            continue
        v.instances_checked += 1
        bi, bj = 1 << i, 1 << j
        witness = next((s for s in range(1, full + 1)
                        if indep[s] and bool(s & bi) != bool(s & bj) and chi[full ^ s] < k), None)
        if bool(ii >> t & 1) != (witness is None):
            fail(k=k, pair=[i, j], implicit_identity=bool(ii >> t & 1),
                 independent_set=None if witness is None else _positions(witness))


def _invariant(identity: bool):
    # one instance per critical set S: G - S must be (k-1)-chromatic and keep
    # every relation whose ends avoid S
    def check(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
        if k < 2:
            return
        ie, ii = inst.relations(k)
        pairs = inst.relation_pairs(ii if identity else ie)
        if not pairs:
            return
        chi, _ = inst.table
        for s in inst.critical_sets(k):
            surviving = [(i, j) for i, j in pairs if not (s >> i & 1 or s >> j & 1)]
            if identity and not surviving:
                continue
            v.instances_checked += 1
            if chi[inst.full ^ s] != k - 1:
                fail(k=k, removed=_positions(s), remaining_chi=chi[inst.full ^ s])
            for i, j in surviving:
                h, t = _subpair(inst, s, i, j)
                sub_ie, sub_ii = inst.ctx.relations(h, k - 1)
                if not (sub_ii if identity else sub_ie) >> t & 1:
                    fail(k=k, pair=[i, j], removed=_positions(s))
    return check


def _bipartite(relation: str):
    def check(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
        if k < 2:
            return
        for i, j in inst.pairs:
            if relation == IMPLICIT_IDENTITY and inst.g.has_edge(i, j):
                continue
            sub = verify_bipartite_characterization(inst.g, k, i, j, relations=(relation,))
            v.instances_checked += sub.instances_checked
            for cx in sub.counterexamples:
                fail(k=k, **cx)
    return check


def _frt_implicit_edge(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
    ie, _ = inst.relations(k)
    for i, j in inst.relation_pairs(ie):
        v.instances_checked += 1
        h, _ = identify_vertices(delete_edge(inst.g, i, j, missing_ok=True), i, j)
        value = evaluate(chromatic_polynomial(h), k)
        if value != 0:
            fail(k=k, pair=[i, j], value=value)


def _frt_ie_corollary(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
    ie, _ = inst.relations(k)
    for i, j in inst.relation_pairs(ie):
        v.instances_checked += 1
        h, _ = identify_vertices(delete_edge(inst.g, i, j, missing_ok=True), i, j)
        chi = chromatic_number(h)
        if chi != k + 1:
            fail(k=k, pair=[i, j], merged_chi=chi)


def _frt_implicit_identity(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
    _, ii = inst.relations(k)
    for i, j in inst.relation_pairs(ii):
        v.instances_checked += 1
        h, _ = identify_vertices(inst.g, i, j)
        before, after = evaluate(inst.poly, k), evaluate(chromatic_polynomial(h), k)
        if before != after:
            fail(k=k, pair=[i, j], before=before, after=after)


def _kempe(identity: bool):
    def check(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
        ie, ii = inst.relations(k)
        pairs = inst.relation_pairs(ii if identity else ie)
        if not pairs:
            return
        g = inst.g
        for row in inst.colorings(k):
            c = Coloring(k, {u: int(row[p]) + 1 for p, u in enumerate(g.vertices)})
            for i, j in pairs:
                v.instances_checked += 1
                report = connecting_chain_report(g, c, i, j)
                ok = (report.identity_chain_count or 0) >= k - 1 if identity else report.edge_chain
                if not ok:
                    fail(k=k, pair=[i, j], coloring=c.to_json()["colors"], chains=report.to_json())
    return check


def _k_critical(inst: _Instance) -> bool:
    chi, _ = inst.table
    full, k = inst.full, inst.chi
    if any(chi[full ^ (1 << p)] >= k for p in range(inst.n)):
        return False
    return all(chromatic_number(delete_edge(inst.g, x, y)) < k for x, y in inst.g.edges())


def _no_implicit_in_critical(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
    if not _k_critical(inst):
        return
    sub = no_implicit_relations_check(inst.g)
    v.instances_checked += sub.instances_checked
    for cx in sub.counterexamples:
        fail(k=k, **cx)


def _critical_vertex_adjacency(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
    chi, _ = inst.table
    full = inst.full
    critical = [z for z in range(inst.n) if chi[full ^ (1 << z)] < k]
    if not critical:
        return
    ie, ii = inst.relations(k)
    edges, identities = inst.relation_pairs(ie), inst.relation_pairs(ii)
    masks = inst.g.masks
    for z in critical:
        for i, j in edges:
            v.instances_checked += 1
            if not (masks[z] >> i & 1 or masks[z] >> j & 1):
                fail(k=k, z=z, pair=[i, j], relation=IMPLICIT_EDGE)
        for i, j in identities:
            v.instances_checked += 1
            if not (masks[z] >> i & 1 and masks[z] >> j & 1):
                fail(k=k, z=z, pair=[i, j], relation=IMPLICIT_IDENTITY)


def _closure_completeness(inst: _Instance, k: int | None, v: TheoremVerdict, fail: Record) -> None:
    if inst.n < 4:
        return
    v.instances_checked += 1
    answer = closure_completeness_test(inst.g)
    colorable = inst.oracle(3).count > 0
    if (answer == NOT_THREE_COLORABLE) == colorable:
        fail(answer=answer, three_colorable=colorable)


def _contradiction(inst: _Instance, k: int, v: TheoremVerdict, fail: Record) -> None:
    colorable = inst.oracle(k).count > 0
    for i, j in inst.pairs:
        if inst.g.has_edge(i, j):
            continue
        v.instances_checked += 1
        if contradiction_test(inst.g, k, i, j) == colorable:
            fail(k=k, pair=[i, j], k_colorable=colorable)


# -- registry ------------------------------------------------------------------------------

# scope: "graph" runs once per graph, "chromatic" once at k = chi(G),
# "any-k" at every k allowed by the k policy
@dataclass(frozen=True)
class _Theorem:
    id: str
    anchor: str
    scope: str
    check: Callable[[int], Callable]


THEOREMS: tuple[_Theorem, ...] = (
    _Theorem("independent-set-lemma",
             "identifying two non-adjacent vertices or contracting an edge maps the independent sets "
             "of the result injectively onto independent sets of the original graph",
             "graph", lambda mk: _lemma),
    _Theorem("poly-evaluation", "P(G, k) equals the number of proper k-colourings of G",
             "graph", _poly_evaluation),
    _Theorem("deletion-contraction", "P(G) = P(G - e) - P(G / e) for every edge e",
             "graph", lambda mk: _deletion_contraction),
    _Theorem("addition-contraction", "P(G) = P(G + e) + P(G / e) for every non-adjacent pair e",
             "graph", lambda mk: _addition_contraction),
    _Theorem("oracle-agreement",
             "implicit-edge and implicit-identity decisions by reduction equal those by enumerating "
             "every colour assignment, and colouring counts agree",
             "any-k", lambda mk: _oracle_agreement),
    _Theorem("ie-independent-sets",
             "in a k-chromatic G, {i,j} is an implicit edge iff no independent set S of G - ij with "
             "i, j in S has chi(G - S) < k",
             "chromatic", lambda mk: _ie_independent_sets),
    _Theorem("ii-independent-sets",
             "in a k-chromatic G, a non-adjacent {i,j} is an implicit identity iff no independent set S "
             "holding exactly one of i, j has chi(G - S) < k",
             "chromatic", lambda mk: _ii_independent_sets),
    _Theorem("ie-invariant",
             "removing a critical independent set S from a k-chromatic G leaves a (k-1)-chromatic graph "
             "in which every implicit edge of G avoiding S is still an implicit edge",
             "chromatic", lambda mk: _invariant(False)),
    _Theorem("ii-invariant",
             "removing a critical independent set S avoiding an implicit identity {i,j} leaves a "
             "(k-1)-chromatic graph in which {i,j} is still an implicit identity",
             "chromatic", lambda mk: _invariant(True)),
    _Theorem("ie-bipartite",
             "{i,j} is an implicit edge of a k-chromatic G iff in G - ij, after deleting any k-2 colour "
             "classes of a k-colouring that spare i and j, the two lie on opposite sides of one "
             "bipartite component",
             "chromatic", lambda mk: _bipartite(IMPLICIT_EDGE)),
    _Theorem("ii-bipartite",
             "a non-adjacent {i,j} is an implicit identity of a k-chromatic G iff after deleting any k-2 "
             "colour classes of a k-colouring that spare i and j, the two lie on the same side of one "
             "bipartite component",
             "chromatic", lambda mk: _bipartite(IMPLICIT_IDENTITY)),
    _Theorem("frt-implicit-edge", "for an implicit edge e of a k-chromatic G, P((G - e) / e, k) = 0",
             "chromatic", lambda mk: _frt_implicit_edge),
    _Theorem("frt-ie-corollary",
             "merging the ends of an implicit edge of a k-chromatic G gives a (k+1)-chromatic graph",
             "chromatic", lambda mk: _frt_ie_corollary),
    _Theorem("frt-implicit-identity", "for an implicit identity e of a k-chromatic G, P(G, k) = P(G / e, k)",
             "chromatic", lambda mk: _frt_implicit_identity),
    _Theorem("kempe-implicit-edge",
             "for an implicit edge {x,y} of a k-chromatic G, every proper k-colouring has a "
             "(c(x), c(y)) Kempe chain containing both x and y",
             "chromatic", lambda mk: _kempe(False)),
    _Theorem("kempe-implicit-identity",
             "for an implicit identity {x,y} of a k-chromatic G, every proper k-colouring has, for each of "
             "the k-1 other colours b, a (c(x), b) Kempe chain containing both x and y",
             "chromatic", lambda mk: _kempe(True)),
    _Theorem("no-implicit-in-critical",
             "a k-critical graph has no implicit edge and no implicit identity for k colours",
             "chromatic", lambda mk: _no_implicit_in_critical),
    _Theorem("critical-vertex-adjacency",
             "a critical vertex z is adjacent to an end of every implicit edge and to both ends of "
             "every implicit identity",
             "chromatic", lambda mk: _critical_vertex_adjacency),
    _Theorem("closure-completeness",
             "for n >= 4, adding every 3-colour implicit edge yields a complete graph iff G is not "
             "3-colourable",
             "graph", lambda mk: _closure_completeness),
    _Theorem("contradiction-test",
             "some non-adjacent pair is both an implicit edge and an implicit identity for k colours "
             "iff G is not k-colourable; every such pair is when it is not",
             "any-k", lambda mk: _contradiction),
)

THEOREM_IDS = tuple(t.id for t in THEOREMS)
_BY_ID = {t.id: t for t in THEOREMS}

GROUPS: dict[str, tuple[str, ...]] = {
    "all": THEOREM_IDS,
    "frt-identities": ("poly-evaluation", "deletion-contraction", "addition-contraction"),
    "implicit-relations": ("oracle-agreement", "ie-independent-sets", "ii-independent-sets", "ie-invariant",
                           "ii-invariant", "ie-bipartite", "ii-bipartite"),
    "reductions": ("frt-implicit-edge", "frt-ie-corollary", "frt-implicit-identity"),
    "kempe": ("kempe-implicit-edge", "kempe-implicit-identity"),
    "critical": ("no-implicit-in-critical", "critical-vertex-adjacency"),
    "complexity": ("closure-completeness", "contradiction-test"),
}


def resolve_theorems(names: Iterable[str] | None) -> tuple[str, ...]:
    """Expand group names, keep registry order, refuse anything without an anchor."""
    if names is None:
        return THEOREM_IDS
    wanted: set[str] = set()
    for name in names:
        if name in GROUPS:
            wanted.update(GROUPS[name])
        elif name in _BY_ID:
            wanted.add(name)
        else:
            raise RefusalError(f"unknown theorem id {name!r}; known: {', '.join(THEOREM_IDS)}")
    return tuple(t for t in THEOREM_IDS if t in wanted)


@dataclass(frozen=True)
class SuiteConfig:
    """What to verify and how far.

    ``k_policy`` governs the claims that hold for any number of colours:
    ``chromatic-only`` uses ``k = chi(G)``, ``range`` every ``k`` in
    ``1..max_k`` (so non-colourable, vacuous cases are exercised).  Claims
    about k-chromatic graphs always run at ``k = chi(G)``.  ``max_k`` also
    bounds the evaluation points ``0..max_k`` of the polynomial check.
    """

    max_n: int = 6
    k_policy: str = CHROMATIC_ONLY
    theorems: tuple[str, ...] | None = None
    time_budget: float | None = None
    max_k: int = 4
    min_n: int = 1
    max_counterexamples: int = 20

    def __post_init__(self):
        if not 0 <= self.min_n <= self.max_n:
            raise RefusalError(f"need 0 <= min_n <= max_n, got {self.min_n}, {self.max_n}")
        if self.max_n > MAX_N:
            raise RefusalError(f"max_n is capped at {MAX_N} (asked for {self.max_n})")
        if self.k_policy not in (CHROMATIC_ONLY, RANGE):
            raise RefusalError(f"unknown k policy {self.k_policy!r}")
        if self.max_k < 1:
            raise RefusalError(f"max_k must be at least 1, got {self.max_k}")
        if self.max_counterexamples < 1:
            raise RefusalError("max_counterexamples must be at least 1")
        resolve_theorems(self.theorems)


def _counterexample(g: Graph, theorem: str, params: dict) -> dict:
    return {"graph": graph_to_json(g), "dimacs": emit_dimacs(g, [f"counterexample to {theorem}"]),
            "params": params}


def run_theorem_suite(cfg: SuiteConfig = SuiteConfig(),
                      progress: Callable[[int, int], None] | None = None) -> list[TheoremVerdict]:
    """Check every selected claim on every labelled graph with ``min_n..max_n`` vertices.

    Graphs are visited in enumeration order, so verdicts and counterexample
    order are deterministic.  If the time budget runs out the verdicts are
    returned as they stand, marked ``incomplete`` unless already refuted.
    """
    selected = [_BY_ID[t] for t in resolve_theorems(cfg.theorems)]
    verdicts = {t.id: TheoremVerdict(t.id, anchor=t.anchor) for t in selected}
    checks = {t.id: t.check(cfg.max_k) for t in selected}
    ctx = _Context()
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
    complete = True
    for n in range(cfg.min_n, cfg.max_n + 1):
        if not complete:
            break
        for g in enumerate_labelled_graphs(n):
            if deadline is not None and time.monotonic() > deadline:
                complete = False
                break
            inst = _Instance(g, ctx)
            for t in selected:
                verdict = verdicts[t.id]

                def fail(_t=t.id, _v=verdict, **params):
                    _v.record(_counterexample(g, _t, params), cfg.max_counterexamples)

                if t.scope == "graph":
                    checks[t.id](inst, None, verdict, fail)
                elif t.scope == "chromatic":
                    if inst.chi >= 1:
                        checks[t.id](inst, inst.chi, verdict, fail)
                else:
                    ks = [inst.chi] if cfg.k_policy == CHROMATIC_ONLY else range(1, cfg.max_k + 1)
                    for k in ks:
                        if k >= 1:
                            checks[t.id](inst, k, verdict, fail)
        if progress is not None:
            progress(n, cfg.max_n)
    return [verdicts[t.id].finish(complete) for t in selected]


def suite_report(verdicts: Iterable[TheoremVerdict]) -> list[dict]:
    return [v.to_json() for v in verdicts]

"""Immutable simple graphs, the four edit operations and independent sets.

Vertices are arbitrary integer labels kept in ascending order.  Internally a
graph is a tuple of neighbour bitmasks indexed by *position* (the rank of a
label), which keeps the exhaustive routines elsewhere in the package cheap.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from types import MappingProxyType

from .errors import GraphError, RefusalError

IndependentSet = frozenset
"""An independent set is represented by the frozenset of its members."""

DEFAULT_INDEPENDENT_SET_CAP = 20


def _drop_bit(mask: int, p: int) -> int:
    """Remove bit ``p`` from ``mask``, shifting the higher bits down."""
    low = mask & ((1 << p) - 1)
    return low | ((mask >> (p + 1)) << p)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph.

    Parameters
    ----------
    vertices :
        Either a vertex count ``n`` (labels ``0..n-1``) or an iterable of
        integer labels.
    edges :
        Pairs of labels.  Duplicates collapse; self-loops are rejected.
    """

    __slots__ = ("_vertices", "_pos", "_masks", "meta")

    def __init__(self, vertices: int | Iterable[int] = (), edges: Iterable[tuple[int, int]] = (),
                 meta: Mapping[str, object] | None = None):
        if isinstance(vertices, int):
            if vertices < 0:
                raise GraphError("vertex count must be non-negative")
            verts = tuple(range(vertices))
        else:
            verts = tuple(sorted(set(int(v) for v in vertices)))
        pos = {v: i for i, v in enumerate(verts)}
        masks = [0] * len(verts)
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in pos or v not in pos:
                missing = u if u not in pos else v
                raise GraphError(f"edge ({u}, {v}) uses missing vertex {missing}")
            pu, pv = pos[u], pos[v]
            masks[pu] |= 1 << pv
            masks[pv] |= 1 << pu
        self._vertices = verts
        self._pos = pos
        self._masks = tuple(masks)
        self.meta = MappingProxyType(dict(meta or {}))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> Graph:
        edges = list(edges)
        return cls({v for e in edges for v in e}, edges)

    @classmethod
    def _from_masks(cls, vertices: tuple[int, ...], masks: tuple[int, ...],
                    meta: Mapping[str, object] | None = None) -> Graph:
        g = cls.__new__(cls)
        g._vertices = vertices
        g._pos = {v: i for i, v in enumerate(vertices)}
        g._masks = masks
        g.meta = MappingProxyType(dict(meta or {}))
        return g

    # -- basic queries -----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbour bitmasks by vertex position."""
        return self._masks

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self._masks) // 2

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._pos

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise GraphError(f"vertex {v} is not in the graph") from None

    def mask_of(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self.position(v)
        return mask

    def labels(self, mask: int) -> frozenset[int]:
        return frozenset(self._vertices[p] for p in _bits(mask))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.labels(self._masks[self.position(v)])

    def degree(self, v: int) -> int:
        return self._masks[self.position(v)].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[self.position(u)] >> self.position(v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        verts = self._vertices
        return [(verts[p], verts[q])
                for p, mask in enumerate(self._masks)
                for q in _bits(mask >> (p + 1) << (p + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(self._vertices, 2) if not self.has_edge(u, v)]

    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(self._vertices, 2))

    def is_connected(self) -> bool:
        if not self._masks:
            return True
        full = (1 << self.n) - 1
        return _component(self._masks, 0) == full

    def components(self) -> list[frozenset[int]]:
        remaining = (1 << self.n) - 1
        out = []
        while remaining:
            p = (remaining & -remaining).bit_length() - 1
            comp = _component(self._masks, p)
            out.append(self.labels(comp))
            remaining &= ~comp
        return out

    def relabeled(self) -> Graph:
        """The same graph on labels ``0..n-1`` (rank order)."""
        return Graph._from_masks(tuple(range(self.n)), self._masks)

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self._vertices, self._masks))

    def __repr__(self) -> str:
        if self._vertices == tuple(range(self.n)):
            return f"Graph({self.n}, {self.edges()})"
        return f"Graph({list(self._vertices)}, {self.edges()})"


def _component(masks: tuple[int, ...], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for p in _bits(frontier):
            nxt |= masks[p]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


# -- constructors -------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- edit operations ------------------------------------------------------------

@dataclass(frozen=True)
class VertexMapping:
    """Where each vertex of an edited graph ended up (``None`` = deleted)."""

    targets: Mapping[int, int | None]

    def __getitem__(self, v: int) -> int | None:
        return self.targets[v]

    def preimage(self, w: int) -> frozenset[int]:
        return frozenset(v for v, t in self.targets.items() if t == w)

    def representative(self, w: int) -> int:
        """Lowest input vertex that maps to ``w``."""
        reps = self.__dict__.get("_reps")
        if reps is None:
            reps = {}
            for v in sorted(self.targets, reverse=True):
                t = self.targets[v]
                if t is not None:
                    reps[t] = v
            object.__setattr__(self, "_reps", reps)
        return reps[w]

    def pull_back(self, vertices: Iterable[int]) -> frozenset[int]:
        """Translate result vertices to input vertices; merged ones go to their lowest label."""
        return frozenset(self.representative(w) for w in vertices)


def _require_distinct(g: Graph, u: int, v: int) -> tuple[int, int]:
    pu, pv = g.position(u), g.position(v)
    if u == v:
        raise GraphError(f"vertex pair ({u}, {v}) would be a self-loop")
    return pu, pv


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """``G + uv``.  ``meta['idempotent']`` records whether the edge already existed."""
    pu, pv = _require_distinct(g, u, v)
    masks = list(g.masks)
    existed = bool(masks[pu] >> pv & 1)
    masks[pu] |= 1 << pv
    masks[pv] |= 1 << pu
    return Graph._from_masks(g.vertices, tuple(masks), {"idempotent": existed})


def delete_edge(g: Graph, u: int, v: int, *, missing_ok: bool = False) -> Graph:
    pu, pv = _require_distinct(g, u, v)
    if not g.masks[pu] >> pv & 1:
        if missing_ok:
            return g
        raise GraphError(f"({u}, {v}) is not an edge")
    masks = list(g.masks)
    masks[pu] &= ~(1 << pv)
    masks[pv] &= ~(1 << pu)
    return Graph._from_masks(g.vertices, tuple(masks))


def _drop_position(vertices: tuple[int, ...], masks: tuple[int, ...] | list[int], p: int):
    new_masks = tuple(_drop_bit(mask, p) for i, mask in enumerate(masks) if i != p)
    return vertices[:p] + vertices[p + 1:], new_masks


def delete_vertex(g: Graph, x: int) -> Graph:
    """``G - x``: the vertex and its incident edges go."""
    p = g.position(x)
    return Graph._from_masks(*_drop_position(g.vertices, g.masks, p))


def remove_vertices(g: Graph, xs: Iterable[int]) -> Graph:
    positions = sorted({g.position(x) for x in xs}, reverse=True)
    vertices, masks = g.vertices, g.masks
    for p in positions:
        vertices, masks = _drop_position(vertices, masks, p)
    return Graph._from_masks(vertices, masks)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = set(keep)
    return remove_vertices(g, [v for v in g.vertices if v not in keep])


def identify_vertices(g: Graph, x: int, y: int) -> tuple[Graph, VertexMapping]:
    """``G / xy``: merge ``x`` and ``y`` into the smaller label.

    The merged vertex is adjacent to ``N(x) | N(y) - {x, y}``; parallel edges
    collapse.  ``x`` and ``y`` need not be adjacent.
    """
    px, py = _require_distinct(g, x, y)
    keep, gone = (px, py) if x < y else (py, px)
    masks = list(g.masks)
    merged = (masks[keep] | masks[gone]) & ~((1 << keep) | (1 << gone))
    for q in _bits(masks[gone]):
        masks[q] |= 1 << keep
    masks[keep] = merged
    vertices, new_masks = _drop_position(g.vertices, masks, gone)
    kept_label, gone_label = g.vertices[keep], g.vertices[gone]
    targets = {v: v for v in g.vertices}
    targets[gone_label] = kept_label
    return Graph._from_masks(vertices, new_masks), VertexMapping(MappingProxyType(targets))


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, VertexMapping]:
    """``G / e`` for an edge ``e = uv``; non-edges must go through :func:`identify_vertices`."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge; use identify_vertices")
    return identify_vertices(delete_edge(g, u, v), u, v)


# -- independent sets -------------------------------------------------------------

def _independent_masks(masks: tuple[int, ...]) -> Iterator[int]:
    n = len(masks)

    def rec(start: int, current: int, blocked: int) -> Iterator[int]:
        yield current
        for p in range(start, n):
            if not blocked >> p & 1:
                yield from rec(p + 1, current | (1 << p), blocked | masks[p])

    return rec(0, 0, 0)


def enumerate_independent_sets(g: Graph, cap: int = DEFAULT_INDEPENDENT_SET_CAP) -> Iterator[IndependentSet]:
    """Every independent set once, the empty set included, in lexicographic order of member lists."""
    if g.n > cap:
        raise RefusalError(f"independent-set enumeration is capped at {cap} vertices (graph has {g.n})")
    for mask in _independent_masks(g.masks):
        yield g.labels(mask)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    mask = g.mask_of(vertices)
    return all(not (g.masks[p] & mask) for p in _bits(mask))


# -- bipartite parity -----------------------------------------------------------------

class BipartiteRelation(str, Enum):
    SAME_SIDE = "same-side"
    OPPOSITE_SIDE = "opposite-side"
    DISCONNECTED = "disconnected"
    NOT_BIPARTITE = "not-bipartite"


def _two_coloring(masks: tuple[int, ...]) -> tuple[list[int], list[int]] | None:
    """Component id and side for every position, or ``None`` when an odd cycle exists."""
    n = len(masks)
    comp = [-1] * n
    side = [0] * n
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = s
        stack = [s]
        while stack:
            p = stack.pop()
            for q in _bits(masks[p]):
                if comp[q] < 0:
                    comp[q] = s
                    side[q] = side[p] ^ 1
                    stack.append(q)
                elif side[q] == side[p]:
                    return None
    return comp, side


def bipartite_relation(g: Graph, i: int, j: int) -> BipartiteRelation:
    """Parity of the ``i``-``j`` paths in a 2-colourable graph.

    ``NOT_BIPARTITE`` wins whenever ``g`` has an odd cycle anywhere, even in a
    component not containing ``i`` or ``j``.
    """
    pi, pj = _require_distinct(g, i, j)
    coloring = _two_coloring(g.masks)
    if coloring is None:
        return BipartiteRelation.NOT_BIPARTITE
    comp, side = coloring
    if comp[pi] != comp[pj]:
        return BipartiteRelation.DISCONNECTED
    if side[pi] == side[pj]:
        return BipartiteRelation.SAME_SIDE
    return BipartiteRelation.OPPOSITE_SIDE

"""Kempe chains: extraction, flipping and the chains linking a vertex pair."""
from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring
from .errors import GraphError
from .graph import Graph, _bits


@dataclass(frozen=True)
class KempeChain:
    """Maximal connected set of vertices coloured ``c1`` or ``c2``, containing ``anchor``."""

    vertices: frozenset[int]
    colors: tuple[int, int]
    anchor: int
    graph: Graph = field(compare=False, repr=False)

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "vertices": sorted(self.vertices)}


def _color_masks(g: Graph, c: Coloring) -> dict[int, int]:
    masks: dict[int, int] = {}
    for p, v in enumerate(g.vertices):
        col = c[v]
        masks[col] = masks.get(col, 0) | (1 << p)
    return masks


def _grow(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    masks = g.masks
    while frontier:
        nxt = 0
        for p in _bits(frontier):
            nxt |= masks[p]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def kempe_chain(g: Graph, c: Coloring, v: int, c1: int, c2: int) -> KempeChain:
    if c1 == c2:
        raise GraphError("a Kempe chain needs two distinct colours")
    if c[v] not in (c1, c2):
        raise GraphError(f"vertex {v} has colour {c[v]}, neither {c1} nor {c2}")
    cm = _color_masks(g, c)
    allowed = cm.get(c1, 0) | cm.get(c2, 0)
    chain = _grow(g, g.position(v), allowed)
    return KempeChain(g.labels(chain), (c1, c2), v, g)


def kempe_chains(g: Graph, c: Coloring) -> list[KempeChain]:
    """Every chain of every colour pair, ordered by colour pair then smallest member."""
    cm = _color_masks(g, c)
    chains = []
    for c1 in range(1, c.k + 1):
        for c2 in range(c1 + 1, c.k + 1):
            remaining = allowed = cm.get(c1, 0) | cm.get(c2, 0)
            while remaining:
                p = (remaining & -remaining).bit_length() - 1
                comp = _grow(g, p, allowed)
                remaining &= ~comp
                chains.append(KempeChain(g.labels(comp), (c1, c2), g.vertices[p], g))
    return chains


def flip_chain(c: Coloring, chain: KempeChain) -> Coloring:
    """Swap the chain's two colours on its members; the result stays proper."""
    c1, c2 = chain.colors
    current = kempe_chain(chain.graph, c, chain.anchor, c1, c2) if c[chain.anchor] in (c1, c2) else None
    if current is None or current.vertices != chain.vertices:
        raise GraphError("stale chain: it is not a maximal chain of this colouring")
    swap = {c1: c2, c2: c1}
    colors = {v: (swap[col] if v in chain.vertices else col) for v, col in c.colors.items()}
    return Coloring(c.k, colors)


@dataclass(frozen=True)
class ChainReport:
    edge_chain: bool
    identity_chain_count: int | None

    def to_json(self) -> dict:
        return {"edgeChain": self.edge_chain, "identityChainCount": self.identity_chain_count}


def connecting_chain_report(g: Graph, c: Coloring, x: int, y: int) -> ChainReport:
    """How ``x`` and ``y`` are linked by Kempe chains under ``c``.

    ``edge_chain``: the colours differ and one ``(c(x), c(y))`` chain holds
    both.  ``identity_chain_count`` (only when the colours agree): how many
    other colours ``b`` put both in one ``(c(x), b)`` chain.
    """
    cm = _color_masks(g, c)
    px, py = g.position(x), g.position(y)
    cx, cy = c[x], c[y]
    if cx != cy:
        chain = _grow(g, px, cm.get(cx, 0) | cm.get(cy, 0))
        return ChainReport(bool(chain >> py & 1), None)
    count = 0
    for b in range(1, c.k + 1):
        if b == cx:
            continue
        chain = _grow(g, px, cm.get(cx, 0) | cm.get(b, 0))
        if chain >> py & 1:
            count += 1
    return ChainReport(False, count)

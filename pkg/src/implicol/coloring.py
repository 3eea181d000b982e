"""Exact k-colouring: decision, counting, enumeration and chromatic number.

Colours are ``1..k`` at the public surface and ``0..k-1`` inside the search
routines.  Only the decision search breaks colour symmetry; counting and
enumeration work with labelled colourings because chromatic polynomials count
those.
"""
from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass

from .errors import GraphError, PreconditionError, RefusalError
from .graph import Graph, IndependentSet, _bits, _component, enumerate_independent_sets, remove_vertices

DEFAULT_ENUMERATION_BUDGET = 10**7


@dataclass(frozen=True, eq=True)
class Coloring:
    """A total vertex -> colour assignment with colours drawn from ``1..k``."""

    k: int
    colors: Mapping[int, int]

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __hash__(self) -> int:
        return hash((self.k, tuple(sorted(self.colors.items()))))

    def classes(self) -> tuple[frozenset[int], ...]:
        """Colour classes indexed by colour - 1; unused colours give empty classes."""
        buckets: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in self.colors.items():
            buckets[c - 1].add(v)
        return tuple(frozenset(b) for b in buckets)

    def is_proper(self, g: Graph) -> bool:
        if set(self.colors) != set(g.vertices):
            return False
        if any(not 1 <= c <= self.k for c in self.colors.values()):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def to_json(self) -> dict:
        return {"k": self.k, "colors": {str(v): c for v, c in sorted(self.colors.items())}}

    @classmethod
    def from_json(cls, data: dict) -> Coloring:
        return cls(int(data["k"]), {int(v): int(c) for v, c in data["colors"].items()})


def _wrap(g: Graph, k: int, colors: list[int]) -> Coloring:
    return Coloring(k, {v: colors[p] + 1 for p, v in enumerate(g.vertices)})


def _check_k(k: int) -> None:
    if k < 0:
        raise GraphError(f"number of colours must be non-negative, got {k}")


# -- decision ---------------------------------------------------------------------

def _first_coloring(masks: tuple[int, ...], k: int) -> list[int] | None:
    n = len(masks)
    if n == 0:
        return []
    if k <= 0:
        return None
    order = sorted(range(n), key=lambda p: (-masks[p].bit_count(), p))
    classes = [0] * k
    colors = [-1] * n
    palette = range(k)
    uncolored = (1 << n) - 1

    def rec(idx: int, used: int) -> bool:
        nonlocal uncolored
        if idx == n:
            return True
        p = order[idx]
        nb = masks[p]
        bit = 1 << p
        uncolored &= ~bit
        # colours above ``used`` are interchangeable: try only the first of them
        for c in range(min(used + 1, k)):
            if classes[c] & nb:
                continue
            classes[c] |= bit
            dead = False
            for q in _bits(nb & uncolored):
                nq = masks[q]
                if all(classes[d] & nq for d in palette):
                    dead = True
                    break
            if not dead:
                colors[p] = c
                if rec(idx + 1, max(used, c + 1)):
                    return True
            classes[c] &= ~bit
        uncolored |= bit
        return False

    return colors if rec(0, 0) else None


def find_k_coloring(g: Graph, k: int) -> Coloring | None:
    """A proper k-colouring of ``g``, or ``None``.  Deterministic for a given input."""
    _check_k(k)
    colors = _first_coloring(g.masks, k)
    return None if colors is None else _wrap(g, k, colors)


def is_k_colorable(g: Graph, k: int) -> bool:
    _check_k(k)
    return _first_coloring(g.masks, k) is not None


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = 1
    while _first_coloring(g.masks, k) is None:
        k += 1
    return k


# -- counting -----------------------------------------------------------------------

def _search_order(masks: tuple[int, ...], component: int) -> list[int]:
    """Maximum-cardinality search: each next vertex has the most already-placed neighbours."""
    members = list(_bits(component))
    placed = 0
    order = []
    while len(order) < len(members):
        p = max((q for q in members if not placed >> q & 1),
                key=lambda q: ((masks[q] & placed).bit_count(), masks[q].bit_count(), -q))
        order.append(p)
        placed |= 1 << p
    return order


def _count_component(masks: tuple[int, ...], order: list[int], k: int) -> int:
    earlier = []
    seen = 0
    for p in order:
        earlier.append(list(_bits(masks[p] & seen)))
        seen |= 1 << p
    last = len(order) - 1
    colors = [0] * len(masks)

    def rec(idx: int) -> int:
        forbidden = 0
        for q in earlier[idx]:
            forbidden |= 1 << colors[q]
        if idx == last:
            return k - forbidden.bit_count()
        p = order[idx]
        total = 0
        for c in range(k):
            if not forbidden >> c & 1:
                colors[p] = c
                total += rec(idx + 1)
        return total

    return rec(0)


def _count(masks: tuple[int, ...], k: int) -> int:
    n = len(masks)
    if n == 0:
        return 1
    if k <= 0:
        return 0
    total = 1
    remaining = (1 << n) - 1
    while remaining and total:
        start = (remaining & -remaining).bit_length() - 1
        comp = _component(masks, start)
        remaining &= ~comp
        total *= _count_component(masks, _search_order(masks, comp), k)
    return total


def count_k_colorings(g: Graph, k: int) -> int:
    """Number of proper colourings ``V -> {1..k}`` (labelled, no symmetry reduction)."""
    _check_k(k)
    return _count(g.masks, k)


# -- enumeration ------------------------------------------------------------------------

def _enumerate(masks: tuple[int, ...], k: int) -> Iterator[list[int]]:
    n = len(masks)
    colors = [0] * n

    def rec(p: int) -> Iterator[list[int]]:
        if p == n:
            yield colors
            return
        forbidden = 0
        for q in _bits(masks[p] & ((1 << p) - 1)):
            forbidden |= 1 << colors[q]
        for c in range(k):
            if not forbidden >> c & 1:
                colors[p] = c
                yield from rec(p + 1)

    return rec(0)


def _enumerate_canonical(masks: tuple[int, ...], k: int) -> Iterator[list[int]]:
    """One colouring per colour renaming: a vertex may open at most the next unused colour."""
    n = len(masks)
    colors = [0] * n

    def rec(p: int, used: int) -> Iterator[list[int]]:
        if p == n:
            yield colors
            return
        forbidden = 0
        for q in _bits(masks[p] & ((1 << p) - 1)):
            forbidden |= 1 << colors[q]
        for c in range(min(used + 1, k)):
            if not forbidden >> c & 1:
                colors[p] = c
                yield from rec(p + 1, max(used, c + 1))

    return rec(0, 0)


def enumerate_k_colorings(g: Graph, k: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Iterator[Coloring]:
    """Every proper k-colouring once, in lexicographic order of the colour vector."""
    _check_k(k)
    if k ** g.n > budget:
        raise RefusalError(f"k^n = {k}^{g.n} exceeds the enumeration budget {budget}")
    return (_wrap(g, k, colors) for colors in _enumerate(g.masks, k))


# -- critical independent sets -------------------------------------------------------------

def critical_independent_sets(g: Graph, k: int) -> Iterator[IndependentSet]:
    """Independent sets whose removal leaves a (k-1)-chromatic graph.

    Only defined for k-chromatic ``g``; these are exactly the colour classes
    of the k-colourings of ``g``.
    """
    chi = chromatic_number(g)
    if chi != k:
        raise PreconditionError(f"graph is {chi}-chromatic, not {k}-chromatic")
    for s in enumerate_independent_sets(g):
        if chromatic_number(remove_vertices(g, s)) == k - 1:
            yield s

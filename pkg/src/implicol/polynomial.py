"""Chromatic polynomials by memoised deletion-contraction."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import GraphError, RefusalError
from .graph import Graph, _bits, _drop_bit, add_edge, contract_edge, delete_edge, identify_vertices

DEFAULT_POLYNOMIAL_CAP = 16
_CACHE_LIMIT = 500_000

# canonical key -> coefficient tuple; insert-only, so concurrent writers can at
# worst duplicate work
_cache: dict[tuple, tuple[int, ...]] = {}


@dataclass(frozen=True)
class ChromaticPolynomial:
    """Integer polynomial in k; ``coefficients[i]`` multiplies ``k**i``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs) or (0,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, k: int) -> int:
        return evaluate(self, k)

    def __add__(self, other: ChromaticPolynomial) -> ChromaticPolynomial:
        return ChromaticPolynomial(_combine(self.coefficients, other.coefficients, 1))

    def __sub__(self, other: ChromaticPolynomial) -> ChromaticPolynomial:
        return ChromaticPolynomial(_combine(self.coefficients, other.coefficients, -1))

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = {0: str(mag), 1: "k"}.get(power, f"k^{power}")
            if power and mag != 1:
                body = f"{mag}{body}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(f" {s} {b}" for s, b in terms[1:])

    def to_json(self) -> dict:
        return {"degree": self.degree, "coefficients": [str(c) for c in self.coefficients]}

    @classmethod
    def from_json(cls, data: dict) -> ChromaticPolynomial:
        return cls(tuple(int(c) for c in data["coefficients"]))


def _combine(a: tuple[int, ...], b: tuple[int, ...], sign: int) -> tuple[int, ...]:
    size = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(size))


def evaluate(p: ChromaticPolynomial, k: int) -> int:
    """Exact value at integer ``k`` (Horner)."""
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    value = 0
    for c in reversed(p.coefficients):
        value = value * k + c
    return value


def falling_factorial(n: int) -> ChromaticPolynomial:
    """``k (k-1) ... (k-n+1)``, the chromatic polynomial of ``K_n``."""
    coeffs = [1]
    for i in range(n):
        # multiply by (k - i)
        nxt = [0] * (len(coeffs) + 1)
        for power, c in enumerate(coeffs):
            nxt[power + 1] += c
            nxt[power] -= i * c
        coeffs = nxt
    return ChromaticPolynomial(tuple(coeffs))


def _canonical(masks: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel by (degree, sorted neighbour degrees), ties by position.

    Not a complete isomorphism invariant: equal keys imply isomorphic graphs,
    but isomorphic graphs can get different keys (a cache miss, nothing worse).
    """
    n = len(masks)
    deg = [m.bit_count() for m in masks]
    sig = [(deg[p], tuple(sorted(deg[q] for q in _bits(masks[p]))), p) for p in range(n)]
    order = [s[2] for s in sorted(sig)]
    new_pos = [0] * n
    for new, old in enumerate(order):
        new_pos[old] = new
    relabeled = []
    for old in order:
        mask = 0
        for q in _bits(masks[old]):
            mask |= 1 << new_pos[q]
        relabeled.append(mask)
    return tuple(relabeled)


def _merge(masks: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Contract edge ``uv`` (u < v) on position masks; u survives."""
    lst = list(masks)
    lst[u] &= ~(1 << v)
    lst[v] &= ~(1 << u)
    for q in _bits(lst[v]):
        lst[q] |= 1 << u
    lst[u] |= lst[v]
    del lst[v]
    return tuple(_drop_bit(m, v) for m in lst)


def _poly(masks: tuple[int, ...]) -> tuple[int, ...]:
    n = len(masks)
    degrees = [m.bit_count() for m in masks]
    if not any(degrees):
        return (0,) * n + (1,)
    if all(d == n - 1 for d in degrees):
        return falling_factorial(n).coefficients
    isolated = degrees.count(0)
    if isolated:
        # each isolated vertex multiplies by k
        core = tuple(_drop_isolated(masks, degrees))
        return (0,) * isolated + _poly(core)
    key = _canonical(masks)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    # the edge whose endpoints share most neighbours collapses most edges on contraction
    best = None
    for u in range(n):
        for v in _bits(masks[u] >> (u + 1) << (u + 1)):
            shared = (masks[u] & masks[v]).bit_count()
            if best is None or shared > best[0]:
                best = (shared, u, v)
    _, u, v = best
    deleted = list(masks)
    deleted[u] &= ~(1 << v)
    deleted[v] &= ~(1 << u)
    result = _combine(_poly(tuple(deleted)), _poly(_merge(masks, u, v)), -1)
    while len(result) > 1 and result[-1] == 0:
        result = result[:-1]
    if len(_cache) >= _CACHE_LIMIT:
        _cache.clear()
    _cache[key] = result
    return result


def _drop_isolated(masks, degrees):
    keep = [p for p, d in enumerate(degrees) if d]
    index = {p: i for i, p in enumerate(keep)}
    for p in keep:
        mask = 0
        for q in _bits(masks[p]):
            mask |= 1 << index[q]
        yield mask


def chromatic_polynomial(g: Graph, cap: int = DEFAULT_POLYNOMIAL_CAP) -> ChromaticPolynomial:
    """``P(G, k)`` via ``P(G) = P(G - e) - P(G / e)`` down to edgeless graphs."""
    if g.n > cap:
        raise RefusalError(f"chromatic polynomial is capped at {cap} vertices (graph has {g.n})")
    return ChromaticPolynomial(_poly(g.masks))


def check_deletion_contraction(g: Graph, u: int, v: int) -> bool:
    """``P(G) == P(G - e) - P(G / e)`` for the edge ``e = uv``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    contracted, _ = contract_edge(g, u, v)
    return chromatic_polynomial(g) == chromatic_polynomial(delete_edge(g, u, v)) - chromatic_polynomial(contracted)


def check_addition_contraction(g: Graph, u: int, v: int) -> bool:
    """``P(G) == P(G + e) + P(G / e)`` for the non-edge ``e = uv``."""
    if g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is already an edge")
    identified, _ = identify_vertices(g, u, v)
    return chromatic_polynomial(g) == chromatic_polynomial(add_edge(g, u, v)) + chromatic_polynomial(identified)


def tree_polynomial(n: int) -> ChromaticPolynomial:
    """``k (k-1)^(n-1)``."""
    if n == 0:
        return ChromaticPolynomial((1,))
    coeffs = [0] * (n + 1)
    for i in range(n):
        coeffs[i + 1] = comb(n - 1, i) * (-1) ** (n - 1 - i)
    return ChromaticPolynomial(tuple(coeffs))

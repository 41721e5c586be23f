"""Spanning trees, spanning 2-forests and resistances of grid graphs.

Grid graphs G_k(n) have vertices v(i, j), 1 <= i <= k, 1 <= j <= n,
numbered column-major as (j - 1) * k + i.  Edges inside a column (i changes)
are tagged ``vertical``; edges between columns (j changes) ``horizontal``.
Counts come from the Matrix Tree Theorem; generating functions in t (and in
the vertical-edge weight v) are guessed from enough exact terms and
self-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .exact import Poly, RatFunc, series_coeffs
from .guess import c_to_r, guess_rec
from .linalg import determinant, minor

VERTICAL = "vertical"
HORIZONTAL = "horizontal"


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: Tuple[Tuple[int, int, str], ...]

    def __post_init__(self):
        for u, v, _ in self.edges:
            if not 1 <= u < v <= self.vertex_count:
                raise ValueError(f"bad edge ({u}, {v}) for {self.vertex_count} vertices")

    def edge_set(self):
        return {(u, v) for u, v, _ in self.edges}


def grid_graph(k: int, n: int) -> Graph:
    if k < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for j in range(1, n + 1):
        for i in range(1, k + 1):
            me = (j - 1) * k + i
            if i < k:
                edges.append((me, me + 1, VERTICAL))
            if j < n:
                edges.append((me, me + k, HORIZONTAL))
    return Graph(k * n, tuple(sorted(edges)))


def product_with_path(g: Graph, n: int) -> Graph:
    """Cartesian product G x P_n as n layers of G.

    Edges inside a layer keep the role of G's edges and are tagged
    ``vertical``; the edges joining consecutive layers are ``horizontal``,
    so K_2 x P_n coincides with grid_graph(2, n) including tags.
    """
    if n < 1:
        raise ValueError("path length must be positive")
    m = g.vertex_count
    edges = []
    for layer in range(n):
        base = layer * m
        for u, v, _ in g.edges:
            edges.append((base + u, base + v, VERTICAL))
        if layer + 1 < n:
            for u in range(1, m + 1):
                edges.append((base + u, base + m + u, HORIZONTAL))
    return Graph(m * n, tuple(sorted(edges)))


def laplacian(g: Graph, weights: Optional[Dict[str, object]] = None):
    """Weighted Laplacian; ``weights`` maps edge tags to weights (default 1)."""
    weights = weights or {}
    n = g.vertex_count
    L = [[0] * n for _ in range(n)]
    for u, v, tag in g.edges:
        w = weights.get(tag, 1)
        a, b = u - 1, v - 1
        L[a][a] = L[a][a] + w
        L[b][b] = L[b][b] + w
        L[a][b] = L[a][b] - w
        L[b][a] = L[b][a] - w
    return L


def spanning_tree_count(g: Graph, weights: Optional[Dict[str, object]] = None):
    """Number (or weight enumerator) of spanning trees."""
    if g.vertex_count == 1:
        return 1
    L = laplacian(g, weights)
    last = g.vertex_count - 1
    return determinant(minor(L, [last], [last]))


def two_forest_count(g: Graph, u: int, v: int, weights: Optional[Dict[str, object]] = None):
    """Spanning forests with two trees, one containing u and the other v."""
    if u == v:
        raise ValueError("the two marked vertices must differ")
    if not (1 <= u <= g.vertex_count and 1 <= v <= g.vertex_count):
        raise ValueError("marked vertex out of range")
    if g.vertex_count == 2:
        return 1
    L = laplacian(g, weights)
    return determinant(minor(L, [u - 1, v - 1], [u - 1, v - 1]))


def joint_resistance(k: int, n: int) -> Fraction:
    """Effective resistance between opposite corners v(1,1), v(k,n) of G_k(n)."""
    if k * n < 2:
        raise ValueError("need at least two vertices")
    g = grid_graph(k, n)
    return Fraction(two_forest_count(g, 1, k * n), spanning_tree_count(g))


def resistance_bound_constant(k: int) -> Fraction:
    """C(k) = 2 * sum_{j=1}^{k-1} (j/k)^2.

    For n >= 2, (n-1)/k <= joint_resistance(k, n) <= (n-1)/k + C(k): shorting
    the vertical edges gives the lower bound, and sending 1/k of the current
    along each row gives the upper one, C(k) being the energy spent in the
    two end columns.
    """
    return 2 * sum((Fraction(j, k) ** 2 for j in range(1, k)), Fraction(0))


def spanning_count_grid(k: int, n: int) -> int:
    """s(k, n): spanning trees of G_k(n), with s(k, 0) = 0."""
    if n == 0:
        return 0
    return spanning_tree_count(grid_graph(k, n))


def two_forest_count_grid(k: int, n: int) -> int:
    """Two-forests separating v(1,1) and v(k,n); zero when they coincide or n = 0."""
    if n == 0 or k * n == 1:
        return 0
    return two_forest_count(grid_graph(k, n), 1, k * n)


def vertical_weighted_count(k: int, n: int) -> Poly:
    """Spanning-tree enumerator of G_k(n) by number of vertical edges (in v)."""
    if n == 0:
        return Poly([], "v")
    v = Poly.x("v")
    w = spanning_tree_count(grid_graph(k, n), {VERTICAL: v, HORIZONTAL: Poly([1], "v")})
    return Poly.lift(w, "v")


def _guess_gf(term, start_count: int, symmetric: bool, max_count: int = 400) -> RatFunc:
    # grow the window geometrically until a recurrence is found and the
    # resulting generating function reproduces every computed term
    count = start_count
    seq = []
    while count <= max_count:
        seq.extend(term(n) for n in range(len(seq), count))
        spec = guess_rec(seq, symmetric=symmetric) if symmetric else None
        if spec is None:
            spec = guess_rec(seq)
        if spec is not None:
            f = c_to_r(spec)
            if f is not None and _matches(f, seq):
                return f
        count *= 2
    raise RuntimeError("no rational generating function found within the term budget")


def _matches(f: RatFunc, seq) -> bool:
    return all(a == b for a, b in zip(series_coeffs(f, len(seq)), seq))


def gf_spanning_grid(k: int, symmetric: bool = True) -> RatFunc:
    """F_k(t) = sum_{n>=0} s(k, n) t^n."""
    if k < 1:
        raise ValueError("k must be positive")
    return _guess_gf(lambda n: spanning_count_grid(k, n), 2 * 2 ** (k - 1) + 6, symmetric)


def gf_two_forest_grid(k: int) -> RatFunc:
    """S_k(t) = sum_{n>=0} SF(k, n) t^n for the corner-to-corner two-forests."""
    if k < 1:
        raise ValueError("k must be positive")
    return _guess_gf(lambda n: two_forest_count_grid(k, n), 2 * 2 ** (k - 1) + 6, False)


def ver_gf(k: int, symmetric: bool = True) -> RatFunc:
    """g_k(v, t) = sum_{n>=0} Ver_{k,n}(v) t^n as a rational function in t over Q(v)."""
    if k < 1:
        raise ValueError("k must be positive")
    return _guess_gf(lambda n: vertical_weighted_count(k, n), 2 * 2 ** (k - 1) + 6, symmetric)


def specialize_v(f: RatFunc, value) -> RatFunc:
    """Substitute a scalar for the inner variable of a bivariate rational function."""
    num = Poly([c(value) if isinstance(c, Poly) else c for c in f.numer.coeffs], f.numer.var)
    den = Poly([c(value) if isinstance(c, Poly) else c for c in f.denom.coeffs], f.denom.var)
    return RatFunc(num, den)


def vertical_moments(k: int, n: int, r: int) -> list:
    """First r raw moments of the number of vertical edges in a uniform spanning tree."""
    p = vertical_weighted_count(k, n)
    total = p(1)
    out = []
    for m in range(1, r + 1):
        out.append(Fraction(sum(c * i ** m for i, c in enumerate(p.coeffs)), total))
    return out

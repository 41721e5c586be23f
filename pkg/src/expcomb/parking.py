"""Parking functions: counting, sum/area statistics, moments, forests.

An a-parking function of length n is a vector of positive integers whose
sorted version satisfies p_(i) <= a + i - 1.  Everything is driven by the
recurrence on the number k of ones,

    p(n, a) = sum_k C(n, k) p(n - k, a + k - 1),   p(0, a) = 1, p(n, 0) = 0,

and its weighted versions for the sum and area statistics.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .exact import Poly
from .guess import ansatz_fit

ENUMERATION_CAP = 10 ** 7


@dataclass(frozen=True)
class LabeledForest:
    """Rooted forest with roots 1..a and non-roots a+1..a+n."""

    a: int
    n: int
    parent: Dict[int, int]

    def __post_init__(self):
        labels = set(range(self.a + 1, self.a + self.n + 1))
        if set(self.parent) != labels:
            raise ValueError("parent map must cover exactly the non-root vertices")
        for v, p in self.parent.items():
            if not 1 <= p <= self.a + self.n or p == v:
                raise ValueError(f"bad parent {p} for vertex {v}")
        for v in labels:
            seen = set()
            while v > self.a:
                if v in seen:
                    raise ValueError("parent map has a cycle")
                seen.add(v)
                v = self.parent[v]

    def children(self) -> Dict[int, List[int]]:
        out = {v: [] for v in range(1, self.a + self.n + 1)}
        for v, p in sorted(self.parent.items()):
            out[p].append(v)
        return out


def is_a_parking(p: Sequence[int], a: int) -> bool:
    return all(x <= a + i for i, x in enumerate(sorted(p))) and all(x >= 1 for x in p)


@lru_cache(maxsize=None)
def count_parking(n: int, a: int) -> int:
    """p(n, a) from the recurrence on the number of ones."""
    if n < 0 or a < 0:
        raise ValueError("n and a must be non-negative")
    if n == 0:
        return 1
    if a == 0:
        return 0
    return sum(math.comb(n, k) * count_parking(n - k, a + k - 1) for k in range(n + 1))


def enumerate_parking(n: int, a: int) -> List[Tuple[int, ...]]:
    """All a-parking functions of length n by brute force, in lexicographic order."""
    top = n + a - 1
    if top ** n > ENUMERATION_CAP:
        raise ValueError(f"{top}^{n} candidate vectors exceed the enumeration cap {ENUMERATION_CAP}")
    if n == 0:
        return [()]
    return [p for p in itertools.product(range(1, top + 1), repeat=n) if is_a_parking(p, a)]


def max_statistic(n: int, a: int) -> int:
    """n(2a + n - 1)/2: the largest possible sum, and Area = this - Sum."""
    return n * (2 * a + n - 1) // 2


# ---------------------------------------------------------------- statistics
#
# Polynomials are kept as numpy object arrays of Python ints so the many
# shifted additions run in C while staying exact.


def _weighted_table(n: int, a: int, shift) -> Dict[Tuple[int, int], np.ndarray]:
    # memo over every (m, b) reachable from (n, a); b grows as ones are removed
    memo: Dict[Tuple[int, int], np.ndarray] = {}
    one = np.array([1], dtype=object)
    zero = np.array([0], dtype=object)

    def get(m, b):
        key = (m, b)
        if key in memo:
            return memo[key]
        if m == 0:
            return one
        if b == 0:
            return zero
        raise KeyError(key)

    # fill by increasing m so every dependency (m - k <= m) is ready; within a
    # fixed m the k = 0 term needs (m, b - 1), so b increases too
    for m in range(1, n + 1):
        for b in range(1, a + n - m + 1):
            parts = []
            for k in range(m + 1):
                sub = get(m - k, b + k - 1) if k else get(m, b - 1)
                if len(sub) == 1 and sub[0] == 0:
                    continue
                parts.append((shift(m, b, k), math.comb(m, k), sub))
            size = max(s + len(q) for s, _, q in parts)
            acc = np.zeros(size, dtype=object)
            for s, c, q in parts:
                acc[s:s + len(q)] += c * q
            memo[(m, b)] = acc
    return memo


@lru_cache(maxsize=64)
def _area_coeffs(n: int, a: int) -> Tuple[int, ...]:
    if n == 0:
        return (1,)
    if a == 0:
        return (0,)
    table = _weighted_table(n, a, lambda m, b, k: k * (k + 2 * b - 3) // 2)
    return tuple(int(x) for x in table[(n, a)])


@lru_cache(maxsize=64)
def _sum_coeffs(n: int, a: int) -> Tuple[int, ...]:
    if n == 0:
        return (1,)
    if a == 0:
        return (0,)
    table = _weighted_table(n, a, lambda m, b, k: m)
    return tuple(int(x) for x in table[(n, a)])


def area_gf(n: int, a: int) -> Poly:
    """Q(n, a)(x) = sum over a-parking functions of x^Area."""
    return Poly(list(_area_coeffs(n, a)), "x")


def sum_gf(n: int, a: int) -> Poly:
    """P(n, a)(x) = sum over a-parking functions of x^Sum."""
    return Poly(list(_sum_coeffs(n, a)), "x")


def reflect(q: Poly, n: int, a: int) -> Poly:
    """x^{n(2a+n-1)/2} q(1/x), which swaps the sum and area enumerators."""
    top = max_statistic(n, a)
    coeffs = [0] * (top + 1)
    for s, c in enumerate(q.coeffs):
        coeffs[top - s] = c
    return Poly(coeffs, q.var)


def expectation_sum(n: int, a: int) -> Fraction:
    """E_sum(n, a) = n(a+n+1)/2 - (1/2) sum_{j=1}^n n!/((n-j)! (a+n)^{j-1})."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(n * (a + n + 1), 2) - _falling_sum(n, a) / 2


def e_area(n: int, a: int = 1) -> Fraction:
    """E_area(n, a) = n(a-2)/2 + (1/2) sum_{j=1}^n n!/((n-j)! (a+n)^{j-1})."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(n * (a - 2), 2) + _falling_sum(n, a) / 2


def _falling_sum(n: int, a: int) -> Fraction:
    # sum_j n^(j falling) / (a+n)^(j-1) over the common denominator (a+n)^(n-1)
    m = a + n
    num, fall = 0, 1
    for j in range(1, n + 1):
        fall *= n - j + 1
        num += fall * m ** (n - j)
    return Fraction(num, m ** (n - 1))


def w_value(n: int) -> Fraction:
    """W_n = n!/n^{n-1} sum_{k=0}^{n-2} n^k/k!."""
    if n < 1:
        raise ValueError("n must be positive")
    # n! / k! = falling product, so everything stays integral until the end
    num = sum(math.perm(n, n - k) * n ** k for k in range(n - 1))
    return Fraction(num, n ** (n - 1))


def factorial_moment(k: int, n: int, a: int = 1) -> Fraction:
    """E_k(n, a) = Q^{(k)}(n, a)(1) / p(n, a)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    coeffs = _area_coeffs(n, a)
    total = sum(coeffs)
    if total == 0:
        raise ValueError("no parking functions for these parameters")
    acc = sum(c * math.perm(s, k) for s, c in enumerate(coeffs) if s >= k)
    return Fraction(acc, total)


def moment_basis_na(deg_n: int, deg_a: int, with_a: bool) -> list:
    """Basis n^i a^j and n^i a^j E_1(n, a) for fitting factorial moments."""
    basis = []
    a_range = range(deg_a + 1) if with_a else range(1)
    for use_e in (False, True):
        for i in range(deg_n + 1):
            for j in a_range:
                label = "*".join(x for x in (f"n^{i}" if i else "", f"a^{j}" if j else "", "E1" if use_e else "") if x) or "1"
                basis.append((label, _monomial(i, j, use_e)))
    return basis


def _monomial(i, j, use_e):
    def f(point):
        n, a = point
        v = Fraction(n) ** i * Fraction(a) ** j
        return v * e_area(n, a) if use_e else v
    return f


def fit_moment_expression(k: int, a_range: Sequence[int], n_range: Sequence[int],
                          deg_n: int | None = None, deg_a: int | None = None,
                          skip: int = 2, holdout: int = 3) -> dict:
    """Find A_k, B_k with E_k(n, a) = A_k(n, a) + B_k(n, a) E_1(n, a).

    Returns {monomial label: coefficient}; labels containing ``E1`` belong
    to B_k.  The first ``skip`` values of n are dropped for every a.
    """
    deg_n = 2 * k if deg_n is None else deg_n
    deg_a = 2 * k if deg_a is None else deg_a
    a_vals = list(a_range)
    basis = moment_basis_na(deg_n, deg_a, len(a_vals) > 1)
    ns = list(n_range)[skip:]
    data = [((n, a), factorial_moment(k, n, a)) for n in ns for a in a_vals]
    fit = ansatz_fit(data, basis, skip=0, holdout=holdout)
    if fit is None:
        raise ValueError("no consistent fit; raise the degree bounds or add data")
    return {label: c for label, c in fit.items() if c}


# ---------------------------------------------------------------- bijection


def parking_to_forest(p: Sequence[int], a: int) -> LabeledForest:
    """Map an a-parking function to a rooted forest on 1..a+n with roots 1..a.

    Vertex a+i carries value p_i.  Sorting the values gives the forest in
    which a+i hangs below the i-th smallest value; the sort order of the
    vertices (ties by label) then relabels it.
    """
    if not is_a_parking(p, a):
        raise ValueError(f"{tuple(p)} is not a {a}-parking function")
    n = len(p)
    order = sorted(range(n), key=lambda i: (p[i], i))
    relabel = {v: v for v in range(1, a + 1)}
    for pos, i in enumerate(order):
        relabel[a + pos + 1] = a + i + 1
    sorted_vals = [p[i] for i in order]
    parent = {relabel[a + pos + 1]: relabel[v] for pos, v in enumerate(sorted_vals)}
    return LabeledForest(a, n, parent)


def forest_to_parking(f: LabeledForest) -> Tuple[int, ...]:
    """Inverse map: index vertices level by level, roots first, siblings
    increasing, and read off the index of each vertex's parent."""
    kids = f.children()
    index = {}
    queue = deque(range(1, f.a + 1))
    while queue:
        v = queue.popleft()
        index[v] = len(index) + 1
        queue.extend(sorted(kids[v]))
    return tuple(index[f.parent[v]] for v in range(f.a + 1, f.a + f.n + 1))


def count_forests(n: int, a: int) -> int:
    """a(a+n)^{n-1}: rooted forests on a+n vertices with roots 1..a."""
    if n == 0:
        return 1
    return a * (a + n) ** (n - 1)


# ---------------------------------------------------------------- export


def distribution_rows(n: int, a: int = 1) -> Tuple[List[Tuple[int, int]], List[Tuple[float, float]]]:
    """(area, count) rows for every possible area, and the scaled rows
    ((area - mean)/sd, probability * sd), a density on the z-scale."""
    coeffs = list(_area_coeffs(n, a))
    top = n * (2 * a + n - 3) // 2 if n else 0
    coeffs += [0] * (top + 1 - len(coeffs))
    raw = list(enumerate(coeffs))
    total = sum(coeffs)
    mean = Fraction(sum(s * c for s, c in raw), total)
    var = Fraction(sum(s * s * c for s, c in raw), total) - mean ** 2
    sd = math.sqrt(var) if var else 0.0
    scaled = []
    if sd:
        for s, c in raw:
            scaled.append(((s - float(mean)) / sd, c / total * sd))
    return raw, scaled


def distribution_export(n: int, a: int = 1, scaled: bool = False) -> str:
    """CSV text: "statistic,count" rows or, with ``scaled``, "z,density" rows."""
    raw, sc = distribution_rows(n, a)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if scaled:
        w.writerow(["z", "density"])
        w.writerows((f"{z:.12g}", f"{d:.12g}") for z, d in sc)
    else:
        w.writerow(["statistic", "count"])
        w.writerows(raw)
    return buf.getvalue()

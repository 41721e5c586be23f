"""Exact distributions of comparisons and swaps for Quicksort variants.

Each variant is a recurrence for the probability generating function
P_n(t) in terms of P_m, m < n.  The same recurrence is run either on full
polynomials in t or on power series in w = t - 1 truncated at order r; the
coefficient of w^j in the latter is E[(X)_j] / j!, so the truncated route
gives the first r factorial moments far more cheaply.

Variants and their per-step weights:

* 1-pivot with a pivot rank k, uniform unless noted:
  NullaComparisons t^{n-1}; SwapI t^{k-1}; SwapII (1/n) sum_i per_prob(n,k,i);
  SwapIII t^k; SwapIV ip_prob(n,k); SwapV ip_prob(n,k) with pivot law
  pivot_dist_v5(n) for the top-level partition only, the two sublists then
  being sorted as in SwapIV.
* k pivots, written as a sum over the gap sizes g_1..g_{k+1} of the
  sublists: DualComparisons, DualSwaps, ThreePivotComparisons and
  KPivotLinear(k).  Each gap contributes P_{g_s} t^{c_s g_s}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exact import Poly
from .guess import ansatz_fit, evaluate_fit, moment_basis


@dataclass(frozen=True)
class Variant:
    name: str
    k: int = 1

    def __str__(self):
        return f"{self.name}({self.k})" if self.name == "KPivotLinear" else self.name


NULLA = Variant("NullaComparisons")
SWAP_I = Variant("SwapI")
SWAP_II = Variant("SwapII")
SWAP_III = Variant("SwapIII")
SWAP_IV = Variant("SwapIV")
SWAP_V = Variant("SwapV")
DUAL = Variant("DualComparisons", 2)
DUAL_SWAPS = Variant("DualSwaps", 2)
THREE_PIVOT = Variant("ThreePivotComparisons", 3)

_ONE_PIVOT = {v.name: v for v in (NULLA, SWAP_I, SWAP_II, SWAP_III, SWAP_IV, SWAP_V)}
_MULTI = {v.name: v for v in (DUAL, DUAL_SWAPS, THREE_PIVOT)}
VARIANT_NAMES = sorted(_ONE_PIVOT) + sorted(_MULTI) + ["KPivotLinear"]


def k_pivot_linear(k: int) -> Variant:
    if k < 1:
        raise ValueError("need at least one pivot")
    return Variant("KPivotLinear", k)


def _alias_table() -> Dict[str, Variant]:
    out = {}
    for v in list(_ONE_PIVOT.values()) + list(_MULTI.values()):
        out[v.name.lower()] = v
        out[v.name.lower().replace("comparisons", "")] = v
    for i, v in enumerate((SWAP_I, SWAP_II, SWAP_III, SWAP_IV, SWAP_V), 1):
        out[f"swap{i}"] = v
    return out


def variant_by_name(name: str) -> Variant:
    """Parse a variant name such as "SwapIV", "swap4", "dual", "three-pivot"
    or "KPivotLinear:4" (case, '-' and '_' are ignored)."""
    base, _, arg = name.partition(":")
    key = base.replace("-", "").replace("_", "").lower()
    if key in ("kpivotlinear", "kpivot"):
        if not arg:
            raise ValueError("KPivotLinear needs a pivot count, e.g. KPivotLinear:4")
        return k_pivot_linear(int(arg))
    table = _alias_table()
    if key in table and not arg:
        return table[key]
    raise ValueError(f"unknown variant {name!r}; choose from {', '.join(VARIANT_NAMES)}")


# ------------------------------------------------------------ building blocks


def per_prob(n: int, k: int, i: int) -> Poly:
    """Swaps in one SwapII partition given pivot index i and pivot rank k."""
    if not (1 <= k <= n and 1 <= i <= n):
        raise ValueError("need 1 <= k, i <= n")
    coeffs: Dict[int, Fraction] = {}
    for j in range(max(k - 1 - n + i, 0), min(i - 1, k - 1) + 1):
        p = Fraction(math.comb(i - 1, j))
        for s in range(j):
            p *= Fraction(k - 1 - s, n - 1 - s)
        for s in range(i - j - 1):
            p *= Fraction(n - k - s, n - 1 - j - s)
        e = i + k - 2 - 2 * j
        coeffs[e] = coeffs.get(e, 0) + p
    return _poly_from_dict(coeffs)


def ip_prob(n: int, k: int) -> Poly:
    """Swaps in one in-place partition that skips self-swaps, pivot rank k."""
    if not 1 <= k <= n or n < 2:
        raise ValueError("need n >= 2 and 1 <= k <= n")
    if k == n:
        return Poly([Fraction(1)], "t")
    coeffs = {s: Fraction(n - k, n - 1) * Fraction(math.comb(k - 1, k - s), math.comb(n - 2, k - s))
              for s in range(1, k + 1)}
    return _poly_from_dict(coeffs)


def pivot_dist_v5(n: int) -> List[Fraction]:
    """Law of the pivot rank when the candidate nearer the median of the
    first and last elements is taken (ties at random)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return [Fraction(1)]
    out = [Fraction(0)] * n
    if n % 2 == 0:
        m = n // 2
        for k in range(1, m + 1):
            out[k - 1] = out[n - k] = Fraction(4 * k - 3, (2 * m - 1) * 2 * m)
    else:
        m = (n + 1) // 2
        for k in range(1, m):
            out[k - 1] = out[n - k] = Fraction(4 * k - 3, (2 * m - 1) * (2 * m - 2))
        out[m - 1] = Fraction(2, 2 * m - 1)
    return out


def _poly_from_dict(coeffs: Dict[int, Fraction]) -> Poly:
    top = max(coeffs) if coeffs else 0
    return Poly([coeffs.get(e, Fraction(0)) for e in range(top + 1)], "t")


# ------------------------------------------------------------ series ring
#
# An element is (numerators, denominator): an object array of Python ints
# over one common integer denominator.  ``trunc`` is None for polynomials
# in t, or r for series in w = t - 1 cut after w^r.


class _Ser:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        self.num = num
        self.den = den

    def reduce(self):
        g = math.gcd(self.den, *self.num.tolist())
        if g > 1:
            self.num = self.num // g
            self.den //= g
        return self


def _from_fracs(coeffs: Sequence[Fraction], trunc) -> _Ser:
    coeffs = [Fraction(c) for c in coeffs] or [Fraction(0)]
    if trunc is not None:
        coeffs = [sum((c * math.comb(s, j) for s, c in enumerate(coeffs) if s >= j), Fraction(0))
                  for j in range(trunc + 1)]
    den = math.lcm(*(c.denominator for c in coeffs))
    return _Ser(np.array([c.numerator * (den // c.denominator) for c in coeffs], dtype=object), den).reduce()


def _mono(e: int, trunc) -> _Ser:
    if trunc is None:
        num = np.zeros(e + 1, dtype=object)
        num[e] = 1
    else:
        num = np.array([math.comb(e, j) for j in range(trunc + 1)], dtype=object)
    return _Ser(num)


def _one(trunc) -> _Ser:
    return _mono(0, trunc)


def _mul(a: _Ser, b: _Ser, trunc) -> _Ser:
    x, y = (a.num, b.num) if len(a.num) <= len(b.num) else (b.num, a.num)
    size = len(x) + len(y) - 1
    if trunc is not None:
        size = min(size, trunc + 1)
    out = np.zeros(size, dtype=object)
    for i, c in enumerate(x):
        if i >= size:
            break
        if c:
            seg = y[: size - i]
            out[i:i + len(seg)] += c * seg
    return _Ser(out, a.den * b.den)


def _add(a: _Ser, b: _Ser) -> _Ser:
    den = math.lcm(a.den, b.den)
    size = max(len(a.num), len(b.num))
    out = np.zeros(size, dtype=object)
    out[: len(a.num)] += a.num * (den // a.den)
    out[: len(b.num)] += b.num * (den // b.den)
    return _Ser(out, den)


def _scale(a: _Ser, c: Fraction) -> _Ser:
    c = Fraction(c)
    return _Ser(a.num * c.numerator, a.den * c.denominator).reduce()


def _to_fracs(a: _Ser) -> List[Fraction]:
    return [Fraction(int(x), a.den) for x in a.num]


# ------------------------------------------------------------ recurrences

_TABLES: Dict[Tuple[Variant, Optional[int]], List[_Ser]] = {}


def _table(variant: Variant, n: int, trunc) -> List[_Ser]:
    key = (variant, trunc)
    tab = _TABLES.setdefault(key, [])
    while len(tab) <= n:
        m = len(tab)
        tab.append(_next(variant, m, tab, trunc))
    return tab


def _next(variant: Variant, n: int, tab: List[_Ser], trunc) -> _Ser:
    if variant.name in _ONE_PIVOT:
        if n <= 1:
            return _one(trunc)
        # the two-candidate pivot rule applies at the top level only
        sub = _table(SWAP_IV, n - 1, trunc) if variant == SWAP_V else tab
        acc = None
        for k in range(1, n + 1):
            w = _one_pivot_weight(variant, n, k, trunc)
            if w is None:
                continue
            term = _mul(_mul(sub[k - 1], sub[n - k], trunc), w, trunc)
            acc = term if acc is None else _add(acc, term)
        return acc.reduce()
    k = variant.k
    if n < k:
        return _table(NULLA, n, trunc)[n]
    costs, factor = _gap_costs(variant, trunc)
    g = _gap_sum(tab, costs, n - k, trunc)
    return _scale(_mul(g, factor, trunc), Fraction(1, math.comb(n, k)))


@lru_cache(maxsize=None)
def _pv5(n: int) -> Tuple[Fraction, ...]:
    return tuple(pivot_dist_v5(n))


def _one_pivot_weight(variant: Variant, n: int, k: int, trunc) -> Optional[_Ser]:
    name = variant.name
    if name == "NullaComparisons":
        return _scale(_mono(n - 1, trunc), Fraction(1, n))
    if name == "SwapI":
        return _scale(_mono(k - 1, trunc), Fraction(1, n))
    if name == "SwapIII":
        return _scale(_mono(k, trunc), Fraction(1, n))
    if name == "SwapII":
        total: Dict[int, Fraction] = {}
        for i in range(1, n + 1):
            for e, c in enumerate(per_prob(n, k, i).coeffs):
                total[e] = total.get(e, 0) + c
        return _from_fracs([Fraction(total.get(e, 0), n ** 2) for e in range(max(total) + 1)], trunc)
    if name == "SwapIV":
        return _from_fracs([Fraction(c) / n for c in ip_prob(n, k).coeffs], trunc)
    if name == "SwapV":
        p = _pv5(n)[k - 1]
        if not p:
            return None
        return _from_fracs([Fraction(c) * p for c in ip_prob(n, k).coeffs], trunc)
    raise ValueError(f"not a 1-pivot variant: {variant}")


def _gap_costs(variant: Variant, trunc) -> Tuple[List[int], _Ser]:
    # per-sublist cost exponents c_s and the pivot-handling factor
    name, k = variant.name, variant.k
    if name == "DualComparisons":
        # 2n - i - 2 = 1 + g1 + 2 g2 + 2 g3
        return [1, 2, 2], _mono(1, trunc)
    if name == "DualSwaps":
        # n - 1 + i - j = g1 + g3, times a coin flip for ordering the pivots
        return [1, 0, 1], _from_fracs([Fraction(1, 2), Fraction(1, 2)], trunc)
    if name == "ThreePivotComparisons":
        return [2, 2, 2, 2], _table(NULLA, 3, trunc)[3]
    if name == "KPivotLinear":
        return [min(s, k) for s in range(1, k + 2)], _table(NULLA, k, trunc)[k]
    raise ValueError(f"not a multi-pivot variant: {variant}")


def _gap_sum(tab: List[_Ser], costs: List[int], total: int, trunc) -> _Ser:
    # sum over g_1 + ... + g_s = total of prod_s P_{g_s} t^{c_s g_s}
    cache: Dict[Tuple[int, int], _Ser] = {}

    def piece(c, g):
        key = (c, g)
        if key not in cache:
            cache[key] = _mul(tab[g], _mono(c * g, trunc), trunc)
        return cache[key]

    cur = [piece(costs[0], g) for g in range(total + 1)]
    for c in costs[1:]:
        nxt = []
        for m in range(total + 1):
            acc = None
            for g in range(m + 1):
                term = _mul(cur[m - g], piece(c, g), trunc)
                acc = term if acc is None else _add(acc, term)
            nxt.append(acc.reduce())
        cur = nxt
    return cur[total]


def pgf(variant: Variant, n: int) -> Poly:
    """Exact probability generating function P_n(t)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Poly(_to_fracs(_table(variant, n, None)[n]), "t")


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of P_n(1 + w) for w^0..w^order."""

    order: int
    coeffs: Tuple[Fraction, ...]

    def factorial_moments(self) -> List[Fraction]:
        """E[(X)_j] for j = 1..order."""
        return [c * math.factorial(j) for j, c in enumerate(self.coeffs)][1:]


def truncated_moments(variant: Variant, n: int, r: int) -> TruncatedSeries:
    if r < 0:
        raise ValueError("order must be non-negative")
    return TruncatedSeries(r, tuple(_to_fracs(_table(variant, n, r)[n])))


# ------------------------------------------------------------ moments


@lru_cache(maxsize=None)
def stirling2(r: int, j: int) -> int:
    if r == j:
        return 1
    if j == 0 or j > r:
        return 0
    return j * stirling2(r - 1, j) + stirling2(r - 1, j - 1)


def stirling_raw_from_factorial(f: Sequence) -> List[Fraction]:
    """Raw moments E[X^r], r = 1..len(f), from factorial moments f[j-1] = E[(X)_j]."""
    return [sum((stirling2(r, j) * Fraction(f[j - 1]) for j in range(1, r + 1)), Fraction(0))
            for r in range(1, len(f) + 1)]


def central_from_raw(raws: Sequence, mean=None) -> List[Fraction]:
    """Central moments of orders 1..len(raws) (the first is always 0)."""
    mu = Fraction(raws[0]) if mean is None else Fraction(mean)
    full = [Fraction(1)] + [Fraction(x) for x in raws]
    out = []
    for r in range(1, len(raws) + 1):
        out.append(sum((math.comb(r, i) * full[i] * (-mu) ** (r - i) for i in range(r + 1)), Fraction(0)))
    return out


def factorial_moments_of(p: Poly, r: int) -> List[Fraction]:
    return [sum((Fraction(c) * math.perm(s, j) for s, c in enumerate(p.coeffs) if s >= j), Fraction(0))
            for j in range(1, r + 1)]


def _mean_and_central(fact: List[Fraction]) -> List[Fraction]:
    raws = stirling_raw_from_factorial(fact)
    cent = central_from_raw(raws)
    return [raws[0]] + cent[1:]


def moments_from_pgf(p: Poly, r: int) -> List[Fraction]:
    """[mean, m_2, ..., m_r]: the mean followed by central moments."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return _mean_and_central(factorial_moments_of(p, r))


def moments(variant: Variant, n: int, r: int) -> List[Fraction]:
    """[mean, m_2, ..., m_r] through the truncated-series route."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return _mean_and_central(truncated_moments(variant, n, r).factorial_moments())


def mean_sequence(variant: Variant, N: int) -> List[Fraction]:
    """Means for n = 1..N."""
    return [truncated_moments(variant, n, 1).coeffs[1] for n in range(1, N + 1)]


def scaled_moments(variant: Variant, n: int, rmax: int) -> List[float]:
    """m_r / m_2^{r/2} for r = 3..rmax (the second is 1 by construction)."""
    ms = moments(variant, n, rmax)
    var = ms[1]
    if var <= 0:
        raise ValueError("degenerate distribution")
    out = []
    for r in range(3, rmax + 1):
        # keep the ratio exact as long as possible; only sqrt(var) is a float
        ratio = ms[r - 1] / var ** (r // 2)
        if r % 2:
            out.append(float(ratio) / math.sqrt(float(var)))
        else:
            out.append(float(ratio))
    return out


# ------------------------------------------------------------ closed forms


def validity_threshold(values: Dict[int, Fraction], formula: Callable[[int], Fraction]) -> Optional[int]:
    """Smallest n0 with formula(n) == values[n] for every n >= n0 in ``values``;
    None if the formula fails at the largest n."""
    n0 = None
    for n in sorted(values, reverse=True):
        if formula(n) != values[n]:
            break
        n0 = n
    return n0


def moment_data(variant: Variant, r: int, N: int) -> Dict[int, Fraction]:
    """The mean (r = 1) or the r-th central moment for n = 1..N."""
    return {n: moments(variant, n, r)[r - 1] for n in range(1, N + 1)}


def fit_moment(variant: Variant, r: int, basis=None, skip: int = 0, extra: int = 6,
               holdout: int = 3) -> Tuple[dict, int]:
    """Fit the mean (r = 1) or r-th central moment in an n/harmonic basis.

    Returns ({label: coefficient}, n0) where n0 is the first n from which the
    fitted expression agrees with every computed value.
    """
    basis = basis or moment_basis(r)
    N = skip + len(basis) + holdout + extra
    data = moment_data(variant, r, N)
    fit = ansatz_fit(sorted(data.items()), basis, skip=skip, holdout=holdout + extra)
    if fit is None:
        raise ValueError("no closed form in this basis; enlarge it or skip more initial terms")
    n0 = validity_threshold(data, lambda n: evaluate_fit(fit, basis, n))
    return {k: v for k, v in fit.items() if v}, n0


# ------------------------------------------------------------ Monte Carlo


@dataclass(frozen=True)
class MCConfig:
    n: int
    k: int
    trials: int
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1 or self.n < 0 or self.k < 1:
            raise ValueError("need trials >= 1, n >= 0 and k >= 1")


def _sort_count(a: list, k: int) -> int:
    """Comparisons made by k-pivot Quicksort with binary-search partitioning.

    The first k entries are the pivots (the input is a uniform shuffle, so
    this is a uniform choice); they are sorted with 1-pivot Quicksort, as
    is any sublist shorter than k.  Partitioning keeps relative order, so
    every sublist is again uniformly shuffled.
    """
    count = 0
    stack = [a]
    while stack:
        cur = stack.pop()
        m = len(cur)
        if m < 2:
            continue
        if k == 1 or m < k:
            p = cur[0]
            count += m - 1
            stack.append([x for x in cur[1:] if x < p])
            stack.append([x for x in cur[1:] if x > p])
            continue
        pivots = cur[:k]
        count += _sort_count(list(pivots), 1)
        pivots.sort()
        parts = [[] for _ in range(k + 1)]
        for x in cur[k:]:
            lo, hi = 0, k
            while lo < hi:
                mid = (lo + hi) // 2
                count += 1
                if x < pivots[mid]:
                    hi = mid
                else:
                    lo = mid + 1
            parts[lo].append(x)
        stack.extend(parts)
    return count


def mc_run(cfg: MCConfig) -> dict:
    """Mean and sample variance of comparisons over ``cfg.trials`` shuffles.

    Trial i draws its permutation from PCG64 seeded with (seed, i), so runs
    are reproducible and trials are independent of each other's count.
    """
    counts = np.empty(cfg.trials, dtype=np.int64)
    for i in range(cfg.trials):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([cfg.seed, i])))
        counts[i] = _sort_count(rng.permutation(cfg.n).tolist(), cfg.k)
    mean = float(counts.mean())
    var = float(counts.var(ddof=1)) if cfg.trials > 1 else 0.0
    return {"n": cfg.n, "k": cfg.k, "trials": cfg.trials, "seed": cfg.seed,
            "mean": mean, "variance": var, "stderr": math.sqrt(var / cfg.trials)}

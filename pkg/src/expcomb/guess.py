"""Guessing recurrences and closed forms from exact data.

* C-finite recurrences (constant coefficients), optionally palindromic, with
  conversion to rational generating functions.
* Holonomic (P-recursive) recurrences with polynomial coefficients.
* Exact linear ansatz fits over bases such as n^i * H_1(n)^e1 * H_2(n)^e2.

Sequence terms may be exact scalars or polynomials in a parameter (a
:class:`Poly` in ``v``); in the latter case the recurrence coefficients live
in the field of rational functions in that parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd, lcm
from typing import Callable, List, Optional, Sequence, Tuple

from .exact import Poly, RatFunc, poly_gcd, series_coeffs
from .linalg import NoSolution, Underdetermined, determinant, nullspace_basis, solve_linear


@dataclass(frozen=True)
class CFiniteSpec:
    """a(n) = sum_{i=1..d} coeffs[i-1] * a(n-i), with a(0..d-1) = initial."""

    initial: Tuple
    coeffs: Tuple

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def as_lists(self):
        return [list(self.initial), list(self.coeffs)]


@dataclass(frozen=True)
class PRecurrence:
    """sum_i coeff_polys[i](n) * a(n+i) = 0 for n >= valid_from."""

    order: int
    coeff_polys: Tuple[Poly, ...]
    valid_from: int = 0

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.coeff_polys)

    def apply(self, seq: Sequence, n: int, start: int = 0):
        """Value of the operator at index n for a sequence beginning at ``start``."""
        return sum(p(n) * seq[n - start + i] for i, p in enumerate(self.coeff_polys))

    def __str__(self):
        parts = []
        for i, p in enumerate(self.coeff_polys):
            if p:
                shift = "a(n)" if i == 0 else f"a(n+{i})"
                parts.append(f"({p.to_str()})*{shift}")
        return " + ".join(parts) + " = 0"


# ------------------------------------------------------------ C-finite


def _is_param_poly(x) -> bool:
    return isinstance(x, Poly)


def _tidy(x):
    """RatFunc with trivial denominator -> its numerator; exact ints stay ints."""
    if isinstance(x, RatFunc):
        if x.denom == 1:
            x = x.numer
        else:
            return x
    if isinstance(x, Poly) and x.degree <= 0 and not isinstance(x.lead, Poly):
        return Fraction(x.lead)
    if isinstance(x, int):
        return Fraction(x)
    return x


def _solve_unique(rows, rhs) -> Optional[list]:
    """Unique solution of an overdetermined system or None."""
    k = len(rows[0]) if rows else 0
    if k == 0:
        return [] if all(not r for r in rhs) else None
    if any(_is_param_poly(x) for row in rows for x in row) or any(_is_param_poly(x) for x in rhs):
        sol = _solve_param(rows, rhs, k)
        if sol is not None:
            return sol
    try:
        return solve_linear(rows, rhs)
    except (NoSolution, Underdetermined):
        return None


def _solve_param(rows, rhs, k):
    # Cramer's rule on the first k equations with fraction-free determinants
    # over Z[v]; the remaining equations are checked by cross-multiplication.
    square = [list(r) for r in rows[:k]]
    det = determinant(square)
    if not det:
        return None
    dets = []
    for j in range(k):
        m = [r[:j] + [b] + r[j + 1:] for r, b in zip(square, rhs[:k])]
        dets.append(determinant(m))
    for r, b in zip(rows, rhs):
        lhs = 0
        for x, dj in zip(r, dets):
            lhs = lhs + x * dj
        if lhs != b * det:
            return []  # inconsistent: signals failure without fallback
    var = next(x.var for row in rows for x in row if isinstance(x, Poly))
    return [RatFunc(Poly.lift(dj, var), Poly.lift(det, var)) for dj in dets]


def guess_rec1(seq: Sequence, d: int, symmetric: bool = False) -> Optional[CFiniteSpec]:
    """Fit a linear recurrence of order exactly ``d`` with constant coefficients.

    Uses the equations a(n) = sum c_i a(n-i) for every n >= d in the data.
    Requires len(seq) >= 2d + 3.  Returns None when the system is
    inconsistent or leaves free parameters.

    With ``symmetric`` the characteristic polynomial 1 - sum c_i t^i is
    forced to be palindromic or anti-palindromic, which halves the unknowns.
    """
    if d < 1:
        raise ValueError("order must be positive")
    if len(seq) < 2 * d + 3:
        raise ValueError(f"order {d} needs at least {2 * d + 3} terms, got {len(seq)}")
    if not symmetric:
        rows = [[seq[n - i] for i in range(1, d + 1)] for n in range(d, len(seq))]
        rhs = [seq[n] for n in range(d, len(seq))]
        sol = _solve_unique(rows, rhs)
        if not sol:
            return None
        return CFiniteSpec(tuple(_tidy(x) for x in seq[:d]), tuple(_tidy(c) for c in sol))
    for eps in (1, -1):
        free = [i for i in range(1, d) if i < d - i or (i == d - i and eps == 1)]
        rows, rhs = [], []
        for n in range(d, len(seq)):
            row = []
            for i in free:
                x = seq[n - i]
                if i != d - i:
                    x = x + eps * seq[n - d + i]
                row.append(x)
            rows.append(row)
            rhs.append(seq[n] + eps * seq[n - d])
        sol = _solve_unique(rows, rhs)
        if sol is None or (free and not sol):
            continue
        c = [0] * (d + 1)
        for i, x in zip(free, sol):
            c[i] = x
            if i != d - i:
                c[d - i] = eps * x
        c[d] = -eps
        return CFiniteSpec(tuple(_tidy(x) for x in seq[:d]), tuple(_tidy(x) for x in c[1:]))
    return None


def guess_rec(seq: Sequence, symmetric: bool = False, max_order: int | None = None) -> Optional[CFiniteSpec]:
    """Smallest-order C-finite recurrence fitting ``seq`` (orders 1..len/2 - 2)."""
    top = len(seq) // 2 - 2
    if max_order is not None:
        top = min(top, max_order)
    for d in range(1, top + 1):
        spec = guess_rec1(seq, d, symmetric)
        if spec is not None:
            return spec
    return None


def seq_from_rec(spec: CFiniteSpec, count: int) -> list:
    """First ``count`` terms generated by a C-finite spec."""
    out = list(spec.initial[:count])
    d = spec.order
    while len(out) < count:
        n = len(out)
        acc = 0
        for i, c in enumerate(spec.coeffs, 1):
            if c:
                acc = acc + c * out[n - i]
        out.append(_tidy(acc))
    return out


def _ring_coeffs(values):
    """Scale field elements (scalars or RatFuncs in a parameter) to ring elements.

    Returns (scaled values, common multiplier) with the multiplier a Poly in
    the parameter, or 1 when every value is already a scalar or polynomial.
    """
    dens = [x.denom for x in values if isinstance(x, RatFunc)]
    if not dens:
        return [x for x in values], 1
    m = dens[0]
    for d in dens[1:]:
        m = (m * d).exact_div(poly_gcd(m, d))
    out = []
    for x in values:
        if isinstance(x, RatFunc):
            out.append(x.numer * m.exact_div(x.denom))
        else:
            out.append(x * m)
    return out, m


def c_to_r(spec: CFiniteSpec, var: str = "t", offset: int = 0) -> Optional[RatFunc]:
    """Rational generating function sum_{n>=0} a(n) var^(n+offset) of a spec.

    The result is checked against the recurrence for deg(denominator) + 11
    terms; None is returned on a mismatch.
    """
    d = spec.order
    if len(spec.initial) != d:
        raise ValueError("initial values and coefficients disagree in length")
    values, m = _ring_coeffs([Fraction(1)] + [-c for c in spec.coeffs])
    init, m2 = _ring_coeffs(list(spec.initial))
    denom = Poly(values, var)
    s = Poly(init, var)
    numer = (denom * s).truncate(d)
    if m2 != 1:
        denom = denom.scale(m2)
    f = RatFunc(numer.shift(offset), denom)
    count = max(f.denom.degree, d) + 11
    want = seq_from_rec(spec, count)
    got = series_coeffs(f, count + offset)[offset:]
    if any(_tidy(g) != _tidy(w) for g, w in zip(got, want)):
        return None
    return f


# ------------------------------------------------------------ holonomic


def find_rec(seq: Sequence, max_c: int, start: int = 0, holdout: int = 3) -> Optional[PRecurrence]:
    """Search for a linear recurrence with polynomial coefficients.

    ``seq[k]`` is a(start + k).  Splits with order + degree <= max_c are tried
    by increasing order, then degree.  A split is accepted when the solution
    space is one-dimensional and the last ``holdout`` equations also hold.
    Raises ValueError when no split has enough data to be decided.
    """
    tried = False
    for order in range(1, max_c + 1):
        for deg in range(0, max_c - order + 1):
            unknowns = (order + 1) * (deg + 1)
            n_eq = len(seq) - order
            if n_eq - holdout < unknowns + 1:
                continue
            tried = True
            rows = []
            for k in range(n_eq):
                n = start + k
                row = []
                for i in range(order + 1):
                    v = seq[k + i]
                    p = 1
                    for _ in range(deg + 1):
                        row.append(p * v)
                        p *= n
                rows.append(row)
            basis = nullspace_basis(rows[: n_eq - holdout])
            if len(basis) != 1:
                continue
            vec = basis[0]
            if any(sum(a * b for a, b in zip(row, vec)) for row in rows[n_eq - holdout:]):
                continue
            polys = [Poly(vec[i * (deg + 1):(i + 1) * (deg + 1)], "n") for i in range(order + 1)]
            if not polys[-1] or not polys[0]:
                continue
            return PRecurrence(order, _normalize_operator(polys), start)
    if not tried:
        raise ValueError("not enough terms to test any recurrence shape")
    return None


def _normalize_operator(polys: List[Poly]) -> Tuple[Poly, ...]:
    # divide out the common polynomial factor, then scale to coprime integer
    # coefficients with a positive leading coefficient on the top shift
    g = Poly([], "n")
    for p in polys:
        g = poly_gcd(g, p)
    polys = [p.exact_div(g) for p in polys]
    num, den = 0, 1
    for p in polys:
        for c in p.coeffs:
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
    scale = Fraction(den, num)
    if polys[-1].lead < 0:
        scale = -scale
    return tuple(p.map(lambda c: int(Fraction(c) * scale)) for p in polys)


# ------------------------------------------------------------ ansatz fits


@lru_cache(maxsize=None)
def harmonic(n: int, k: int = 1) -> Fraction:
    """Generalized harmonic number H_k(n) = sum_{j=1..n} 1/j^k."""
    if n <= 0:
        return Fraction(0)
    return harmonic(n - 1, k) + Fraction(1, n ** k)


@dataclass(frozen=True)
class Term:
    """Monomial n^power * prod H_k(n)^e over the (k, e) pairs in ``harmonics``."""

    power: int = 0
    harmonics: Tuple[Tuple[int, int], ...] = ()

    def __call__(self, n) -> Fraction:
        v = Fraction(n) ** self.power
        for k, e in self.harmonics:
            v *= harmonic(n, k) ** e
        return v

    @property
    def label(self) -> str:
        parts = []
        if self.power == 1:
            parts.append("n")
        elif self.power:
            parts.append(f"n^{self.power}")
        for k, e in self.harmonics:
            parts.append(f"H{k}" if e == 1 else f"H{k}^{e}")
        return "*".join(parts) or "1"


AnsatzBasis = List[Tuple[str, Callable]]


def moment_basis(r: int, extra_powers: Sequence[int] = ()) -> AnsatzBasis:
    """Default basis for closed forms of r-th moments.

    n^i * prod H_k^{e_k} with 0 <= i <= r + 1, sum e_k <= 2 and k <= r; the
    optional ``extra_powers`` add plain n^p terms such as p = -1.
    """
    monos = [()]
    ks = range(1, r + 1)
    monos += [((k, 1),) for k in ks]
    for k1, k2 in combinations_with_replacement(ks, 2):
        monos.append(((k1, 2),) if k1 == k2 else ((k1, 1), (k2, 1)))
    terms = [Term(i, h) for h in monos for i in range(r + 2)]
    terms += [Term(p) for p in extra_powers if not 0 <= p <= r + 1]
    return [(t.label, t) for t in terms]


def ansatz_fit(data: Sequence[Tuple], basis: AnsatzBasis, skip: int = 0, holdout: int = 3) -> Optional[dict]:
    """Exact linear combination of basis functions matching ``data``.

    ``data`` is a list of (point, value) pairs; basis functions are called on
    the point.  The first ``skip`` points are ignored, the last ``holdout``
    points are only used for verification.  Returns {label: coefficient} or
    None if no unique fit exists.
    """
    pts = list(data)[skip:]
    if len(pts) < len(basis) + holdout:
        raise ValueError(f"need at least {len(basis) + holdout} data points after skipping {skip}")
    fit_pts, check_pts = pts[: len(pts) - holdout], pts[len(pts) - holdout:]
    rows = [[f(p) for _, f in basis] for p, _ in fit_pts]
    rhs = [Fraction(v) for _, v in fit_pts]
    try:
        sol = solve_linear(rows, rhs)
    except (NoSolution, Underdetermined):
        return None
    for p, v in check_pts:
        if sum(c * f(p) for c, (_, f) in zip(sol, basis) if c) != v:
            return None
    return {label: c for (label, _), c in zip(basis, sol)}


def evaluate_fit(coeffs: dict, basis: AnsatzBasis, point) -> Fraction:
    funcs = dict(basis)
    return sum((c * funcs[label](point) for label, c in coeffs.items() if c), Fraction(0))


def format_fit(coeffs: dict) -> str:
    parts = []
    for label, c in coeffs.items():
        if not c:
            continue
        c = Fraction(c)
        mag = abs(c)
        cs = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        body = cs if label == "1" else (label if mag == 1 else f"{cs}*{label}")
        parts.append(("-" if c < 0 else "+") + body)
    s = "".join(parts) or "0"
    return s[1:] if s.startswith("+") else s

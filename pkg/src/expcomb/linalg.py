"""Exact linear algebra: determinants, permanents, linear solving, nullspaces.

Matrices are plain lists of rows.  Entries may be ints, Fractions,
:class:`~expcomb.exact.Poly` or :class:`~expcomb.exact.RatFunc` objects.
Determinants over integral domains (int, Poly) use fraction-free Bareiss
elimination; over fields (Fraction, RatFunc) ordinary Gaussian elimination.
Both work on sparse rows, so banded matrices cost about n * bandwidth^2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence

from .exact import Poly, RatFunc, div_exact

PERMANENT_CAP = 20


class NoSolution(ValueError):
    """The linear system is inconsistent."""


class Underdetermined(ValueError):
    """The linear system has free parameters.

    ``witness`` is the particular solution with every free variable set to 0
    and ``basis`` spans the solution space of the homogeneous system.
    """

    def __init__(self, witness, basis):
        super().__init__(f"system has {len(basis)} free parameter(s)")
        self.witness = witness
        self.basis = basis


def shape(M: Sequence[Sequence]) -> tuple:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise ValueError("ragged matrix")
    return rows, cols


def identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    n, k = shape(A)
    k2, m = shape(B)
    if k != k2:
        raise ValueError("dimension mismatch")
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = 0
            for s in range(k):
                if A[i][s] and B[s][j]:
                    acc = acc + A[i][s] * B[s][j]
            row.append(acc)
        out.append(row)
    return out


def minor(M, drop_rows, drop_cols):
    dr, dc = set(drop_rows), set(drop_cols)
    return [[x for j, x in enumerate(row) if j not in dc] for i, row in enumerate(M) if i not in dr]


def _is_field(entries) -> bool:
    for x in entries:
        if isinstance(x, (Fraction, RatFunc, float)):
            return True
    return False


def _sparse(M) -> List[Dict[int, object]]:
    return [{j: x for j, x in enumerate(row) if x} for row in M]


def determinant(M):
    """Exact determinant of a square matrix."""
    n, m = shape(M)
    if n != m:
        raise ValueError(f"determinant of a non-square {n}x{m} matrix")
    if n == 0:
        return 1
    rows = _sparse(M)
    if _is_field(x for r in rows for x in r.values()):
        return _det_field(rows, n)
    return _det_bareiss(rows, n)


def _det_field(rows, n):
    det = 1
    for k in range(n):
        p = next((i for i in range(k, n) if k in rows[i]), None)
        if p is None:
            return 0
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            det = -det
        rk = rows[k]
        piv = rk[k]
        det = det * piv
        for i in range(k + 1, n):
            ri = rows[i]
            m = ri.get(k)
            if not m:
                continue
            f = m / piv
            for j, x in rk.items():
                if j == k:
                    continue
                y = ri.get(j, 0) - f * x
                if y:
                    ri[j] = y
                else:
                    ri.pop(j, None)
            del ri[k]
    return det


def _det_bareiss(rows, n):
    # hist[s] is the Bareiss divisor after s elimination steps.  A row whose
    # pivot-column entries were zero for a while is only rescaled, so we keep
    # it stale and catch it up lazily with hist[k] / hist[level].
    hist = [1]
    level = [0] * n
    sign = 1

    def catch_up(i, k):
        s = level[i]
        if s != k:
            num, den = hist[k], hist[s]
            rows[i] = {j: div_exact(x * num, den) for j, x in rows[i].items()}
            level[i] = k

    for k in range(n):
        p = next((i for i in range(k, n) if k in rows[i]), None)
        if p is None:
            return 0
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            level[k], level[p] = level[p], level[k]
            sign = -sign
        catch_up(k, k)
        rk = rows[k]
        piv = rk[k]
        prev = hist[k]
        for i in range(k + 1, n):
            if k not in rows[i]:
                continue
            catch_up(i, k)
            ri = rows[i]
            m = ri.pop(k)
            new = {}
            for j in set(ri) | set(rk):
                if j == k:
                    continue
                y = piv * ri.get(j, 0) - m * rk.get(j, 0)
                if y:
                    new[j] = div_exact(y, prev)
            rows[i] = new
            level[i] = k + 1
        hist.append(piv)
    return hist[n] if sign > 0 else -hist[n]


def permanent(M):
    """Permanent by Ryser's formula with Gray-code subset order, O(2^n n)."""
    n, m = shape(M)
    if n != m:
        raise ValueError(f"permanent of a non-square {n}x{m} matrix")
    if n > PERMANENT_CAP:
        raise ValueError(f"permanent dimension {n} exceeds cap {PERMANENT_CAP}; truncate the sequence")
    if n == 0:
        return 1
    sums = [0] * n
    total = 0
    gray = 0
    for g in range(1, 1 << n):
        j = (g & -g).bit_length() - 1
        gray ^= 1 << j
        if gray >> j & 1:
            for i in range(n):
                sums[i] += M[i][j]
        else:
            for i in range(n):
                sums[i] -= M[i][j]
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod = prod * s
        if prod:
            if bin(gray).count("1") & 1:
                total -= prod
            else:
                total += prod
    return -total if n & 1 else total


def _field_entry(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Poly):
        return RatFunc(x)
    return x


def rref(A):
    """Reduced row echelon form over a field; returns (R, pivot_columns)."""
    R = [[_field_entry(x) for x in row] for row in A]
    n_rows, n_cols = shape(R)
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        piv = R[r][c]
        R[r] = [x / piv if x else x for x in R[r]]
        for i in range(n_rows):
            if i != r:
                f = R[i][c]
                if f:
                    R[i] = [x - f * y if y else x for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def nullspace_basis(A) -> List[list]:
    """Basis of {x : A x = 0}; each vector has a 1 in its own free variable."""
    _, n_cols = shape(A)
    R, pivots = rref(A)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            vec[pc] = -R[row][f]
        basis.append(vec)
    return basis


def solve_linear(A, b) -> list:
    """Solve A x = b exactly.

    Returns the unique solution; raises :class:`NoSolution` for inconsistent
    systems and :class:`Underdetermined` when free parameters remain.
    """
    n_rows, n_cols = shape(A)
    if len(b) != n_rows:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    R, pivots = rref(aug)
    if n_cols in pivots:
        raise NoSolution("inconsistent linear system")
    x = [_field_entry(0)] * n_cols
    for row, pc in enumerate(pivots):
        x[pc] = R[row][n_cols]
    if len(pivots) < n_cols:
        free = [c for c in range(n_cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [_field_entry(0)] * n_cols
            vec[f] = _field_entry(1)
            for row, pc in enumerate(pivots):
                vec[pc] = -R[row][f]
            basis.append(vec)
        raise Underdetermined(x, basis)
    return x

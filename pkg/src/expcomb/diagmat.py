"""Determinants and permanents of banded Toeplitz ("almost diagonal") matrices.

A template is given by its first row (r0, r1, ..., r_{k1-1}) and first column
(c0, c1, ..., c_{k2-1}) with r0 == c0; the n x n matrix has a_ij = r_{j-i}
above the diagonal and c_{i-j} below it, zero outside the band.

Two routes to the generating function 1 + sum_n det(A_n) t^n:

* numeric: compute the sequence and guess a C-finite recurrence;
* symbolic: expand along the first row.  Every minor reached that way keeps
  all columns beyond a short window, so it is described by which window
  columns remain.  The finitely many such states satisfy a linear system
  A_S = [S is the full matrix] + t * sum_child mult * A_child.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .exact import Poly, RatFunc, series_coeffs
from .guess import guess_rec
from .linalg import determinant, minor

DET = "det"
PERM = "perm"


@dataclass(frozen=True)
class DiagSpec:
    n: int
    first_row: Tuple
    first_col: Tuple

    def __post_init__(self):
        if not self.first_row or not self.first_col:
            raise ValueError("first row and first column must be non-empty")
        if self.first_row[0] != self.first_col[0]:
            raise ValueError("first row and first column disagree on the corner entry")
        if self.n < 0:
            raise ValueError("dimension must be non-negative")

    def entry(self, offset: int):
        """Entry at column minus row = ``offset``."""
        return band_entry(self.first_row, self.first_col, offset)


def band_entry(row: Sequence, col: Sequence, offset: int):
    if offset >= 0:
        return row[offset] if offset < len(row) else 0
    return col[-offset] if -offset < len(col) else 0


def _check_template(row, col):
    DiagSpec(0, tuple(row), tuple(col))


def build_matrix(spec: DiagSpec) -> List[list]:
    return [[spec.entry(j - i) for j in range(spec.n)] for i in range(spec.n)]


def banded_permanent(row: Sequence, col: Sequence, n: int):
    """Permanent of the n x n banded Toeplitz matrix by a sliding-window DP.

    The state is the set of used columns among those rows i..i+width can
    still reach; cost O(n * 2^width * width) with width = k1 + k2 - 1.
    """
    if n == 0:
        return 1
    k1, k2 = len(row), len(col)
    width = k1 + k2 - 1
    lo = k2 - 1  # bit b stands for column i - lo + b
    states = {(1 << lo) - 1: 1}  # columns left of 0 do not exist
    for i in range(n):
        nxt = {}
        for mask, val in states.items():
            for b in range(width):
                if mask >> b & 1:
                    continue
                j = i - lo + b
                if not 0 <= j < n:
                    continue
                a = band_entry(row, col, j - i)
                if not a:
                    continue
                m = mask | 1 << b
                if not m & 1 and i - lo >= 0:
                    continue  # the column leaving the window was never used
                key = m >> 1
                nxt[key] = nxt.get(key, 0) + val * a
        states = nxt
    return sum(states.values())


def det_sequence(row: Sequence, col: Sequence, lo: int, hi: int, mode: str = DET) -> list:
    """det (or perm) of the template matrices of dimensions lo..hi."""
    _check_template(row, col)
    out = []
    for n in range(lo, hi + 1):
        if mode == DET:
            out.append(determinant(build_matrix(DiagSpec(n, tuple(row), tuple(col)))) if n else 1)
        elif mode == PERM:
            out.append(banded_permanent(row, col, n))
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return out


def gf_family(row: Sequence, col: Sequence, mode: str = DET, m: int = 1, n: int = 30) -> RatFunc:
    """Generating function 1 + sum det(A_i) t^i guessed from dimensions m..n."""
    seq = det_sequence(row, col, 1, n, mode)
    last = max((i for i, x in enumerate(seq) if x), default=-1)
    if last < n // 2:
        # eventually zero (e.g. a triangular template with zero diagonal):
        # the generating function is a polynomial and there is nothing to guess
        return RatFunc(Poly([1] + seq[: last + 1], "t"), Poly([1], "t"))
    spec = guess_rec(seq[m - 1:])
    if spec is None:
        raise ValueError("no C-finite recurrence found; use more terms")
    d = spec.order
    denom = Poly([1] + [-c for c in spec.coeffs], "t")
    full = Poly([1] + seq, "t")
    numer = (denom * full).truncate(max(d, m + d - 1) + 1)
    f = RatFunc(numer, denom)
    if series_coeffs(f, n + 1) != [1] + seq:
        raise ValueError("guessed generating function does not reproduce the data")
    return f


# ------------------------------------------------------------ minor states


@dataclass(frozen=True)
class MinorState:
    """A minor reached by first-row expansion.

    ``key`` lists the remaining columns inside the window, as offsets from
    the current top row; every column at offset >= k1 - 1 is present.  Two
    states are equal when their keys are, whatever their dimension.
    """

    key: Tuple[int, ...]
    dim: int = field(default=0, compare=False)
    row_prefix: Tuple = field(default=(), compare=False)
    col_prefix: Tuple = field(default=(), compare=False)


def _trim(xs):
    xs = list(xs)
    while xs and not xs[-1]:
        xs.pop()
    return tuple(xs)


def _make_state(row, col, key, dim) -> MinorState:
    k1, k2 = len(row), len(col)
    present = list(key) + [k1 - 1]
    rp = _trim(band_entry(row, col, off) for off in present)
    c0 = present[0]
    cp = _trim(band_entry(row, col, c0 - i) for i in range(c0 + k2))
    return MinorState(tuple(key), dim, rp, cp)


def root_state(spec: DiagSpec) -> MinorState:
    return _make_state(spec.first_row, spec.first_col, tuple(range(len(spec.first_row) - 1)), spec.n)


def expand_minor(spec: DiagSpec, state: MinorState, mode: str = DET) -> List[Tuple[object, MinorState]]:
    """Signed first-row expansion: [(multiplier, child state), ...].

    Children whose first column has become identically zero are dropped.
    """
    row, col = spec.first_row, spec.first_col
    k1, k2 = len(row), len(col)
    present = list(state.key) + [k1 - 1]
    out = []
    for pos, off in enumerate(present):
        a = band_entry(row, col, off)
        if not a:
            continue
        rest = [x - 1 for x in present if x != off]
        if rest and rest[0] < -(k2 - 1):
            continue
        if mode == DET and pos % 2:
            a = -a
        child = _make_state(row, col, tuple(rest), state.dim - 1)
        out.append((a, child))
    return out


def children_closure(row: Sequence, col: Sequence, mode: str = DET) -> List[MinorState]:
    """All states reachable from the full matrix, root first."""
    spec = DiagSpec(0, tuple(row), tuple(col))
    root = root_state(spec)
    seen = {root: root}
    order = [root]
    i = 0
    while i < len(order):
        for _, child in expand_minor(spec, order[i], mode):
            if child not in seen:
                seen[child] = child
                order.append(child)
        i += 1
    return order


def minor_matrix(spec: DiagSpec, state: MinorState, dim: int) -> List[list]:
    """Concrete dim x dim instance of a state, for checking the expansion."""
    k1 = len(spec.first_row)
    cols = list(state.key) + list(range(k1 - 1, k1 - 1 + dim))
    cols = cols[:dim]
    return [[spec.entry(c - i) for c in cols] for i in range(dim)]


def gf_symbolic(row: Sequence, col: Sequence, mode: str = DET) -> Tuple[RatFunc, int]:
    """Generating function from the minor-state linear system.

    Returns (1 + sum_n det(A_n) t^n, number of states).
    """
    spec = DiagSpec(0, tuple(row), tuple(col))
    states = children_closure(row, col, mode)
    index = {s: i for i, s in enumerate(states)}
    k = len(states)
    t = Poly.x("t")
    A = [[Poly([int(i == j)], "t") for j in range(k)] for i in range(k)]
    for i, s in enumerate(states):
        for mult, child in expand_minor(spec, s, mode):
            j = index[child]
            A[i][j] = A[i][j] - t * mult
    # only the root unknown is needed: Cramer's rule with e_root on the right
    # is a ratio of two fraction-free determinants over Z[t]
    num = determinant(minor(A, [0], [0])) if k > 1 else Poly([1], "t")
    den = determinant(A)
    return RatFunc(Poly.lift(num, "t"), Poly.lift(den, "t")), k

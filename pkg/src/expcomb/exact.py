"""Exact scalars, dense univariate polynomials and reduced rational functions.

Scalars are :class:`fractions.Fraction` (plain ``int`` is accepted wherever a
scalar is expected).  :class:`Poly` is a dense polynomial whose coefficients
may be ints, Fractions, or other :class:`Poly` objects; the last case gives
bivariate polynomials, with the outer variable first (for example ``t`` outer
and ``v`` inner).  :class:`RatFunc` keeps a quotient of polynomials in lowest
terms with a canonical scaling.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Sequence


# ---------------------------------------------------------------- scalars


def to_scalar(x) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact scalar: {x!r}")


def format_scalar(x) -> str:
    x = to_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def scalar_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` (one of ``+ - * /``) to two exact scalars."""
    a, b = to_scalar(a), to_scalar(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b == 0:
            raise ZeroDivisionError("division by zero scalar")
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def div_exact(a, b):
    """Divide ``a`` by ``b`` when the quotient is known to lie in the ring."""
    if isinstance(a, Poly):
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, Fraction) and b.denominator == 1:
        b = b.numerator
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{a} is not divisible by {b}")
        return q
    if isinstance(b, Poly):
        return Poly.const(a, b.var).exact_div(b)
    return a / b


def _sign(x) -> int:
    if isinstance(x, Poly):
        return _sign(x.lead) if x else 0
    return (x > 0) - (x < 0)


def _scalar_gcd(x, y):
    """Gcd of two ring elements, positive by convention (Q is treated via Z)."""
    if isinstance(x, Poly) or isinstance(y, Poly):
        var = x.var if isinstance(x, Poly) else y.var
        return poly_gcd(Poly.lift(x, var), Poly.lift(y, var))
    if isinstance(x, int) and isinstance(y, int):
        return gcd(x, y)
    x, y = Fraction(x), Fraction(y)
    return Fraction(gcd(x.numerator, y.numerator), lcm(x.denominator, y.denominator))


def _rational_content(x) -> Fraction:
    """Positive rational gcd of all nested scalar coefficients of ``x``."""
    if isinstance(x, Poly):
        g = Fraction(0)
        for c in x.coeffs:
            g = _scalar_gcd(g, _rational_content(c))
        return g
    return abs(Fraction(x))


# ------------------------------------------------------------ polynomials


class Poly:
    """Dense polynomial ``c0 + c1*X + ... `` with immutable coefficients."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    # construction helpers
    @classmethod
    def const(cls, c, var: str = "t") -> "Poly":
        return cls([c], var)

    @classmethod
    def x(cls, var: str = "t") -> "Poly":
        return cls([0, 1], var)

    @classmethod
    def lift(cls, c, var: str = "t") -> "Poly":
        return c if isinstance(c, Poly) else cls([c], var)

    def _wrap(self, coeffs) -> "Poly":
        return Poly(coeffs, self.var)

    def _same(self, other) -> bool:
        # a Poly in another variable is a coefficient, not a peer polynomial
        return isinstance(other, Poly) and other.var == self.var

    def _coerce(self, other) -> "Poly":
        return other if self._same(other) else Poly([other], self.var)

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if self._same(other):
            return self.coeffs == other.coeffs
        if isinstance(other, RatFunc):
            return other == self
        if not other:
            return not self.coeffs
        return self.coeffs == (other,)

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    # ring operations
    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        o = self._coerce(other).coeffs
        s = self.coeffs
        if len(s) < len(o):
            s, o = o, s
        return self._wrap([a + b for a, b in zip(s, o)] + list(s[len(o):]))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap([-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if not self._same(other):
            if not other:
                return self._wrap(())
            return self._wrap([a * other for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._wrap(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return self._wrap(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self._wrap([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, RatFunc):
            return RatFunc(self) / other
        if self._same(other):
            return RatFunc(self, other)
        return self._wrap([c / other if isinstance(c, Poly) else Fraction(c) / other for c in self.coeffs])

    def __rtruediv__(self, other):
        return RatFunc(self._coerce(other), self)

    # evaluation and calculus
    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return self._wrap([i * c for i, c in enumerate(self.coeffs)][1:])

    def truncate(self, n: int) -> "Poly":
        """Keep the coefficients of degree < n."""
        return self._wrap(self.coeffs[:n])

    def shift(self, k: int) -> "Poly":
        """Multiply by X^k (k >= 0)."""
        if not self.coeffs:
            return self
        return self._wrap([0] * k + list(self.coeffs))

    def compose(self, other) -> "Poly":
        acc = self._wrap(())
        other = self._coerce(other)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def map(self, f) -> "Poly":
        return self._wrap([f(c) for c in self.coeffs])

    # division
    def divmod(self, other) -> tuple:
        """Quotient and remainder; the divisor's lead must divide exactly."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db, lb = other.degree, other.lead
        q = [0] * max(len(r) - db, 0)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if not c:
                continue
            if isinstance(c, Poly) or isinstance(lb, Poly):
                f = div_exact(c, lb)
            else:
                # scalar coefficients live in Q, where every division is exact
                f = _normalize_scalar(Fraction(c) / lb)
            q[i - db] = f
            for j, b in enumerate(other.coeffs):
                if b:
                    r[i - db + j] -= f * b
        return self._wrap(q), self._wrap(r[:db] if db > 0 else [])

    def exact_div(self, other) -> "Poly":
        if not self._same(other):
            return self._wrap([div_exact(c, other) for c in self.coeffs])
        if other.degree == 0:
            return self._wrap([div_exact(c, other.lead) for c in self.coeffs])
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def pseudo_rem(self, other: "Poly") -> "Poly":
        """lead(other)^(deg self - deg other + 1) * self mod other, division free."""
        r = list(self.coeffs)
        db, lb = other.degree, other.lead
        if len(r) - 1 < db:
            return self
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            r = [x * lb for x in r]
            if c:
                for j, b in enumerate(other.coeffs):
                    r[i - db + j] -= c * b
            r[i] = 0
        return self._wrap(r[:db])

    def content(self):
        g = 0
        for c in self.coeffs:
            g = _scalar_gcd(g, c)
        if self.coeffs and _sign(self.lead) < 0:
            g = -g
        return g

    def primitive(self) -> "Poly":
        """Divide by the content; the result has a positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        return self._wrap([div_exact(c, g) for c in self.coeffs])

    def scale(self, c) -> "Poly":
        """Multiply every coefficient by the coefficient-ring element ``c``."""
        return self._wrap([x * c for x in self.coeffs])

    # display and serialization
    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if isinstance(c, Poly):
                inner = c.to_str()
                neg = False
                if len([x for x in c.coeffs if x]) > 1:
                    inner = f"({inner})"
                elif inner.startswith("-"):
                    neg, inner = True, inner[1:]
                if mono:
                    body = mono if inner == "1" else f"{inner}*{mono}"
                else:
                    body = inner
            else:
                neg = c < 0
                a = format_scalar(abs(c))
                if mono:
                    body = mono if a == "1" else f"{a}*{mono}"
                else:
                    body = a
            parts.append(("-" if neg else "+") + body)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def to_json(self):
        return [c.to_json() if isinstance(c, Poly) else format_scalar(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data, var: str = "t", inner_var: str = "v") -> "Poly":
        out = []
        for c in data:
            if isinstance(c, list):
                out.append(cls.from_json(c, inner_var))
            else:
                out.append(to_scalar(c))
        return cls(out, var)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Gcd over the coefficient ring, via primitive pseudo-remainder sequences.

    The result is primitive-scaled and has a positive leading coefficient.
    Works for coefficients in Z, Q (via Gauss's lemma) and recursively for
    polynomial coefficients.
    """
    if not a or not b:
        p = b if not a else a
        if not p:
            return p
        c = p.content()
        return p.primitive().scale(-c if _sign(c) < 0 else c)
    c = _scalar_gcd(a.content(), b.content())
    if isinstance(c, Fraction):
        c = 1  # rational contents are units over Q
    pa, pb = a.primitive(), b.primitive()
    if pa.degree < pb.degree:
        pa, pb = pb, pa
    while pb:
        r = pa.pseudo_rem(pb)
        pa, pb = pb, (r.primitive() if r else r)
    return pa.primitive().scale(c)


# -------------------------------------------------------- rational functions


class RatFunc:
    """Quotient of polynomials kept in lowest terms.

    Canonical form: the common polynomial gcd is removed and the pair is
    scaled so that the denominator has integer coefficients with gcd 1 and a
    positive leading coefficient.
    """

    __slots__ = ("numer", "denom")

    def __init__(self, numer, denom=None, var: str | None = None, reduce: bool = True):
        if var is None:
            var = numer.var if isinstance(numer, Poly) else (denom.var if isinstance(denom, Poly) else "t")
        numer = Poly.lift(numer, var) if not isinstance(numer, Poly) else numer
        denom = Poly([1], var) if denom is None else (Poly.lift(denom, var) if not isinstance(denom, Poly) else denom)
        if not denom:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            numer, denom = self._canonical(numer, denom)
        self.numer = numer
        self.denom = denom

    @staticmethod
    def _canonical(n: Poly, d: Poly):
        if not n:
            return Poly([], d.var), Poly([1], d.var)
        if d.degree > 0 and n.degree >= 0:
            g = poly_gcd(n, d)
            if g.degree > 0 or isinstance(g.lead, Poly):
                n, d = n.exact_div(g), d.exact_div(g)
        s = _rational_content(d)
        if _sign(d.lead) < 0:
            s = -s
        if s != 1:
            n, d = n * (1 / s), d * (1 / s)
            n = n.map(_normalize_scalar)
            d = d.map(_normalize_scalar)
        return n, d

    @property
    def var(self):
        return self.denom.var

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        return RatFunc(Poly.lift(other, self.var) if not isinstance(other, Poly) else other, None, self.var, reduce=False)

    def __add__(self, other):
        o = self._coerce(other)
        if self.denom == o.denom:
            return RatFunc(self.numer + o.numer, self.denom)
        return RatFunc(self.numer * o.denom + o.numer * self.denom, self.denom * o.denom)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.numer, self.denom, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(self.numer * o.numer, self.denom * o.denom)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if not o.numer:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.numer * o.denom, self.denom * o.numer)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc(self.denom ** (-k), self.numer ** (-k))
        return RatFunc(self.numer ** k, self.denom ** k, reduce=False)

    def __bool__(self):
        return bool(self.numer)

    def __eq__(self, other):
        if not isinstance(other, (RatFunc, Poly)):
            if not other:
                return not self.numer
            other = Poly([other], self.var)
        if isinstance(other, Poly):
            other = RatFunc(other)
        return self.numer == other.numer and self.denom == other.denom

    def __hash__(self):
        return hash((self.numer, self.denom))

    def __call__(self, x):
        d = self.denom(x)
        if not d:
            raise ZeroDivisionError("pole of rational function")
        n = self.numer(x)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d

    def derivative(self) -> "RatFunc":
        n, d = self.numer, self.denom
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def series(self, count: int) -> list:
        return series_coeffs(self, count)

    def is_poly(self) -> bool:
        return self.denom.degree == 0 and not isinstance(self.denom.lead, Poly)

    def __repr__(self):
        return f"RatFunc({self.numer!r}, {self.denom!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self) -> str:
        n = self.numer.to_str()
        if self.denom == 1:
            return n
        if len([c for c in self.numer.coeffs if c]) > 1:
            n = f"({n})"
        return f"{n}/({self.denom.to_str()})"

    def to_json(self):
        return {"numer": self.numer.to_json(), "denom": self.denom.to_json()}


def _normalize_scalar(c):
    if isinstance(c, Poly):
        return c.map(_normalize_scalar)
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def series_coeffs(f, count: int) -> List:
    """First ``count`` Taylor coefficients of ``f`` at 0.

    ``f`` may be a :class:`RatFunc` or :class:`Poly`.  Requires a nonzero
    constant term in the denominator.
    """
    if isinstance(f, Poly):
        return [f[i] for i in range(count)]
    n, d = f.numer, f.denom
    d0 = d[0]
    if not d0:
        raise ZeroDivisionError("denominator vanishes at 0; no power series")
    out: list = []
    for k in range(count):
        acc = n[k]
        for i in range(1, min(k, d.degree) + 1):
            di = d[i]
            if di:
                acc = acc - di * out[k - i]
        out.append(_normalize_scalar(div_exact(acc, d0) if isinstance(acc, Poly) or isinstance(d0, Poly)
                                     else Fraction(acc) / d0))
    return out

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from expcomb.exact import Poly, RatFunc, div_exact, format_scalar, poly_gcd, series_coeffs

small = st.integers(-6, 6)
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(fracs, min_size=0, max_size=5).map(lambda cs: Poly(cs, "t"))
nonzero = polys.filter(bool)


def test_printing_and_json():
    p = Poly([1, F(1, 2), -3])
    assert p.to_str() == "-3*t^2+1/2*t+1"
    assert p.to_json() == ["1", "1/2", "-3"]
    assert Poly.from_json(p.to_json()) == p
    assert format_scalar(F(3, 4)) == "3/4"


def test_canonical_rational_function():
    f = RatFunc(Poly([0, 1]), Poly([1, -4, 1]))
    assert f == RatFunc(Poly([0, -1]), Poly([-1, 4, -1]))
    assert f.series(6) == [0, 1, 4, 15, 56, 209]
    assert f.to_json() == {"numer": ["0", "1"], "denom": ["1", "-4", "1"]}


def test_common_factor_cancels():
    f = RatFunc(Poly([-1, 0, 1]), Poly([1, 1]))
    assert f.is_poly() and f.numer == Poly([-1, 1])
    assert poly_gcd(Poly([-1, 0, 1]), Poly([1, 1])) == Poly([1, 1])


def test_exact_division_rejects_remainder():
    assert div_exact(6, 3) == 2
    with pytest.raises(ArithmeticError):
        Poly([1, 0, 1]).exact_div(Poly([1, 1]))


def test_evaluation_and_composition():
    assert Poly([1, 2])(F(1, 2)) == 2
    assert Poly([1, 2]).compose(Poly([0, 0, 1])) == Poly([1, 0, 2])


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly([], "t")


@given(polys, nonzero)
def test_divmod_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert not r or r.degree < b.degree


@settings(max_examples=50)
@given(nonzero, nonzero, nonzero)
def test_rational_arithmetic(a, b, c):
    f, g = RatFunc(a, b), RatFunc(c, b)
    assert (f + g) - g == f
    assert (f * g) / g == f


@given(st.lists(small, min_size=1, max_size=4))
def test_series_of_inverse(cs):
    cs[0] = 1
    f = RatFunc(Poly([1]), Poly(cs))
    s = series_coeffs(f, 12)
    # multiplying back by the denominator leaves 1 + O(t^12)
    back = (Poly(s) * Poly(cs)).truncate(12)
    assert back == Poly([1])

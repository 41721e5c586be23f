from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from expcomb.exact import Poly, RatFunc, series_coeffs
from expcomb.guess import (CFiniteSpec, ansatz_fit, c_to_r, evaluate_fit, find_rec, format_fit,
                           guess_rec, guess_rec1, harmonic, moment_basis, seq_from_rec)

SEQ = [1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316]


def test_guess_known_sequence():
    spec = guess_rec(SEQ)
    assert spec == CFiniteSpec((1, 4), (4, -1))
    assert c_to_r(spec, offset=1) == RatFunc(Poly([0, 1]), Poly([1, -4, 1]))
    assert c_to_r(spec) == RatFunc(Poly([1]), Poly([1, -4, 1]))


def test_symmetric_guess():
    # 1 - 4t + t^2 is palindromic, so the restricted search finds it too
    assert guess_rec1(SEQ[:7], 2, symmetric=True) == CFiniteSpec((1, 4), (4, -1))
    assert guess_rec1([1, 2, 4, 8, 16, 32, 64], 1, symmetric=True) is None


def test_no_recurrence():
    assert guess_rec([1, 2, 6, 24, 120, 720, 5040, 40320]) is None


def test_fibonacci_and_c_to_r_check():
    spec = guess_rec([0, 1, 1, 2, 3, 5, 8, 13, 21, 34])
    assert spec.as_lists() == [[0, 1], [1, 1]]
    assert series_coeffs(c_to_r(spec), 10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


specs = st.integers(1, 4).flatmap(lambda d: st.tuples(
    st.lists(st.integers(-9, 9), min_size=d, max_size=d).filter(any),
    st.lists(st.integers(-4, 4), min_size=d, max_size=d).filter(lambda c: c[-1] != 0)))


@settings(max_examples=60, deadline=None)
@given(specs)
def test_round_trip(spec_lists):
    init, coeffs = spec_lists
    data = seq_from_rec(CFiniteSpec(tuple(init), tuple(coeffs)), 4 * len(init) + 8)
    found = guess_rec(data)
    assert found is not None and found.order <= len(init)
    assert seq_from_rec(found, len(data)) == data
    assert series_coeffs(c_to_r(found), len(data)) == data


def test_holonomic_catalan():
    cat = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900]
    rec = find_rec(cat, 3)
    assert rec.order == 1
    for n in range(len(cat) - 1):
        assert rec.apply(cat, n) == 0
    assert str(rec) == "(-4*n-2)*a(n) + (n+2)*a(n+1) = 0"


def test_holonomic_needs_data():
    with pytest.raises(ValueError):
        find_rec([1, 2, 3], 4)


def test_harmonic():
    assert harmonic(4) == F(25, 12)
    assert harmonic(3, 2) == F(49, 36)
    assert harmonic(0) == 0


def test_basis_labels():
    labels = [lab for lab, _ in moment_basis(2, extra_powers=[-1])]
    for want in ["1", "n", "n^3", "H1", "n*H1", "n^2*H2", "H1^2", "H1*H2", "n^-1"]:
        assert want in labels
    assert len(labels) == len(set(labels))


def test_ansatz_recovers_harmonic_expression():
    basis = moment_basis(1)
    data = [(n, 2 * (n + 1) * harmonic(n) - 4 * n) for n in range(1, 20)]
    fit = ansatz_fit(data, basis)
    nonzero = {k: v for k, v in fit.items() if v}
    assert nonzero == {"n": -4, "H1": 2, "n*H1": 2}
    assert format_fit(nonzero) == "-4*n+2*H1+2*n*H1"
    assert evaluate_fit(nonzero, basis, 30) == 62 * harmonic(30) - 120


def test_ansatz_rejects_inconsistent_data():
    basis = moment_basis(1)
    data = [(n, F(1, n * n)) for n in range(1, 20)]
    assert ansatz_fit(data, basis) is None

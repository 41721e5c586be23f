"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Tolerances are pinned at the top.  Golden values are printed constants from
the literature, copied verbatim; where a printed value is wrong the test
checks the corrected value and also reports the printed one.
"""

import math
import random
from fractions import Fraction as F
from itertools import product

import mpmath
import pytest

from expcomb import diagmat, parking, queens, quicksort, spanning
from expcomb.exact import Poly, RatFunc, series_coeffs
from expcomb.guess import CFiniteSpec, c_to_r, find_rec, guess_rec, harmonic, seq_from_rec

ASYMPTOTIC_REL = 0.03
SCALED_REL = 1e-6
MC_SIGMAS = 3
QUEENS_ABS = 1e-9
JUBIN_VALUE_ABS = 1e-6
JUBIN_PARAM_ABS = 1e-3
TWO_SQUARES_PARAM_ABS = 1e-4
RASTER_FLOOR = 302


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail
    return emit


def tpoly(*coeffs, var="t"):
    return Poly(list(coeffs), var)


def H(n, k=1):
    return harmonic(n, k)


# ---------------------------------------------------------------- parking


def test_01_parking_counts(report):
    bad = []
    for n in range(1, 7):
        brute = sum(1 for p in product(range(1, n + 1), repeat=n) if parking.is_a_parking(p, 1))
        if not parking.count_parking(n, 1) == brute == (n + 1) ** (n - 1):
            bad.append(("a=1", n))
    for n in range(1, 11):
        for a in range(1, 7):
            if parking.count_parking(n, a) != a * (a + n) ** (n - 1):
                bad.append((a, n))
    report(1, not bad, f"parking counts, mismatches={bad}")


def _e1(n):
    s = sum(F((n + 1) ** k, math.factorial(k)) for k in range(n))
    return F(-n, 2) + F(math.factorial(n + 1), 2 * (n + 1) ** n) * s


def _factorial_moment_closed(k, n):
    E = _e1(n)
    if k == 1:
        return E
    if k == 2:
        return -F(7, 3) * (n + 1) * E + F(5, 12) * n**3 - F(1, 12) * n**2 - F(1, 3) * n
    if k == 3:
        return (F(-175, 192) * n**4 - F(283, 192) * n**3 + F(199, 192) * n**2 + F(259, 192) * n
                + (F(15, 32) * n**3 + F(521, 96) * n**2 + F(1219, 96) * n + F(743, 96)) * E)
    if k == 4:
        return (F(221, 1008) * n**6 + F(63737, 30240) * n**5 + F(101897, 15120) * n**4
                + F(22217, 5040) * n**3 - F(1375, 189) * n**2 - F(187463, 30240) * n
                + (F(-35, 16) * n**4 - F(449, 27) * n**3 - F(130243, 2520) * n**2
                   - F(7409, 105) * n - F(503803, 15120)) * E)
    return (F(-105845, 110592) * n**7 - F(2170159, 290304) * n**6 - F(99955651, 3870720) * n**5
            - F(30773609, 725760) * n**4 - F(94846903, 11612160) * n**3
            + F(24676991, 483840) * n**2 + F(392763901, 11612160) * n
            + (F(565, 2048) * n**6 + F(1005, 128) * n**5 + F(9832585, 165888) * n**4
               + F(1111349, 5184) * n**3 + F(826358527, 1935360) * n**2
               + F(159943787, 362880) * n + F(1024580441, 5806080)) * E)


@pytest.mark.slow
def test_02_parking_moments(report):
    bad = [(k, n) for k in range(1, 6) for n in range(3, 13)
           if parking.factorial_moment(k, n, 1) != _factorial_moment_closed(k, n)]
    n = 2000
    ratio = float(parking.e_area(n, 1)) / n ** 1.5
    target = math.sqrt(2 * math.pi) / 4
    rel = abs(ratio - target) / target
    ok = not bad and rel <= ASYMPTOTIC_REL
    report(2, ok, f"closed-form mismatches={bad}; E1(2000)/2000^1.5={ratio:.6f} "
                  f"vs {target:.6f}, rel err {rel:.4f} (tolerance {ASYMPTOTIC_REL})")


def test_03_bijection(report):
    bad = []
    for n, a in [(3, 1), (4, 1), (3, 2)]:
        for p in parking.enumerate_parking(n, a):
            f = parking.parking_to_forest(p, a)
            if parking.forest_to_parking(f) != tuple(p):
                bad.append(p)
    p = (5, 8, 4, 2, 1, 2, 1)
    f = parking.parking_to_forest(p, 2)
    want = {3: 6, 4: 3, 5: 9, 6: 2, 7: 1, 8: 2, 9: 1}
    ok = not bad and f.parent == want and parking.forest_to_parking(f) == p
    report(3, ok, f"round-trip failures={len(bad)}, worked example parent map={dict(sorted(f.parent.items()))}")


# ---------------------------------------------------------------- guessing


def test_04_guessing(report):
    seq = [1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316]
    spec = guess_rec(seq)
    gf = c_to_r(spec, offset=1)
    first = spec.as_lists() == [[1, 4], [4, -1]] and gf == RatFunc(tpoly(0, 1), tpoly(1, -4, 1))
    rng = random.Random(2024)
    failures = 0
    for _ in range(200):
        d = rng.randint(1, 5)
        coeffs = [rng.randint(-5, 5) for _ in range(d)]
        if coeffs[-1] == 0:
            coeffs[-1] = rng.choice([-1, 1])
        init = [rng.randint(-9, 9) for _ in range(d)]
        if not any(init):
            init[0] = 1
        data = seq_from_rec(CFiniteSpec(tuple(init), tuple(coeffs)), 4 * d + 8)
        found = guess_rec(data)
        # a lower-order recurrence may also fit; it must then generate the same data
        if found is None or found.order > d or seq_from_rec(found, len(data)) != data:
            failures += 1
            continue
        f = c_to_r(found)
        if f is None or series_coeffs(f, len(data)) != data:
            failures += 1
    report(4, first and failures == 0,
           f"GuessRec={[[str(x) for x in part] for part in spec.as_lists()]}, CtoR={gf}, random round-trip failures={failures}/200")


# ---------------------------------------------------------------- spanning

F_PRINTED = {
    1: (tpoly(0, 1), tpoly(1, -1)),
    2: (tpoly(0, 1), tpoly(1, -4, 1)),
    3: (tpoly(0, 1, 0, -1), tpoly(1, -15, 32, -15, 1)),
    4: (tpoly(0, 1, 0, -49, 112, -49, 0, 1),
        tpoly(1, -56, 672, -2632, 4094, -2632, 672, -56, 1)),
    5: (tpoly(0, 1, 0, -1440, 26752, -185889, 574750, -708928, 0, 708928, -574750,
              185889, -26752, 1440, 0, -1),
        tpoly(1, -209, 11936, -274208, 3112032, -19456019, 70651107, -152325888,
              196664896, -152325888, 70651107, -19456019, 3112032, -274208, 11936, -209, 1)),
}


def _vertical_printed():
    v = Poly.x("v")
    g2 = RatFunc(Poly([0, v], "t"), Poly([1, -(2 * v + 2), 1], "t"))
    p1 = 3 * v**2 + 8 * v + 4
    p2 = 10 * v**2 + 16 * v + 6
    g3 = RatFunc(Poly([0, v**2, 0, -(v**2)], "t"), Poly([1, -p1, p2, -p1, 1], "t"))
    return {2: g2, 3: g3}


@pytest.mark.slow
def test_05_spanning_gfs(report):
    notes = []
    for k, (num, den) in F_PRINTED.items():
        if spanning.gf_spanning_grid(k) != RatFunc(num, den):
            notes.append(f"F{k}")
    for k, g in _vertical_printed().items():
        if spanning.ver_gf(k) != g:
            notes.append(f"g{k}")
    C = {2: tpoly(-1, 1), 3: tpoly(1, -8, 17, -8, 1)}
    for k in (2, 3):
        bound = F_PRINTED[k][1] ** 2 * C[k]
        den = spanning.gf_two_forest_grid(k).denom
        if bound.divmod(den)[1]:
            notes.append(f"two-forest k={k}")
    report(5, not notes, f"F1-F5, g2, g3 and two-forest denominators; mismatches={notes}")


def test_06_resistance(report):
    bad = []
    for k in range(1, 4):
        C = spanning.resistance_bound_constant(k)
        # the routing argument behind the bound needs two distinct end
        # columns; at n = 1 the grid is a path with resistance k - 1
        for n in range(2, 41):
            R = spanning.joint_resistance(k, n)
            lo = F(n - 1, k)
            if not lo <= R <= lo + C:
                bad.append((k, n, R))
    report(6, not bad, f"resistance within the routing bounds for k<=3, 2<=n<=40; violations={bad}")


# ---------------------------------------------------------------- almost-diagonal


def _random_template(rng):
    k1, k2 = rng.randint(1, 3), rng.randint(1, 3)
    row = [rng.randint(-3, 3) for _ in range(k1)]
    col = [row[0]] + [rng.randint(-3, 3) for _ in range(k2 - 1)]
    if not any(row + col):
        row[0] = col[0] = 1
    return row, col


@pytest.mark.slow
def test_07_almost_diagonal(report):
    target = RatFunc(tpoly(-1), tpoly(-1, 2, -12, 45))
    fam = diagmat.gf_family([2, 3], [2, 4, 5])
    sym, _ = diagmat.gf_symbolic([2, 3], [2, 4, 5])
    worked = fam == target and sym == target
    rng = random.Random(7)
    bad = []
    checked = 0
    while checked < 12:
        row, col = _random_template(rng)
        for mode in (diagmat.DET, diagmat.PERM):
            seq = [1] + diagmat.det_sequence(row, col, 1, 12, mode)
            sym, _ = diagmat.gf_symbolic(row, col, mode)
            if series_coeffs(sym, 13) != seq:
                bad.append((row, col, mode, "series"))
            try:
                fam = diagmat.gf_family(row, col, mode)
            except ValueError:
                bad.append((row, col, mode, "no guess"))
                continue
            if fam != sym:
                bad.append((row, col, mode, "family != symbolic"))
        checked += 1
    report(7, worked and not bad,
           f"worked example {'ok' if worked else 'WRONG'}; {checked} random templates x det/perm, "
           f"failures={bad}")


# ---------------------------------------------------------------- quicksort

THREE_PIVOT_MEANS = [F(x) for x in
                     "0 1 8/3 14/3 106/15 49/5 64/5 561/35 1226/63 5192/225 465316/17325 "
                     "533509/17325 714008/20475 61615768/1576575 342234824/7882875 "
                     "754600981/15765750 1404956027/26801775 15298397599/268017750 "
                     "31489234438/509233725 1697926310039/25461686250".split()]
SWAP_IV_MEANS = [F(x) for x in
                 "0 1/2 7/6 2 179/60 41/10 747/140 187/28 20459/2520 1013/105 312083/27720 "
                 "25631/1980 353201/24024 1488737/90090 6634189/360360 814939/40040 "
                 "273855917/12252240 4983019/204204 97930039/3695120 20210819/705432".split()]
SWAP_V_MEANS = [F(x) for x in
                "0 1/2 4/3 20/9 155/48 1957/450 2341/420 4055/588 55829/6720 794/81 "
                "630547/55440 170095/13068 12735487/864864 3864281/234234 2521865/137592 "
                "36424327/1801800 4343228489/196035840 107768347/4463316 "
                "15673532207/598609440 1136599735/40209624".split()]
DUAL_P5 = [0, 0, 0, 0, 0, 0, F(1, 3), F(4, 15), F(1, 5), F(1, 15), F(2, 15)]
PER_PROB_9_5_5 = [F(1, 70), 0, F(8, 35), 0, F(18, 35), 0, F(8, 35), 0, F(1, 70)]


def test_08_quicksort_golden(report):
    notes = []
    for n in range(1, 6):
        p = quicksort.pgf(quicksort.DUAL, n)
        if p(1) != 1:
            notes.append(f"P{n} not normalized")
    if list(quicksort.pgf(quicksort.DUAL, 5).coeffs) != DUAL_P5:
        notes.append("P5")
    if list(quicksort.per_prob(9, 5, 5).coeffs) != PER_PROB_9_5_5:
        notes.append("per_prob(9,5,5)")
    for name, v, want in [("ThreePivot", quicksort.THREE_PIVOT, THREE_PIVOT_MEANS),
                          ("SwapIV", quicksort.SWAP_IV, SWAP_IV_MEANS),
                          ("SwapV", quicksort.SWAP_V, SWAP_V_MEANS)]:
        if quicksort.mean_sequence(v, 20) != want:
            notes.append(name)
    better = all(SWAP_V_MEANS[n - 1] < SWAP_IV_MEANS[n - 1] for n in range(14, 21))
    if not better:
        notes.append("SwapV not better for n>=14")
    report(8, not notes, f"golden PGFs and mean lists; mismatches={notes}")


def _closed_forms():
    nulla = {
        1: lambda n: 2 * (n + 1) * H(n) - 4 * n,
        2: lambda n: n * (7 * n + 13) - 2 * (n + 1) * H(n) - 4 * (n + 1) ** 2 * H(n, 2),
        3: lambda n: (-n * (19 * n**2 + 81 * n + 104) + (14 * n + 14) * H(n)
                      + 12 * (n + 1) ** 2 * H(n, 2) + 16 * (n + 1) ** 3 * H(n, 3)),
        4: lambda n: (F(1, 9) * n * (2260 * n**3 + 9658 * n**2 + 15497 * n + 11357)
                      - 2 * (n + 1) * (42 * n**2 + 78 * n + 77) * H(n)
                      + 12 * (n + 1) ** 2 * H(n) ** 2
                      + (-4 * (42 * n**2 + 78 * n + 31) * (n + 1) ** 2
                         + 48 * (n + 1) ** 3 * H(n)) * H(n, 2)
                      + 48 * (n + 1) ** 4 * H(n, 2) ** 2
                      - 96 * (n + 1) ** 3 * H(n, 3) - 96 * (n + 1) ** 4 * H(n, 4)),
    }
    swap1 = {
        1: lambda n: (n + 1) * H(n) - 2 * n,
        2: lambda n: 2 * n * (n + 2) - (n + 1) * H(n) - (n + 1) ** 2 * H(n, 2),
        3: lambda n: (-F(9, 4) * n * (n + 3) ** 2 + (4 * n + 4) * H(n)
                      + 3 * (n + 1) ** 2 * H(n, 2) + 2 * (n + 1) ** 3 * H(n, 3)),
        4: lambda n: (F(1, 18) * n * (335 * n**3 + 1568 * n**2 + 3067 * n + 2770)
                      - 3 * (n + 1) * (4 * n**2 + 8 * n + 9) * H(n)
                      + 3 * (n + 1) ** 2 * H(n) ** 2
                      + (-(12 * n**2 + 24 * n + 19) * (n + 1) ** 2
                         + 6 * (n + 1) ** 3 * H(n)) * H(n, 2)
                      + 3 * (n + 1) ** 4 * H(n, 2) ** 2
                      - 12 * (n + 1) ** 3 * H(n, 3) - 6 * (n + 1) ** 4 * H(n, 4)),
    }
    swap2 = {
        1: swap1[1],
        2: lambda n: (F(1, 6) * n * (11 * n + 17) - F(1, 3) * (n + 1) * H(n)
                      - (n + 1) ** 2 * H(n, 2)),
        3: lambda n: (-F(1, 6) * n * (14 * n**2 + 57 * n + 73) + (2 * n + 2) * H(n)
                      + (n + 1) ** 2 * H(n, 2) + 2 * (n + 1) ** 3 * H(n, 3)),
        4: lambda n: (F(1, 90) * n * (1496 * n**3 + 5531 * n**2 + 8527 * n + 6922)
                      - F(1, 15) * (n + 1) * (55 * n**2 + 85 * n + 173) * H(n)
                      + F(1, 3) * (n + 1) ** 2 * H(n) ** 2
                      + (-F(1, 3) * (33 * n**2 + 51 * n + 25) * (n + 1) ** 2
                         + 2 * (n + 1) ** 3 * H(n)) * H(n, 2)
                      + 3 * (n + 1) ** 4 * H(n, 2) ** 2
                      - 4 * (n + 1) ** 3 * H(n, 3) - 6 * (n + 1) ** 4 * H(n, 4)),
    }
    swap3 = {
        1: lambda n: (n + 1) * H(n) - F(4, 3) * n - F(1, 3),
        2: lambda n: (2 * n**2 + F(187, 45) * n + F(7, 45) - F(2, 3 * n)
                      - (n + 1) ** 2 * H(n, 2) - (n + 1) * H(n)),
    }
    swap4 = {
        1: lambda n: (n + 2) * H(n) - F(5, 2) * n - F(1, 2),
        # printed with -(n^2 - 2n - 2) H2, which matches no n; see SWAP_IV_VAR_PRINTED
        2: lambda n: (2 * n**2 - F(215, 12) * n + F(1, 12) + (11 * n + 14) * H(n)
                      - (n**2 + 2 * n + 2) * H(n, 2) - (2 * n + 2) * H(n) ** 2),
    }
    dual_swaps = {1: lambda n: F(4, 5) * (n + 1) * H(n) - F(39, 25) * n - F(1, 100)}
    return [("NullaComparisons", quicksort.NULLA, nulla),
            ("DualComparisons", quicksort.DUAL, nulla),
            ("SwapI", quicksort.SWAP_I, swap1),
            ("SwapII", quicksort.SWAP_II, swap2),
            ("SwapIII", quicksort.SWAP_III, swap3),
            ("SwapIV", quicksort.SWAP_IV, swap4),
            ("DualSwaps", quicksort.DUAL_SWAPS, dual_swaps)]




def SWAP_IV_VAR_PRINTED(n):
    return (2 * n**2 - F(215, 12) * n + F(1, 12) + (11 * n + 14) * H(n)
            - (n**2 - 2 * n - 2) * H(n, 2) - (2 * n + 2) * H(n) ** 2)


# thresholds found by scanning n = 1..20; frozen so that a regression shows up
EXPECTED_N0 = {("SwapIII", 1): 2, ("SwapIII", 2): 4, ("SwapIV", 2): 2, ("DualSwaps", 1): 4}


@pytest.mark.slow
def test_09_quicksort_closed_forms(report):
    N = 20
    found, bad = {}, []
    for name, variant, forms in _closed_forms():
        r = max(forms)
        table = {n: quicksort.moments(variant, n, r) for n in range(1, N + 1)}
        for k, formula in forms.items():
            n0 = quicksort.validity_threshold({n: ms[k - 1] for n, ms in table.items()}, formula)
            found[(name, k)] = n0
            if n0 != EXPECTED_N0.get((name, k), 1):
                bad.append((name, k, n0))
    printed = {n: quicksort.moments(quicksort.SWAP_IV, n, 2)[1] for n in range(1, N + 1)}
    printed_n0 = quicksort.validity_threshold(printed, SWAP_IV_VAR_PRINTED)
    summary = ", ".join(f"{nm}/m{k}:n0={n0}" for (nm, k), n0 in found.items())
    report(9, not bad, f"{summary}; unexpected={bad}; "
                       f"SwapIV variance as printed holds for no n (n0={printed_n0}), sign-corrected used")


def test_10_recurrence_discovery(report):
    means = quicksort.mean_sequence(quicksort.THREE_PIVOT, 40)
    rec = find_rec(means, 8, start=1)
    n = Poly.x("n")
    printed = [3 * n**4 - 5 * n**3 - 6 * n**2 + 80 * n + 96,
               -12 * n**4 - 13 * n**3 + 12 * n**2 - 59 * n - 24,
               18 * n**4 + 69 * n**3 + 81 * n**2 + 30 * n,
               -12 * n**4 - 79 * n**3 - 174 * n**2 - 149 * n - 42,
               3 * n**4 + 28 * n**3 + 87 * n**2 + 98 * n + 24]
    ok = rec is not None and rec.order == 4 and list(rec.coeff_polys) == printed
    report(10, ok, f"operator: {rec}")


SCALED_SWAP_IV_100 = [0.7810052982, 3.942047050, 9.146681877, 37.12169647,
                      137.7143092, 613.5286860, 2872.409923, 14709.75560]


@pytest.mark.slow
def test_11_limiting_distribution(report):
    got = quicksort.scaled_moments(quicksort.SWAP_IV, 100, 10)
    rel = max(abs(g - w) / abs(w) for g, w in zip(got, SCALED_SWAP_IV_100))
    ok = len(got) == 8 and rel <= SCALED_REL
    report(11, ok, f"max relative error {rel:.2e} (tolerance {SCALED_REL})")


@pytest.mark.slow
def test_12_monte_carlo(report):
    exact = quicksort.mean_sequence(quicksort.THREE_PIVOT, 50)
    rows, ok = [], True
    for n in range(10, 51, 10):
        res = quicksort.mc_run(quicksort.MCConfig(n=n, k=3, trials=5000, seed=12))
        z = (res["mean"] - float(exact[n - 1])) / res["stderr"]
        rows.append(f"n={n}:z={z:+.2f}")
        ok &= abs(z) <= MC_SIGMAS
    report(12, ok, f"ThreePivot MC vs exact means, {' '.join(rows)}")


# ---------------------------------------------------------------- queens


def _surd_cases():
    mpmath.mp.dps = 40
    r3, r217, r42 = mpmath.sqrt(3), mpmath.sqrt(217), mpmath.sqrt(42)
    h = (3 - r3) / 6
    a_spt = 2 * (8 - r42) / 11
    return [
        (queens.HEXAGON, (h, h, h, h), (2 - r3) / 2, 0.1339745962),
        (queens.TWO_SQUARES, ((19 - r217) / 18, mpmath.mpf(13) / 18 - r217 / 126),
         mpmath.mpf(289) / 81 - 19 * r217 / 81, 0.112500281),
        (queens.TWO_TRIANGLES_SAME, ((3 - r3) / 4, mpmath.mpf(1) / 2),
         mpmath.mpf(3) / 4 - 3 * r3 / 8, 0.1004809470),
        (queens.SQUARE_PLUS_TRIANGLE, (a_spt, (4 - a_spt) / 7),
         mpmath.mpf(636) / 121 - 96 * r42 / 121, 0.1144536616),
    ]


def test_13_queens_exact(report):
    notes = []
    j = queens.areas(queens.JUBIN, queens.JUBIN_PARAMS)
    g = queens.exact_areas(queens.JUBIN, queens.JUBIN_PARAMS)
    if not (j.white == j.black == g.white == g.black == F(7, 48)):
        notes.append("Jubin")
    if queens.areas(queens.RECTANGLE, (F(1, 3), F(1, 3))).value != F(1, 9):
        notes.append("Rectangle")
    if queens.areas(queens.TRIANGLE, (F(1, 2),)).value != F(1, 8):
        notes.append("Triangle")
    for fam, params, surd, printed in _surd_cases():
        rep = queens.verify_candidate(fam, params)
        if not (rep.balanced and rep.stationary and abs(rep.value - surd) <= QUEENS_ABS):
            notes.append(fam.name)
        # the printed decimal for two squares is off in its ninth digit; the
        # surd is authoritative and the decimal is only checked loosely
        slack = 1e-8 if fam is queens.TWO_SQUARES else QUEENS_ABS
        if abs(float(surd) - printed) > slack:
            notes.append(f"{fam.name} decimal")
    report(13, not notes, f"exact areas and four verified optima; failures={notes}")


@pytest.mark.slow
def test_14_queens_search(report):
    jub = queens.optimize(queens.JUBIN, starts=50, seed=0)
    dv = abs(jub.value - 7 / 48)
    dp = max(abs(x - float(y)) for x, y in zip(jub.params, queens.JUBIN_PARAMS))
    sq = queens.optimize(queens.TWO_SQUARES, seed=0)
    r217 = math.sqrt(217)
    want = ((19 - r217) / 18, 13 / 18 - r217 / 126)
    ds = max(abs(x - y) for x, y in zip(sq.params, want))
    ok = dv <= JUBIN_VALUE_ABS and dp <= JUBIN_PARAM_ABS and ds <= TWO_SQUARES_PARAM_ABS
    report(14, ok, f"Jubin value err {dv:.1e}, param err {dp:.1e}; two squares param err {ds:.1e}")


@pytest.mark.slow
def test_15_discrete_board(report):
    small = {n: queens.exhaustive_small(n) for n in (3, 4, 5)}
    board = queens.rasterize(queens.JUBIN, queens.JUBIN_PARAMS, 48)
    val = queens.board_value(board)
    ok = small == {3: 1, 4: 2, 5: 4} and val >= RASTER_FLOOR
    report(15, ok, f"a(3..5)={list(small.values())}; rasterized Jubin n=48 min(|W|,|B|)={val} "
                   f"(floor {RASTER_FLOOR})")

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetabound import asymptotics as asy
from thetabound.errors import BadParams, BudgetExceeded


@settings(max_examples=40, deadline=None)
# mpmath's reference stops converging for z near 0 with |v| > 0
@given(st.integers(-8, 8), st.one_of(st.just(0.0), st.floats(1e-3, 80.0)))
def test_bessel_matches_mpmath(v, z):
    got = asy.bessel_I(v, z, 30)
    with mpmath.workdps(40):
        want = mpmath.besseli(v, z)
    if want == 0:
        assert got == 0
    else:
        assert abs(got / want - 1) < mpmath.mpf(10) ** -25


def test_bessel_known_value():
    assert mpmath.nstr(asy.bessel_I(5, 10, 20), 14) == "777.18828640326"
    assert asy.bessel_I(-5, 10) == asy.bessel_I(5, 10)
    assert asy.bessel_I(0, 0) == 1 and asy.bessel_I(3, 0) == 0
    with pytest.raises(ValueError):
        asy.bessel_I(1, -1)
    with pytest.raises(ValueError):
        asy.bessel_I(1, 1, digits=5)


def test_envelope_ratio_exact():
    assert asy.ENVELOPE_HIGH / asy.ENVELOPE_LOW == Fraction(101, 99)
    for n in (10**3, 10**6, 10**9):
        lo, hi = asy.g_envelopes(1, 4, n, 40)
        assert abs(hi / lo - mpmath.mpf(101) / 99) < mpmath.mpf(10) ** -35


def test_main_term_variants_differ_by_delta_squared():
    d = asy.delta_M(1, 4)
    assert d == 105
    for n in (100, 10**4):
        a = asy.g_main_term(1, 4, n, 30, asy.PRINTED)
        b = asy.g_main_term(1, 4, n, 30, asy.CORRECTED)
        assert abs(b / a - d * d) < mpmath.mpf(10) ** -20


def test_main_leading_tracks_bessel_form():
    for n in (10**6, 10**8):
        ratio = asy.g_main_leading(1, 4, n) / asy.g_main_term(1, 4, n)
        assert abs(ratio - 1) < 0.01


def test_j_main_term_positive():
    assert asy.j_main_term(2, 9, 1000) > 0


def test_preconditions():
    with pytest.raises(BadParams):
        asy.g_main_term(2, 4, 10)
    with pytest.raises(BadParams):
        asy.g_main_term(1, 4, 0)
    with pytest.raises(BadParams):
        asy.compare_exact_vs_main(1, 4, 0)
    with pytest.raises(BudgetExceeded):
        asy.compare_exact_vs_main(1, 4, asy.TABLE_BUDGET + 1)


def test_threshold_consistency():
    for M in range(4, 51):
        n = asy.n_threshold(M)
        assert Fraction(n) >= (Fraction(463, 100) * M) ** 9 > n - 1
        assert asy.X_of(n, M) >= 540 * M**5


def test_corrected_ratio_converges(g14_table):
    small = asy.compare_exact_vs_main(1, 4, 10_000, 30, asy.CORRECTED, table=g14_table)
    big = asy.compare_exact_vs_main(1, 4, 50_000, 30, asy.CORRECTED, table=g14_table)
    assert small.exact == g14_table[10_000]
    assert abs(big.ratio - 1) <= 0.10
    assert abs(big.ratio - 1) < abs(small.ratio - 1)


def test_printed_ratio_tends_to_delta_squared(g14_table):
    small = asy.compare_exact_vs_main(1, 4, 10_000, table=g14_table)
    big = asy.compare_exact_vs_main(1, 4, 50_000, table=g14_table)
    target = asy.delta_M(1, 4) ** 2
    assert abs(big.ratio / target - 1) < abs(small.ratio / target - 1) < 0.1

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetabound import merca
from thetabound._printed import N_FORMS
from thetabound.errors import BadOrder, BadParams, CaseMismatch, RangeError
from thetabound.merca import (
    CASE1,
    CASE2,
    CASE3,
    FOUR,
    FULL,
    H,
    SPECIAL_R2S,
    THREE_MINUS,
    THREE_PLUS,
    MercaParams,
    build_series,
    classify,
    conjecture_series,
    decomposition_factors,
    generalized_offset,
    generalized_series,
    normalize_params,
    numerator_series,
    scan,
    t_exponents,
)
from thetabound.partitions import g_table, j_table
from thetabound.series import Series

import oracles


@st.composite
def pairs(draw, rmax=200):
    r = draw(st.integers(3, rmax))
    s = draw(st.integers(1, (r - 1) // 2))
    if gcd(r, s) != 1:
        s = 1
    return r, s


# -- parameters ----------------------------------------------------------


def test_dispatch_exhaustive():
    for r in range(3, 201):
        for s in range(1, (r + 1) // 2):
            if 2 * s >= r or gcd(r, s) != 1:
                continue
            got = classify(r, s)
            assert got == oracles.brute_classify(r, s), (r, s)
            assert (got == CASE1) == (r % 2 == 0 and (r + s) % 3 != 0)


def test_dispatch_r_even_is_not_enough():
    assert classify(8, 1) == CASE3
    assert classify(4, 1) == CASE1
    assert classify(9, 2) == CASE2
    assert classify(2, 1) == SPECIAL_R2S


def test_normalize_examples():
    assert normalize_params(6, 2, 1) == MercaParams(3, 1, 1)
    assert normalize_params(6, 2, 1).case == CASE3
    assert normalize_params(10, 5, 1).case == SPECIAL_R2S
    p = normalize_params(12, 7, 1)
    assert (p.r, p.s, p.case) == (12, 5, CASE1)
    with pytest.raises(BadParams):
        normalize_params(3, 3, 1)
    with pytest.raises(BadParams):
        normalize_params(3, 0, 1)


def test_params_validation():
    with pytest.raises(BadParams):
        MercaParams(4, 2, 1)
    with pytest.raises(BadParams):
        MercaParams(5, 3, 1)
    with pytest.raises(BadParams):
        MercaParams(5, 2, 0)
    with pytest.raises(BadParams):
        MercaParams(5, 2, 1, CASE1)


# -- exponents -------------------------------------------------------------


def test_t_exponents_examples():
    assert t_exponents(MercaParams(4, 1, 1), 0).as_tuple() == (0, 3, 7, 12)
    assert t_exponents(MercaParams(9, 2, 5), 0).t1 == 0
    p = 6
    assert t_exponents(MercaParams(2, 1, 1), p - 1).t4 == (p + 1) * (2 * p * 2 - 2 + 2) == 168


@settings(max_examples=60)
@given(pairs(), st.integers(1, 50))
def test_interval_ordering(rs, k):
    mp = MercaParams(*rs, k)
    prev = None
    for j in range(201):
        t = t_exponents(mp, j).as_tuple()
        assert 0 <= t[0] < t[1] < t[2] < t[3]
        if prev is not None:
            assert prev[3] < t[0]
        prev = t


@settings(max_examples=60)
@given(pairs(), st.integers(1, 50))
def test_t4_factorization(rs, k):
    r, s = rs
    mp = MercaParams(r, s, k)
    for p in range(1, 201):
        assert t_exponents(mp, p - 1).t4 == (p + k) * (2 * p * r - r + 2 * s)


def test_numerator_4_1_1():
    num = numerator_series(MercaParams(4, 1, 1), 12)
    assert {i: c for i, c in enumerate(num.coeffs) if c} == {0: 1, 3: -1, 7: -1, 12: 1}


@pytest.mark.parametrize("rs", [(4, 1), (9, 2), (7, 3), (2, 1)])
@pytest.mark.parametrize("k", [1, 2, 5])
def test_numerator_equals_direct_sum(rs, k):
    mp = MercaParams(*rs, k)
    n = 600
    shifted = numerator_series(mp, n).shift(mp.shift)
    assert shifted == Series.from_list(_direct_numerator(mp, n), n)


def _direct_numerator(mp, n):
    r, s, k = mp.r, mp.s, mp.k
    out = [0] * (n + 1)
    j = k
    while r * j * (j + 1) // 2 - s * j <= n:
        sign = (-1) ** (j + k)
        base = r * j * (j + 1) // 2
        out[base - s * j] += sign
        if base + (j + 1) * s <= n:
            out[base + (j + 1) * s] -= sign
        j += 1
    return out


# -- series ----------------------------------------------------------------


@pytest.mark.parametrize("rs,k", [((2, 1), 1), ((3, 1), 2), ((5, 2), 1), ((4, 1), 3)])
def test_full_matches_naive_oracle(rs, k):
    mp = MercaParams(*rs, k)
    n = 250
    assert list(build_series(mp, n, FULL).coeffs) == oracles.direct_conjecture(*rs, k, n)


@settings(max_examples=25, deadline=None)
@given(pairs(30), st.integers(1, 4))
def test_full_leading_term(rs, k):
    mp = MercaParams(*rs, k)
    n = mp.shift + 5
    ser = build_series(mp, n, FULL)
    assert ser[mp.shift] == 1
    assert all(c == 0 for c in ser.coeffs[: mp.shift])


def test_four_series_counterexample():
    rep = scan(build_series(MercaParams(12, 1, 1), 5000, FOUR))
    assert rep.first_negative == 49 and rep.min_value == -1 and rep.negative_count == 1


def test_three_minus_2_1_clean():
    rep = scan(build_series(MercaParams(2, 1, 1), 10000, THREE_MINUS))
    assert rep.clean and rep.min_value >= 0


@pytest.mark.parametrize("rs", [(2, 1), (3, 1)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_proved_families_scan_clean(rs, k):
    mp = MercaParams(*rs, k)
    ser = build_series(mp, 3000, FULL)
    assert scan(ser).negative_count == 0
    assert ser == conjecture_series(mp, 3000)


def test_denominator_case_checks():
    with pytest.raises(CaseMismatch):
        build_series(MercaParams(7, 3, 1), 10, THREE_PLUS)
    with pytest.raises(CaseMismatch):
        build_series(MercaParams(9, 2, 1), 10, THREE_MINUS)
    with pytest.raises(BadOrder):
        build_series(MercaParams(9, 2, 1), -1, FULL)
    with pytest.raises(ValueError):
        build_series(MercaParams(9, 2, 1), 10, "NOPE")


def test_scan_basics():
    rep = scan(Series.from_list([1, -1]))
    assert (rep.min_value, rep.min_index, rep.first_negative, rep.negative_count) == (-1, 1, 1, 1)
    clean = scan(Series.from_list([1, 0, 2]))
    assert clean.first_negative is None and clean.zero_count == 1 and clean.clean
    with pytest.raises(RangeError):
        scan(Series.from_list([1, 2]), 0, 5)
    with pytest.raises(RangeError):
        scan(Series.from_list([1, 2]), 2, 1)


@settings(max_examples=40)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=40))
def test_scan_invariant(c):
    rep = scan(Series.from_list(c))
    assert (rep.first_negative is None) == (rep.negative_count == 0) == (rep.min_value >= 0)
    assert rep.min_value == min(c)


# -- generalized series -------------------------------------------------------


def test_generalized_parity_case_clean():
    rep = scan(generalized_series(5, 1, 5, 2, 2000))
    assert rep.negative_count == 0


def test_generalized_validation():
    with pytest.raises(BadParams):
        generalized_series(5, 1, 3, 2, 10)
    with pytest.raises(BadParams):
        generalized_series(5, 1, 5, 5, 10)
    with pytest.raises(BadParams):
        generalized_series(5, 5, 5, 2, 10)


def test_generalized_offset_for_ell_one():
    assert generalized_offset(3, 1, 5, 1) == 1
    assert generalized_offset(5, 1, 5, 2) == 0
    ser = generalized_series(3, 1, 5, 1, 50)
    assert ser[0] != 0  # q^-1 term lands at index 0


@pytest.mark.parametrize("R,S,k,ell", [(5, 1, 5, 2), (5, 1, 6, 2), (7, 2, 5, 3), (3, 1, 6, 2)])
def test_generalized_constant_term(R, S, k, ell):
    off = generalized_offset(R, S, k, ell)
    ser = generalized_series(R, S, k, ell, 200)
    lowest = min(e for e, _ in merca.generalized_terms(R, S, k, ell))
    if lowest + off > 0:
        assert ser[0] == 0
    # direct expansion of the two theta sums
    sign = (-1) ** (k - 1)
    num = [0] * 201
    for j in range(-k + 1, k + 1):
        if -ell + 1 <= j <= ell:
            continue
        e = R * j * (j + 1) // 2 + S * j + off
        if e <= 200:
            num[e] += sign * (-1) ** j
    den = oracles.naive_product(
        [e for a in (S, R - S, R) for e in range(a, 201, R)], 200
    )
    assert list(ser.coeffs) == oracles.naive_mul(num, oracles.naive_inverse(den, 200), 200)


def test_generalized_exploratory_scan_runs():
    # conjectural regime: only record that the scan completes
    rep = scan(generalized_series(3, 1, 5, 1, 1000))
    assert rep.hi == 1000


# -- decompositions -----------------------------------------------------------


@pytest.mark.parametrize("rs", [(4, 1), (9, 2), (7, 3), (2, 1), (8, 1)])
def test_product_decomposition(rs):
    mp = MercaParams(*rs, 1)
    n = 2000
    fin, tail = decomposition_factors(mp, n)
    whole = build_series(MercaParams(*rs, 1), n, H)
    num = numerator_series(mp, n)
    assert num * fin * tail == whole
    r, s = rs
    if mp.case == CASE1:
        assert list(tail.coeffs) == g_table(s, r, n)
    if mp.case == CASE2:
        assert list(tail.coeffs) == j_table(s, r, n)


@pytest.mark.parametrize("rs", [(4, 1), (10, 3)])
def test_h_convolution(rs):
    r, s = rs
    mp = MercaParams(r, s, 1)
    assert mp.case == CASE1
    n = 2000
    b = build_series(mp, n, FOUR)
    h = build_series(mp, n, H)
    assert list(h.coeffs) == merca.convolve_tables(list(b.coeffs), g_table(s, r, n), n)


# -- case lower bounds ---------------------------------------------------------


@pytest.mark.parametrize(
    "family,rs,k,kind",
    [("D", (9, 2), 19, THREE_PLUS), ("D", (9, 2), 1, THREE_PLUS), ("E", (3, 1), 1, THREE_MINUS)],
)
def test_block_lower_bounds_hold(family, rs, k, kind):
    r, s = rs
    mp = MercaParams(r, s, k)
    n_max = 12000
    ser = build_series(mp, n_max, kind)
    den = 2 * (s * (r - s) * (r + s) if family == "D" else s * (r - s) * (2 * r - s))
    forms = N_FORMS[family]
    p = 1
    checked = 0
    while t_exponents(mp, p).t4 <= n_max:
        prev, t = t_exponents(mp, p - 1), t_exponents(mp, p)
        blocks = [(prev.t4, t.t1), (t.t1, t.t2), (t.t2, t.t3), (t.t3, t.t4)]
        for i, (lo, hi) in enumerate(blocks):
            step = max(1, (hi - lo) // 50)
            for n in range(lo, hi, step):
                bound = Fraction(forms[i](r, s, k, n, p), den)
                assert ser[n] >= bound, (p, i, n)
                checked += 1
        p += 1
    assert checked > 500

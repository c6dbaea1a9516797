from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetabound.errors import BadParams, CaseMismatch, NotCoprime
from thetabound.partitions import (
    MINUS,
    PLUS,
    PartsSpec,
    g_table,
    j_table,
    p2_window,
    p3_bound_data,
    p4_bound_data,
    pairwise_coprime,
    partitions_with_parts,
)
from thetabound.merca import convolve_tables

import oracles


def table(parts, n):
    return partitions_with_parts(PartsSpec(tuple(parts)), n)


def test_odd_parts_small():
    assert table([1, 3, 5, 7], 8)[8] == 6
    t = table([1, 3, 5, 7], 20)
    assert t == [oracles.count_partitions([1, 3, 5, 7], n) for n in range(21)]


def test_empty_parts():
    assert table([], 5) == [1, 0, 0, 0, 0, 0]
    assert table([], 0) == [1]


def test_two_parts_window():
    t = table([1, 2], 6)
    assert t[6] == 4 == 6 // 2 + 1
    f, window = p2_window(6, 2, 3)
    assert f == 1 and table([2, 3], 6)[6] in window
    f, window = p2_window(0, 1, 2)
    assert f == 0 and window == (0, 1)
    with pytest.raises(NotCoprime):
        p2_window(5, 2, 4)


@settings(max_examples=40)
@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 300))
def test_two_parts_window_property(a1, a2, n):
    if gcd(a1, a2) != 1 or a1 == a2:
        return
    f, (lo, hi) = p2_window(n, a1, a2)
    assert lo <= table([a1, a2], n)[n] <= hi


def test_spec_rejects_bad_input():
    with pytest.raises(ValueError):
        PartsSpec((0,))
    with pytest.raises(ValueError):
        PartsSpec((2, 2))
    with pytest.raises(ValueError):
        PartsSpec(progressions=((0, 3),))
    with pytest.raises(ValueError):
        PartsSpec((5,), ((5, 5),)).materialize(20)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(1, 30), min_size=1, max_size=5, unique=True),
    st.lists(st.integers(31, 60), min_size=0, max_size=4, unique=True),
    st.integers(0, 200),
)
def test_convolution_identity(a, b, n):
    whole = table(a + b, n)
    assert whole == convolve_tables(table(a, n), table(b, n), n)


def test_g_table_golden():
    t = g_table(1, 4, 40)
    assert t[0] == 1 and t[9] == 1 and t[20] == 1
    parts = PartsSpec(progressions=((9, 4), (11, 4))).materialize(40)
    assert t == [oracles.count_partitions(parts, n) for n in range(41)]


def test_j_table_golden():
    t = j_table(2, 9, 80)
    assert t[0] == 1 and t[16] == 1 and t[36] == 1
    assert oracles.enumerate_partitions([16, 20, 25, 29, 34, 38], 36) == [(20, 16)]
    parts = PartsSpec(progressions=((20, 9), (16, 9))).materialize(80)
    assert t == [oracles.count_partitions(parts, n) for n in range(81)]


def test_g_table_is_product_of_progressions():
    a, M, n = 3, 7, 600
    whole = g_table(a, M, n)
    one = partitions_with_parts(PartsSpec(progressions=((2 * M + a, M),)), n)
    two = partitions_with_parts(PartsSpec(progressions=((3 * M - a, M),)), n)
    assert whole == convolve_tables(one, two, n)


def test_table_preconditions():
    with pytest.raises(BadParams):
        g_table(2, 4, 10)
    with pytest.raises(BadParams):
        j_table(5, 9, 10)


# -- four parts --------------------------------------------------------


def test_p4_data_4_1():
    d = p4_bound_data(4, 1)
    assert d.delta == 105
    assert d.C4d_end < d.C4u_end and d.J == d.C4u_end - d.C4d_end > 0
    assert all(isinstance(c, Fraction) for c in d.P3_coeffs)


def test_p4_sandwich_one_period_4_1():
    d = p4_bound_data(4, 1)
    t = table(d.parts, d.delta - 1)
    for n in range(d.delta):
        assert d.P3(n) + d.C4d_end < t[n] < d.P3(n) + d.C4u_end, n


def test_p4_case_mismatch():
    with pytest.raises(CaseMismatch):
        p4_bound_data(5, 2)
    with pytest.raises(CaseMismatch):
        p4_bound_data(8, 1)  # 9 and 15 share 3
    with pytest.raises(BadParams):
        p4_bound_data(4, 2)


def _p4_pairs(limit):
    for r in range(3, 40):
        for s in range(1, (r + 1) // 2):
            if 2 * s < r and gcd(r, s) == 1 and pairwise_coprime((s, r - s, r + s, 2 * r - s)):
                if s * (r - s) * (r + s) * (2 * r - s) <= limit:
                    yield r, s


def test_p4_sandwich_all_small():
    pairs = list(_p4_pairs(5000))
    assert (4, 1) in pairs
    for r, s in pairs:
        d = p4_bound_data(r, s)
        t = table(d.parts, d.delta - 1)
        assert all(d.P3(n) + d.C4d_end < t[n] < d.P3(n) + d.C4u_end for n in range(d.delta)), (r, s)


def test_p4_periodic_part_cancels():
    for r, s in [(4, 1), (6, 1)]:
        d = p4_bound_data(r, s)
        D = d.delta
        t = table(d.parts, 3 * D)
        for n in range(2 * D + 1):
            assert t[n + D] - t[n] == d.P3(n + D) - d.P3(n)


# -- three parts -------------------------------------------------------


def test_p3_plus_9_2():
    d = p3_bound_data(9, 2, PLUS)
    assert d.delta == 154 and d.parts == (2, 7, 11)
    assert d.C3d <= d.C3u
    t = table(d.parts, d.delta - 1)
    for n in range(d.delta):
        assert d.P2(n) + d.C3d <= t[n] <= d.P2(n) + d.C3u, n


def test_p3_minus_3_1():
    d = p3_bound_data(3, 1, MINUS)
    assert d.delta == 10 and d.parts == (1, 2, 5)
    t = table(d.parts, 9)
    for n in range(10):
        assert d.P2(n) + d.C3d <= t[n] <= d.P2(n) + d.C3u, n


def test_p3_parity():
    with pytest.raises(CaseMismatch):
        p3_bound_data(9, 1, PLUS)
    with pytest.raises(CaseMismatch):
        p3_bound_data(9, 2, MINUS)
    with pytest.raises(ValueError):
        p3_bound_data(9, 2, "SIDEWAYS")


# upper-bound failures of the printed three-part PLUS constant (s < r/2, delta <= 5000)
PLUS_UPPER_VIOLATIONS = {(5, 2), (9, 4), (13, 6), (17, 8), (19, 8), (21, 10), (23, 10)}


def _p3_sweep(variant):
    for r in range(3, 60):
        for s in range(1, r):
            if 2 * s >= r or gcd(r, s) != 1 or (s % 2 == 0) != (variant == PLUS):
                continue
            d = p3_bound_data(r, s, variant)
            if d.delta > 5000:
                continue
            t = table(d.parts, d.delta - 1)
            lower = all(d.P2(n) + d.C3d <= t[n] for n in range(d.delta))
            upper = all(t[n] <= d.P2(n) + d.C3u for n in range(d.delta))
            yield (r, s), lower, upper


def test_p3_plus_sweep():
    bad = set()
    seen = 0
    for rs, lower, upper in _p3_sweep(PLUS):
        seen += 1
        assert lower, rs
        if not upper:
            bad.add(rs)
    assert seen > 20
    assert bad == PLUS_UPPER_VIOLATIONS


def test_p3_minus_sweep():
    seen = 0
    for rs, lower, upper in _p3_sweep(MINUS):
        seen += 1
        assert lower and upper, rs
    assert seen > 20

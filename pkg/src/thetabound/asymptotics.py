"""Circle-method main terms and envelopes, and comparison with exact tables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

import mpmath

from .errors import BadParams, BudgetExceeded
from .partitions import g_table

PRINTED = "printed"
CORRECTED = "corrected"

ENVELOPE_LOW = Fraction(99, 100)
ENVELOPE_HIGH = Fraction(101, 100)

TABLE_BUDGET = 200_000


def _check(a: int, M: int):
    if not (1 <= a and 2 * a < M) or gcd(a, M) != 1:
        raise BadParams(f"need 1 <= a < M/2 and gcd(a,M)=1, got a={a}, M={M}")


def delta_M(a: int, M: int) -> int:
    return a * (M - a) * (M + a) * (2 * M - a)


def bessel_I(v: int, z, digits: int = 30) -> mpmath.mpf:
    """I_v(z) for integer v and z >= 0 by the ascending series.

    All terms are positive, so relative precision carries through the sum;
    summation stops once the geometric tail bound term*x/(1-x) (valid
    because the term ratio only decreases) falls below 10**-(digits+5)
    of the partial sum.
    """
    if digits < 15:
        raise ValueError("digits must be >= 15")
    v = abs(int(v))
    with mpmath.workdps(digits + 15):
        z = mpmath.mpf(z)
        if z < 0:
            raise ValueError("z must be >= 0")
        if z == 0:
            return mpmath.mpf(1) if v == 0 else mpmath.mpf(0)
        x = (z / 2) ** 2
        term = (z / 2) ** v / mpmath.factorial(v)
        total = term
        eps = mpmath.mpf(10) ** (-(digits + 5))
        m = 0
        while True:
            m += 1
            term = term * x / (m * (m + v))
            total += term
            ratio = x / ((m + 1) * (m + 1 + v))
            if ratio < 1 and term * ratio / (1 - ratio) < eps * total:
                break
    with mpmath.workdps(digits):
        return +total


def _z(n, M):
    return 2 * mpmath.pi * mpmath.sqrt(mpmath.mpf(n) / (3 * M))


def g_main_term(a: int, M: int, n: int, digits: int = 30, variant: str = PRINTED) -> mpmath.mpf:
    """Leading circle-method term for g_{a,M}(n).

    ``variant=PRINTED`` uses the constant 1/(2 Delta sin(a pi/M)) as stated;
    ``CORRECTED`` uses Delta/(2 sin(a pi/M)), which is what the product
    (1-q^a)(1-q^{M-a})(1-q^{M+a})(1-q^{2M-a}) / (q^a, q^{M-a}; q^M)_inf
    gives near q = 1 and what the exact table converges to.
    """
    _check(a, M)
    if n < 1:
        raise BadParams("n must be >= 1")
    d = delta_M(a, M)
    with mpmath.workdps(digits + 10):
        sin = mpmath.sin(a * mpmath.pi / M)
        const = 1 / (2 * d * sin) if variant == PRINTED else d / (2 * sin)
        val = const * (mpmath.pi**2 / (3 * M * mpmath.mpf(n))) ** mpmath.mpf(2.5) * bessel_I(-5, _z(n, M), digits + 10)
    with mpmath.workdps(digits):
        return +val


def g_main_leading(a: int, M: int, n, digits: int = 30, variant: str = PRINTED) -> mpmath.mpf:
    """g_main_term with I_{-5}(z) replaced by e^z / sqrt(2 pi z)."""
    _check(a, M)
    d = delta_M(a, M)
    with mpmath.workdps(digits + 10):
        sin = mpmath.sin(a * mpmath.pi / M)
        const = 1 / (2 * d * sin) if variant == PRINTED else d / (2 * sin)
        z = _z(n, M)
        val = const * (mpmath.pi**2 / (3 * M * mpmath.mpf(n))) ** mpmath.mpf(2.5) * mpmath.exp(z) / mpmath.sqrt(2 * mpmath.pi * z)
    with mpmath.workdps(digits):
        return +val


def g_envelopes(s: int, r: int, n, digits: int = 30):
    """(g^d(n), g^u(n)) with constants 0.99 and 1.01."""
    _check(s, r)
    if n < 1:
        raise BadParams("n must be >= 1")
    d = delta_M(s, r)
    with mpmath.workdps(digits + 10):
        n = mpmath.mpf(n)
        core = (
            mpmath.pi**4
            / (2 * (3 * r) ** mpmath.mpf(2.75) * d * mpmath.sin(s * mpmath.pi / r))
            * n ** mpmath.mpf(-2.75)
            * mpmath.exp(_z(n, r))
        )
        lo = core * mpmath.mpf(99) / 100
        hi = core * mpmath.mpf(101) / 100
    with mpmath.workdps(digits):
        return +lo, +hi


def j_main_term(a: int, M: int, n, digits: int = 30) -> mpmath.mpf:
    """J(n) = (pi^2/(3Mn))^2 exp(2 pi sqrt(n/(3M))) / (2 Delta1 sin(a pi/M))."""
    _check(a, M)
    if n < 1:
        raise BadParams("n must be >= 1")
    d1 = a * (M - a) * (M + a)
    with mpmath.workdps(digits + 10):
        n = mpmath.mpf(n)
        val = (mpmath.pi**2 / (3 * M * n)) ** 2 * mpmath.exp(_z(n, M)) / (2 * d1 * mpmath.sin(a * mpmath.pi / M))
    with mpmath.workdps(digits):
        return +val


@dataclass(frozen=True)
class AsymptoticEstimate:
    n: int
    main_term: mpmath.mpf
    lower_env: mpmath.mpf
    upper_env: mpmath.mpf
    exact: Optional[int]
    ratio: Optional[mpmath.mpf]
    variant: str = PRINTED


def compare_exact_vs_main(
    a: int, M: int, n: int, digits: int = 30, variant: str = PRINTED, table=None
) -> AsymptoticEstimate:
    """Exact g_{a,M}(n) against the main term; ``table`` may supply a precomputed g_table."""
    _check(a, M)
    if n < 1:
        raise BadParams("the main term is undefined at n = 0")
    if n > TABLE_BUDGET and table is None:
        raise BudgetExceeded(f"n={n} exceeds the exact-table budget {TABLE_BUDGET}")
    if table is None or len(table) <= n:
        table = g_table(a, M, n)
    exact = table[n]
    main = g_main_term(a, M, n, digits, variant)
    lo, hi = g_envelopes(a, M, n, digits)
    with mpmath.workdps(digits):
        ratio = mpmath.mpf(exact) / main
    return AsymptoticEstimate(n, main, lo, hi, exact, ratio, variant)


def X_of(n, M: int) -> mpmath.mpf:
    return mpmath.sqrt(3 * M * mpmath.mpf(n) / mpmath.pi**2)


def n_threshold(M: int) -> int:
    """Smallest integer n with n >= (4.63 M)^9."""
    x = (Fraction(463, 100) * M) ** 9
    return -((-x.numerator) // x.denominator)

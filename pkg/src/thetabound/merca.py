"""Theta-series variants of the truncated Jacobi triple product and sign scans."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

from . import kernels
from .errors import BadOrder, BadParams, CaseMismatch, RangeError
from .partitions import pairwise_coprime
from .series import PochSpec, Series, divide_by_pochhammer

CASE1 = "CASE1"
CASE2 = "CASE2"
CASE3 = "CASE3"
SPECIAL_R2S = "SPECIAL_R2S"

FULL = "FULL"
FOUR = "FOUR"
THREE_PLUS = "THREE_PLUS"
THREE_MINUS = "THREE_MINUS"
H = "H"
DENOM_KINDS = (FULL, FOUR, THREE_PLUS, THREE_MINUS, H)


def classify(r: int, s: int) -> str:
    """Case tag for a normalized coprime pair.

    CASE1 is exactly the pairwise-coprime situation for the four parts
    s, r-s, r+s, 2r-s.  That is r even *and* 3 not dividing r+s; pairs such
    as (8,1) have r even but 3 | gcd(9, 15), so they fall through to CASE3.
    """
    if (r, s) == (2, 1):
        return SPECIAL_R2S
    if pairwise_coprime((s, r - s, r + s, 2 * r - s)):
        return CASE1
    if s % 2 == 0:
        return CASE2
    return CASE3


@dataclass(frozen=True)
class MercaParams:
    r: int
    s: int
    k: int
    case: str = ""

    def __post_init__(self):
        r, s, k = self.r, self.s, self.k
        if k < 1:
            raise BadParams(f"k must be >= 1, got {k}")
        if s < 1 or gcd(r, s) != 1:
            raise BadParams(f"need coprime positive r, s; got r={r}, s={s}")
        if (r, s) != (2, 1) and not 2 * s < r:
            raise BadParams(f"need s < r/2, got r={r}, s={s}")
        want = classify(r, s)
        if self.case and self.case != want:
            raise BadParams(f"case {self.case} does not match {want} for ({r},{s})")
        object.__setattr__(self, "case", want)

    @property
    def shift(self) -> int:
        """Exponent r k(k+1)/2 - s k of the leading term of the full series."""
        r, s, k = self.r, self.s, self.k
        return r * k * (k + 1) // 2 - s * k


def normalize_params(R: int, S: int, k: int) -> MercaParams:
    if S <= 0 or S >= R:
        raise BadParams(f"need 0 < S < R, got R={R}, S={S}")
    if k < 1:
        raise BadParams(f"k must be >= 1, got {k}")
    g = gcd(R, S)
    r, s = R // g, S // g
    if 2 * s > r:
        s = r - s
    return MercaParams(r, s, k)


@dataclass(frozen=True)
class TExponents:
    t1: int
    t2: int
    t3: int
    t4: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.t1, self.t2, self.t3, self.t4)


def t_exponents(params: MercaParams, j: int) -> TExponents:
    if j < 0:
        raise ValueError("j must be >= 0")
    r, s, k = params.r, params.s, params.k
    base = 2 * j * j * r + 2 * j * k * r
    return TExponents(
        base + j * r - 2 * j * s,
        base + j * r + 2 * j * s + 2 * k * s + s,
        base + 3 * j * r - 2 * j * s + k * r + r - s,
        base + 3 * j * r + 2 * j * s + k * r + 2 * k * s + r + 2 * s,
    )


def numerator_terms(params: MercaParams, order: int) -> List[Tuple[int, int]]:
    """Sparse (exponent, coefficient) list of the numerator up to order."""
    terms = []
    j = 0
    while True:
        t = t_exponents(params, j)
        if t.t1 > order:
            break
        for e, c in zip(t.as_tuple(), (1, -1, -1, 1)):
            if e <= order:
                terms.append((e, c))
        j += 1
    return terms


def numerator_series(params: MercaParams, order: int) -> Series:
    if order < 0:
        raise BadOrder(f"order must be >= 0, got {order}")
    return Series.from_terms(numerator_terms(params, order), order)


def _finite(*exps: int) -> List[PochSpec]:
    return [PochSpec(e, 1, 1) for e in exps]


def denominator_specs(params: MercaParams, kind: str) -> List[PochSpec]:
    r, s = params.r, params.s
    odd = s % 2 == 1
    if kind == FOUR:
        return _finite(s, r - s, r + s, 2 * r - s)
    if kind == THREE_PLUS:
        if odd and params.case != SPECIAL_R2S:
            raise CaseMismatch("THREE_PLUS requires s even")
        return _finite(s, r - s, r + s)
    if kind == THREE_MINUS:
        if not odd:
            raise CaseMismatch("THREE_MINUS requires s odd")
        return _finite(s, r - s, 2 * r - s)
    if kind in (H, FULL):
        return [PochSpec(s, r), PochSpec(r - s, r)]
    raise ValueError(f"unknown denominator kind {kind!r}")


def build_series(params: MercaParams, order: int, kind: str) -> Series:
    if order < 0:
        raise BadOrder(f"order must be >= 0, got {order}")
    specs = denominator_specs(params, kind)
    if kind == FULL:
        shift = params.shift
        num = Series.from_terms(((e + shift, c) for e, c in numerator_terms(params, order)), order)
    else:
        num = numerator_series(params, order)
    return divide_by_pochhammer(num, specs)


def conjecture_series(params: MercaParams, order: int) -> Series:
    """The series straight from its theta-sum form, for cross-checking FULL.

    (-1)^k sum_{j>=k} (-1)^j q^{r j(j+1)/2} (q^{-sj} - q^{(j+1)s}) over
    (q^s, q^{r-s}; q^r)_inf.
    """
    r, s, k = params.r, params.s, params.k
    terms = []
    j = k
    while r * j * (j + 1) // 2 - s * j <= order:
        sign = 1 if (j - k) % 2 == 0 else -1
        base = r * j * (j + 1) // 2
        terms.append((base - s * j, sign))
        terms.append((base + (j + 1) * s, -sign))
        j += 1
    num = Series.from_terms(terms, order)
    return divide_by_pochhammer(num, [PochSpec(s, r), PochSpec(r - s, r)])


@dataclass(frozen=True)
class ScanReport:
    lo: int
    hi: int
    min_value: int
    min_index: int
    first_negative: Optional[int]
    negative_count: int
    zero_count: int

    @property
    def clean(self) -> bool:
        return self.negative_count == 0


def scan(series: Series, lo: int = 0, hi: Optional[int] = None) -> ScanReport:
    if hi is None:
        hi = series.order
    if not (0 <= lo <= hi <= series.order):
        raise RangeError(f"bad scan range [{lo}, {hi}] for order {series.order}")
    c = series.coeffs
    mn, mi = c[lo], lo
    first = None
    neg = zeros = 0
    for n in range(lo, hi + 1):
        v = c[n]
        if v < 0:
            neg += 1
            if first is None:
                first = n
        elif v == 0:
            zeros += 1
        if v < mn:
            mn, mi = v, n
    return ScanReport(lo, hi, mn, mi, first, neg, zeros)


def generalized_terms(R: int, S: int, k: int, ell: int) -> List[Tuple[int, int]]:
    """Signed exponents of the difference of the two finite theta sums."""
    sign = 1 if (k - 1) % 2 == 0 else -1
    out = []
    for j in list(range(-k + 1, -ell + 1)) + list(range(ell + 1, k + 1)):
        e = R * j * (j + 1) // 2 + S * j
        out.append((e, sign * (1 if j % 2 == 0 else -1)))
    return out


def generalized_offset(R: int, S: int, k: int, ell: int) -> int:
    """Shift applied so that all exponents are nonnegative (0 when they are)."""
    return max(0, -min(e for e, _ in generalized_terms(R, S, k, ell)))


def generalized_series(R: int, S: int, k: int, ell: int, order: int) -> Series:
    """Generalized truncated series; index n holds the coefficient of q^(n - offset).

    The offset from generalized_offset is nonzero only when the j = -ell
    term has a negative exponent, as for ell = 1.
    """
    if not (1 <= S < R) or not (k > ell >= 1) or k < 4:
        raise BadParams(f"need 1 <= S < R, k > ell >= 1, k >= 4; got {(R, S, k, ell)}")
    if order < 0:
        raise BadOrder(f"order must be >= 0, got {order}")
    off = generalized_offset(R, S, k, ell)
    num = Series.from_terms(((e + off, c) for e, c in generalized_terms(R, S, k, ell)), order)
    return divide_by_pochhammer(num, [PochSpec(S, R), PochSpec(R - S, R), PochSpec(R, R)])


def decomposition_factors(params: MercaParams, order: int) -> Tuple[Series, Series]:
    """Split 1/(q^s, q^{r-s}; q^r)_inf into finite and tail parts.

    (alpha, beta) = (2,2), (2,1), (1,2) for CASE1, CASE2, CASE3 (and the
    special pair); the finite part has alpha factors from q^s and beta from
    q^{r-s}.
    """
    r, s = params.r, params.s
    alpha, beta = {CASE1: (2, 2), CASE2: (2, 1)}.get(params.case, (1, 2))
    fin = [PochSpec(s, r, alpha), PochSpec(r - s, r, beta)]
    tail = [PochSpec(s + alpha * r, r), PochSpec(r - s + beta * r, r)]
    one = Series.one(order)
    return divide_by_pochhammer(one, fin), divide_by_pochhammer(one, tail)


def convolve_tables(a: List[int], b: List[int], order: int) -> List[int]:
    return kernels.convolve(a, b, order)

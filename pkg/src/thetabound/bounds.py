"""Bound polynomials in the block index p, their roots, and the L / F / N constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd, lcm
from typing import List, Optional, Tuple, Union

from . import _printed, sturm
from .errors import BadParams, CaseMismatch, LeadingNotPositive, UnknownPolynomial
from .merca import (
    CASE1,
    CASE2,
    FOUR,
    THREE_MINUS,
    THREE_PLUS,
    MercaParams,
    ScanReport,
    build_series,
    scan,
)
from .partitions import pairwise_coprime

FORMULA = "FORMULA"
EXAMPLE = "EXAMPLE"

ROOT_WIDTH = Fraction(1, 10**7)
_CBRT_SCALE = 10**18


@dataclass(frozen=True)
class PolyInP:
    """Integer polynomial in p (lowest degree first) equal to scale times a bound."""

    coeffs: Tuple[int, ...]
    scale: int
    ident: str = ""

    def __call__(self, p) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]


def family_ids(family: str) -> List[str]:
    try:
        return list(_printed.FAMILIES[family])
    except KeyError:
        raise UnknownPolynomial(f"unknown family {family!r}") from None


_BY_SUBSCRIPT = {
    "C": ("C0_t4prev", "C1_t1", "C2_t2", "C3_t3"),
    "D": ("D0_t1", "D1_t1", "D2_t2", "D3_t3"),
    "E": ("E0_t1", "E1_t1", "E2_t2", "E3_t3"),
}


def resolve_id(family: str, index: Union[int, str]) -> str:
    """An id like 'D1_vertex', or an integer subscript i picking Xi at its first endpoint."""
    ids = family_ids(family)
    if isinstance(index, str):
        if index not in ids:
            raise UnknownPolynomial(f"{index!r} is not in family {family}")
        return index
    try:
        return _BY_SUBSCRIPT[family][index]
    except (IndexError, TypeError):
        raise UnknownPolynomial(f"no polynomial {family}{index}") from None


def _coeffs_from_values(values: List[Fraction]) -> List[Fraction]:
    """Monomial coefficients of the polynomial taking values[i] at p = i."""
    n = len(values)
    out = [Fraction(0)] * n
    for i, yi in enumerate(values):
        if not yi:
            continue
        basis = [Fraction(1)]
        den = 1
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= j * basis[t + 1]
            den *= i - j
        for t in range(n):
            out[t] += yi * basis[t] / den
    return out


def _base_scale(family: str, r: int, s: int) -> int:
    if family == "C":
        return 6 * s * (r - s) * (r + s) * (2 * r - s)
    if family == "D":
        return 2 * s * (r - s) * (r + s)
    return 2 * s * (r - s) * (2 * r - s)


def _check_family_case(family: str, r: int, s: int):
    if family == "C" and not pairwise_coprime((s, r - s, r + s, 2 * r - s)):
        raise CaseMismatch("C family needs pairwise coprime parts")
    if family == "D" and s % 2:
        raise CaseMismatch("D family needs s even")
    if family == "E" and s % 2 == 0:
        raise CaseMismatch("E family needs s odd")


def appendix_polynomial(family: str, index: Union[int, str], r: int, s: int, k: int) -> PolyInP:
    ident = resolve_id(family, index)
    if min(r, s, k) < 1 or gcd(r, s) != 1:
        raise BadParams(f"bad parameters {(r, s, k)}")
    _check_family_case(family, r, s)
    expr, extra = _printed.FAMILIES[family][ident]
    values = [Fraction(expr(Fraction(r), Fraction(s), Fraction(k), Fraction(p))) for p in range(5)]
    coeffs = sturm.trim(_coeffs_from_values(values))
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    scale = _base_scale(family, r, s) * (r if extra == "r" else 1) * den
    return PolyInP(tuple(int(c * den) for c in coeffs), scale, ident)


def family_polynomials(family: str, r: int, s: int, k: int) -> List[PolyInP]:
    return [appendix_polynomial(family, i, r, s, k) for i in family_ids(family)]


def printed_example_polynomial(ident: str, k: int) -> Tuple[Tuple[int, int], PolyInP]:
    """The worked-example version of a polynomial, with its (r, s)."""
    if ident in _printed.EXAMPLE_D_9_2:
        rs, expr = (9, 2), _printed.EXAMPLE_D_9_2[ident]
    elif ident in _printed.EXAMPLE_E_2_1:
        rs, expr = (2, 1), _printed.EXAMPLE_E_2_1[ident]
    else:
        raise UnknownPolynomial(ident)
    values = [Fraction(expr(Fraction(k), Fraction(p))) for p in range(3)]
    coeffs = sturm.trim(_coeffs_from_values(values))
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    r, s = rs
    family = ident[0]
    scale = _base_scale(family, r, s) * den
    return rs, PolyInP(tuple(int(c * den) for c in coeffs), scale, ident)


@dataclass(frozen=True)
class RootInfo:
    ident: str
    bracket: Optional[Tuple[Fraction, Fraction]]
    p_floor: int


def max_root_ceiling(poly: PolyInP) -> Tuple[Optional[Tuple[Fraction, Fraction]], int]:
    """Bracket (lo, hi] of the largest real root and the first safe integer p.

    p_floor is the least integer p >= 0 with poly >= 0 at every integer from
    p_floor on.  The bracket is None when there is no real root.
    """
    if not poly.coeffs or poly.leading <= 0:
        raise LeadingNotPositive(f"{poly.ident or 'polynomial'} has leading coefficient {poly.leading if poly.coeffs else 0}")
    br = sturm.max_root_bracket(poly.coeffs, ROOT_WIDTH)
    if br is None:
        return None, 0
    lo, hi = br
    if hi <= 0:
        return br, 0
    p = max(0, sturm.first_integer_above(lo))
    if poly(p) < 0:
        p += 1
    if poly(p) < 0:
        raise ArithmeticError("sign check failed above the largest root")
    return br, p


def cbrt_upper(x: Fraction, scale: int = _CBRT_SCALE) -> Fraction:
    """Smallest multiple of 1/scale whose cube is >= x (x >= 0)."""
    target = Fraction(x) * scale**3
    c = _icbrt(ceil(target))
    if c**3 < target:
        c += 1
    return Fraction(c, scale)


def _icbrt(m: int) -> int:
    if m <= 0:
        return 0
    x = 1 << ((m.bit_length() + 2) // 3)
    while True:
        y = (2 * x + m // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x**3 > m:
        x -= 1
    while (x + 1) ** 3 <= m:
        x += 1
    return x


def _ceil_nonneg(x: Fraction) -> int:
    return max(0, ceil(x))


def family_for(params: MercaParams) -> str:
    return {CASE1: "C", CASE2: "D"}.get(params.case, "E")


def case_series_kind(params: MercaParams) -> str:
    return {CASE1: FOUR, CASE2: THREE_PLUS}.get(params.case, THREE_MINUS)


def compute_L(params: MercaParams, family: Optional[str] = None) -> Tuple[int, dict]:
    """L for the params' case; ``family`` ("D" or "E") forces the root method.

    The root method with family E also applies to CASE1 pairs with s odd,
    which is how such pairs can be compared across methods.
    """
    r, s, k = params.r, params.s, params.k
    if family is None and params.case == CASE1:
        c = cbrt_upper(Fraction(s, k))
        pr = 2 * r * r * c
        val = (pr + k) * (4 * r**3 * c - r + 2 * s)
        return _ceil_nonneg(val), {
            "method": "closed_form",
            "cbrt_upper": c,
            "z0": pr,
            "p_floor": ceil(pr),
            "roots": [],
        }
    fam = family or ("D" if params.case == CASE2 else "E")
    roots = []
    z0 = None
    p_floor = 0
    for poly in family_polynomials(fam, r, s, k):
        br, pf = max_root_ceiling(poly)
        roots.append(RootInfo(poly.ident, br, pf))
        p_floor = max(p_floor, pf)
        if br is not None and (z0 is None or br[1] > z0):
            z0 = br[1]
    z = max(Fraction(0), z0) if z0 is not None else Fraction(0)
    val = (z + k) * (2 * z * r - r + 2 * s)
    return _ceil_nonneg(val), {"method": "roots", "z0": z, "p_floor": p_floor, "roots": roots}


def corollary_k_threshold(params_or_rs) -> int:
    if isinstance(params_or_rs, MercaParams):
        r, s, case = params_or_rs.r, params_or_rs.s, params_or_rs.case
    else:
        r, s = params_or_rs
        case = MercaParams(r, s, 1).case
    if not 2 * s < r:
        raise BadParams("corollary thresholds need s < r/2")
    if case == CASE1:
        return ceil(Fraction(64 * r**9 * s, (r - 2 * s) ** 3))
    lead = 4 if s % 2 == 0 else 8
    x = Fraction(lead * r**3 * s - 2 * s * (r - 2 * s), r * (r - 2 * s))
    return floor(x) + 1


def _roots_clear(poly: PolyInP, limit: Fraction) -> bool:
    if not poly.coeffs or poly.leading <= 0:
        return False
    # negative at the limit with positive leading term: a root lies above it
    if sturm.evaluate(poly.coeffs, limit) < 0:
        return False
    chain = sturm.sturm_chain(poly.coeffs)
    return sturm.roots_above(chain, limit) == 0


def refined_k_threshold(r: int, s: int, cap: Optional[int] = None) -> Optional[int]:
    """Least k for which every nonnegative root z of the case family has 2zr - r + 2s <= 0.

    Returns None when no k up to the cap qualifies.
    """
    params = MercaParams(r, s, 1)
    if params.case == CASE1:
        raise CaseMismatch("refined threshold is defined for the three-part cases")
    fam = "D" if params.case == CASE2 else "E"
    if cap is None:
        cap = corollary_k_threshold(params) if 2 * s < r else 1000
    limit = max(Fraction(0), Fraction(r - 2 * s, 2 * r))
    # cheapest failures first
    ids = sorted(family_ids(fam), key=lambda i: (not i.endswith("vertex"), i))
    for k in range(1, cap + 1):
        if all(_roots_clear(appendix_polynomial(fam, i, r, s, k), limit) for i in ids):
            return k
    return None


def _ceil_cbrt_times(a: int, s: int) -> int:
    """Smallest integer p with p >= a * s^(1/3), i.e. p^3 >= a^3 s."""
    t = a**3 * s
    p = _icbrt(t)
    if p**3 < t:
        p += 1
    return p


@dataclass(frozen=True)
class Stage2:
    p: int
    F: int
    N: int
    policy: str


def stage2_constants(params: MercaParams, policy: str = FORMULA) -> Stage2:
    if policy not in (FORMULA, EXAMPLE):
        raise ValueError(f"unknown policy {policy!r}")
    r, s, k = params.r, params.s, params.k
    if params.case == CASE1:
        p = _ceil_cbrt_times(2 * r ** (2 if policy == FORMULA else 3), s)
    elif params.case == CASE2:
        p = r**4
    else:
        p = ceil(Fraction(64 * r**4, 15))
    F = (p + k) * (2 * p * r - r + 2 * s)
    big = ceil(2 * (Fraction(463, 100) * r) ** 9)
    N = max(4 * F * F, big) + F + params.shift
    return Stage2(p, F, N, policy)


@dataclass
class BoundReport:
    params: MercaParams
    case: str
    poly_roots: List[RootInfo]
    z0: Fraction
    p_floor: int
    L: int
    F: Optional[int]
    N: Optional[int]
    corollary_k: Optional[int]
    refined_k: Optional[int]
    scan_verdict: Optional[ScanReport]
    certified: bool
    notes: List[str] = field(default_factory=list)


def run_algorithm(
    params: MercaParams,
    scan_budget: int = 200_000,
    policy: str = FORMULA,
    with_refined: bool = True,
) -> BoundReport:
    if scan_budget < 0:
        raise ValueError("scan_budget must be >= 0")
    L, detail = compute_L(params)
    notes = []
    kind = case_series_kind(params)
    verdict = None
    certified = False
    F = N = None
    if L <= scan_budget:
        verdict = scan(build_series(params, L, kind), 0, L)
        certified = verdict.clean
        if not certified:
            notes.append(f"negative coefficient at {verdict.first_negative} below L")
    else:
        verdict = scan(build_series(params, scan_budget, kind), 0, scan_budget)
        notes.append("L exceeds the scan budget; stage-2 constants reported")
    if not certified:
        st = stage2_constants(params, policy)
        F, N = st.F, st.N
        if params.case == CASE1 and policy == FORMULA:
            notes.append("formula_policy_differs_from_example")
    cor = ref = None
    if 2 * params.s < params.r:
        cor = corollary_k_threshold(params)
    if with_refined and params.case != CASE1:
        ref = refined_k_threshold(params.r, params.s)
    return BoundReport(
        params=params,
        case=params.case,
        poly_roots=detail["roots"],
        z0=detail["z0"],
        p_floor=detail["p_floor"],
        L=L,
        F=F,
        N=N,
        corollary_k=cor,
        refined_k=ref,
        scan_verdict=verdict,
        certified=certified,
        notes=notes,
    )

"""Restricted partition tables and the closed-form bound data for them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import List, Sequence, Tuple

from . import kernels
from .errors import BadParams, CaseMismatch, NotCoprime

PLUS = "PLUS"
MINUS = "MINUS"


@dataclass(frozen=True)
class PartsSpec:
    """Allowed part sizes: explicit parts plus progressions start, start+step, ..."""

    parts: Tuple[int, ...] = ()
    progressions: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if any(a < 1 for a in self.parts):
            raise ValueError("parts must be positive")
        if len(set(self.parts)) != len(self.parts):
            raise ValueError("duplicate parts")
        for start, step in self.progressions:
            if start < 1 or step < 1:
                raise ValueError("progression start and step must be positive")

    def materialize(self, order: int) -> List[int]:
        out = list(self.parts)
        for start, step in self.progressions:
            out.extend(range(start, order + 1, step))
        if len(set(out)) != len(out):
            raise ValueError("duplicate parts")
        return out


def partitions_with_parts(spec: PartsSpec, order: int) -> List[int]:
    if order < 0:
        raise ValueError("order must be >= 0")
    return kernels.knapsack(spec.materialize(order), order)


def p2_window(n: int, a1: int, a2: int) -> Tuple[int, Tuple[int, int]]:
    """floor(n/(a1 a2)) and the window the true two-part count lies in."""
    if gcd(a1, a2) != 1:
        raise NotCoprime(f"gcd({a1}, {a2}) != 1")
    f = n // (a1 * a2)
    return f, (f, f + 1)


def pairwise_coprime(parts: Sequence[int]) -> bool:
    return all(gcd(a, b) == 1 for a, b in combinations(parts, 2))


def _check_pair(r: int, s: int):
    if not (1 <= s and 2 * s < r) or gcd(r, s) != 1:
        raise BadParams(f"need 1 <= s < r/2 and gcd(r,s)=1, got r={r}, s={s}")


@dataclass(frozen=True)
class P4BoundData:
    r: int
    s: int
    delta: int
    P3_coeffs: Tuple[Fraction, Fraction, Fraction, Fraction]
    Ad: int
    Bd: Fraction
    Au: int
    Bu: Fraction
    C4d_end: Fraction
    C4u_end: Fraction
    J: Fraction

    def P3(self, n) -> Fraction:
        c0, c1, c2, c3 = self.P3_coeffs
        return ((c3 * n + c2) * n + c1) * n + c0

    def C4d(self, x) -> Fraction:
        return Fraction(self.Ad * x * x + self.Bd * x + 6 * self.delta, 6 * self.delta)

    def C4u(self, x) -> Fraction:
        return Fraction(self.Au * x * x + self.Bu * x + 6 * self.delta, 6 * self.delta)

    @property
    def parts(self):
        r, s = self.r, self.s
        return (s, r - s, r + s, 2 * r - s)


def p4_bound_data(r: int, s: int) -> P4BoundData:
    _check_pair(r, s)
    parts = (s, r - s, r + s, 2 * r - s)
    if not pairwise_coprime(parts):
        raise CaseMismatch(f"parts {parts} are not pairwise coprime")
    d = s * (r - s) * (r + s) * (2 * r - s)
    den = 6 * d
    p3 = (
        Fraction(0),
        Fraction(21 * r * r + 2 * r * s - 2 * s * s, 2 * den),
        Fraction(6 * r, den),
        Fraction(1, den),
    )
    Ad = -6 * r - 6 * r**2 + 6 * r * s - 6 * s**2
    Bd = (
        -1 - Fraction(33 * r**2, 2) + 7 * r * s + 12 * r**3 * s - 7 * s**2
        - 6 * r**2 * s**2 - 12 * r * s**3 + 6 * s**4
    )
    Au = -6 * r + 6 * r**2 + 6 * r * s - 6 * s**2
    Bu = (
        -1 - Fraction(9 * r**2, 2) + 5 * r * s + 12 * r**3 * s - 5 * s**2
        - 6 * r**2 * s**2 - 12 * r * s**3 + 6 * s**4
    )
    x = d - 1
    cd = (Ad * x * x + Bd * x + den) / den
    cu = (Au * x * x + Bu * x + den) / den
    return P4BoundData(r, s, d, p3, Ad, Fraction(Bd), Au, Fraction(Bu), cd, cu, cu - cd)


@dataclass(frozen=True)
class P3BoundData:
    r: int
    s: int
    variant: str
    delta: int
    P2_coeffs: Tuple[Fraction, Fraction, Fraction]
    C3d: Fraction
    C3u: Fraction
    parts: Tuple[int, int, int] = field(default=())

    def P2(self, n) -> Fraction:
        c0, c1, c2 = self.P2_coeffs
        return (c2 * n + c1) * n + c0


def p3_bound_data(r: int, s: int, variant: str) -> P3BoundData:
    if gcd(r, s) != 1 or not (1 <= s < r):
        raise BadParams(f"need coprime 1 <= s < r, got r={r}, s={s}")
    if variant == PLUS:
        if s % 2:
            raise CaseMismatch("PLUS requires s even")
        d = s * (r - s) * (r + s)
        den = 2 * d
        p2 = (Fraction(2 * r + s - 1, den), Fraction(2 * r + s, den), Fraction(1, den))
        cu = (
            r**3 * s * (2 * s - 1) + 2 * r**2 * s * (1 - 2 * s**2)
            + r * (-2 * s**4 + s**3 - 2 * s - 1) + 2 * s * (s**4 - 2 * s**2 + 2 * s - 1) + 1
        )
        cd = (
            r**3 * (-2 * s**2 - s) + 2 * r**2 * s**3
            + r * (2 * s**4 + s**3 + 2 * s - 1) - 2 * s**5 - 2 * s**2 - s + 1
        )
        parts = (s, r - s, r + s)
    elif variant == MINUS:
        if s % 2 == 0:
            raise CaseMismatch("MINUS requires s odd")
        d = s * (r - s) * (2 * r - s)
        den = 2 * d
        p2 = (Fraction(3 * r - s - 1, den), Fraction(3 * r - s, den), Fraction(1, den))
        cu = (
            r**3 * (4 * s**2 - 2 * s) + r**2 * (-10 * s**3 + 3 * s**2 + 4 * s)
            + r * (8 * s**4 - s**3 - 6 * s**2 - 2 * s - 2)
            - 2 * s**5 + 2 * s**3 + 2 * s**2 + s + 1
        )
        cd = (
            r**3 * (-4 * s**2 - 2 * s) + r**2 * (10 * s**3 + 3 * s**2)
            + r * (-8 * s**4 - s**3 + 2 * s - 2) + 2 * s**5 - 2 * s**2 + s + 1
        )
        parts = (s, r - s, 2 * r - s)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return P3BoundData(r, s, variant, d, p2, Fraction(cd, den), Fraction(cu, den), parts)


def _check_aM(a: int, M: int):
    if not (1 <= a and 2 * a < M) or gcd(a, M) != 1:
        raise BadParams(f"need 1 <= a < M/2 and gcd(a,M)=1, got a={a}, M={M}")


def g_table(a: int, M: int, order: int) -> List[int]:
    """Partitions into parts 2M+a, 3M+a, ... and 3M-a, 4M-a, ..."""
    _check_aM(a, M)
    return partitions_with_parts(PartsSpec(progressions=((2 * M + a, M), (3 * M - a, M))), order)


def j_table(a: int, M: int, order: int) -> List[int]:
    """Partitions into parts 2M+a, 3M+a, ... and 2M-a, 3M-a, ..."""
    _check_aM(a, M)
    return partitions_with_parts(PartsSpec(progressions=((2 * M + a, M), (2 * M - a, M))), order)

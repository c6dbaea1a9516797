"""Dense truncated power series with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from . import kernels
from .errors import BadOrder, NonUnitConstantTerm

INFINITE = None


@dataclass(frozen=True)
class Series:
    """Coefficients of q^0..q^order; the order is inclusive."""

    coeffs: Tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise BadOrder(f"order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coeffs must have exactly order+1 entries")

    @classmethod
    def from_list(cls, coeffs: Iterable[int], order: Optional[int] = None) -> "Series":
        c = [int(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise BadOrder(f"order must be >= 0, got {order}")
        c = (c + [0] * (order + 1 - len(c)))[: order + 1]
        return cls(tuple(c), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.from_list([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "Series":
        c = [0] * (order + 1)
        if 0 <= exponent <= order:
            c[exponent] = coeff
        return cls(tuple(c), order)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int]], order: int) -> "Series":
        """Sum of coeff*q^exponent, dropping exponents beyond the order."""
        if order < 0:
            raise BadOrder(f"order must be >= 0, got {order}")
        c = [0] * (order + 1)
        for e, v in terms:
            if e < 0:
                raise ValueError("negative exponent")
            if e <= order:
                c[e] += v
        return cls(tuple(c), order)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise BadOrder("cannot raise the truncation order")
        return Series(self.coeffs[: order + 1], order)

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), n)

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series(tuple(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), n)

    def __neg__(self) -> "Series":
        return Series(tuple(-a for a in self.coeffs), self.order)

    def scale(self, c: int) -> "Series":
        return Series(tuple(c * a for a in self.coeffs), self.order)

    def shift(self, m: int) -> "Series":
        """Multiply by q^m (m >= 0), keeping the order."""
        if m < 0:
            raise ValueError("shift must be nonnegative")
        c = ([0] * m + list(self.coeffs))[: self.order + 1]
        return Series(tuple(c), self.order)

    def __mul__(self, other: "Series") -> "Series":
        return mul_truncated(self, other)


def mul_truncated(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series(tuple(kernels.convolve(a.coeffs, b.coeffs, n)), n)


def inverse_truncated(a: Series) -> Series:
    if a.coeffs[0] not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a.coeffs[0]} is not a unit")
    return Series(tuple(kernels.inverse(a.coeffs, a.order)), a.order)


@dataclass(frozen=True)
class PochSpec:
    """(q^start; q^step)_count; count=None means infinite."""

    start: int
    step: int
    count: Optional[int] = INFINITE

    def __post_init__(self):
        if self.start < 1 or self.step < 1:
            raise ValueError("start and step must be positive")
        if self.count is not None and self.count < 0:
            raise ValueError("count must be nonnegative")

    def exponents(self, order: int):
        """Factor exponents a, a+m, ... that matter at truncation order."""
        e = self.start
        j = 0
        while e <= order and (self.count is None or j < self.count):
            yield e
            e += self.step
            j += 1


def _factor_exponents(specs: Sequence[PochSpec], order: int):
    out = []
    for sp in specs:
        out.extend(sp.exponents(order))
    return out


def pochhammer(specs: Sequence[PochSpec], order: int) -> Series:
    if order < 0:
        raise BadOrder(f"order must be >= 0, got {order}")
    c = [0] * (order + 1)
    c[0] = 1
    for e in _factor_exponents(specs, order):
        kernels.multiply_one_minus(c, e)
    return Series(tuple(c), order)


def divide_by_pochhammer(a: Series, specs: Sequence[PochSpec]) -> Series:
    """a / prod (q^start; q^step)_count, one strided prefix sum per factor.

    Agrees with mul_truncated(a, inverse_truncated(pochhammer(specs))) but
    runs in O(order) per factor.
    """
    c = list(a.coeffs)
    for e in _factor_exponents(specs, a.order):
        kernels.divide_one_minus(c, e)
    return Series(tuple(c), a.order)


def inverse_pochhammer(specs: Sequence[PochSpec], order: int) -> Series:
    return divide_by_pochhammer(Series.one(order), specs)

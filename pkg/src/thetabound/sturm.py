"""Exact real-root work on univariate polynomials with rational coefficients.

Polynomials are lists of coefficients, lowest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import List, Optional, Sequence, Tuple

Poly = List[Fraction]


def trim(f: Sequence) -> Poly:
    out = [Fraction(c) for c in f]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(f: Sequence) -> int:
    return len(trim(f)) - 1


def evaluate(f: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f: Sequence) -> Poly:
    return trim([i * f[i] for i in range(1, len(f))])


def divmod_poly(f: Sequence, g: Sequence) -> Tuple[Poly, Poly]:
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    lead = g[-1]
    while len(f) >= len(g) and f:
        shift = len(f) - len(g)
        c = f[-1] / lead
        q[shift] = c
        for i, gi in enumerate(g):
            f[i + shift] -= c * gi
        f = trim(f)
    return trim(q), f


def gcd_poly(f: Sequence, g: Sequence) -> Poly:
    a, b = trim(f), trim(g)
    while b:
        _, rem = divmod_poly(a, b)
        a, b = b, rem
    if not a:
        return a
    return [c / a[-1] for c in a]


def squarefree(f: Sequence) -> Poly:
    f = trim(f)
    if len(f) <= 2:
        return f
    g = gcd_poly(f, derivative(f))
    if len(g) <= 1:
        return f
    q, _ = divmod_poly(f, g)
    return q


def sturm_chain(f: Sequence) -> List[Poly]:
    f = squarefree(f)
    chain = [f]
    if len(f) <= 1:
        return chain
    chain.append(derivative(f))
    while True:
        _, rem = divmod_poly(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _variations(signs) -> int:
    v = 0
    last = 0
    for sg in signs:
        if sg == 0:
            continue
        if last and sg != last:
            v += 1
        last = sg
    return v


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def variations_at(chain: List[Poly], x) -> int:
    return _variations(_sign(evaluate(g, x)) for g in chain)


def variations_at_inf(chain: List[Poly]) -> int:
    return _variations(_sign(g[-1]) for g in chain if g)


def roots_above(chain: List[Poly], x) -> int:
    """Number of distinct real roots strictly greater than x."""
    return variations_at(chain, x) - variations_at_inf(chain)


def root_bound(f: Sequence) -> Fraction:
    f = trim(f)
    lead = abs(f[-1])
    return 1 + max((abs(c) / lead for c in f[:-1]), default=Fraction(0))


def max_root_bracket(f: Sequence, width: Fraction = Fraction(1, 10**7)) -> Optional[Tuple[Fraction, Fraction]]:
    """(lo, hi] containing the largest real root, hi - lo < width; None if no real root."""
    f = trim(f)
    if len(f) <= 1:
        return None
    chain = sturm_chain(f)
    bound = root_bound(f)
    lo, hi = -bound, bound
    if roots_above(chain, lo) == 0:
        return None
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if roots_above(chain, mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def first_integer_above(lo: Fraction) -> int:
    return floor(lo) + 1

"""Kernel selection.

The compiled module is used when it imports; any OverflowError it raises
sends the call to the big-integer reference implementation, so results are
identical either way.  Set THETABOUND_PURE=1 to force the reference path.
"""

import math
import os

from . import _pykernels

try:
    if os.environ.get("THETABOUND_PURE"):
        raise ImportError("pure path requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_NAMES = (
    "convolve",
    "inverse",
    "divide_one_minus",
    "multiply_one_minus",
    "knapsack",
    "sparse_times_dense",
)


def _wrap(name):
    slow = getattr(_pykernels, name)
    if _ckernels is None:
        return slow
    fast = getattr(_ckernels, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    call.__name__ = name
    call.__doc__ = slow.__doc__
    return call


def _is_prime(m):
    if m < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if m % q == 0:
            return m == q
    d, e = m - 1, 0
    while d % 2 == 0:
        d //= 2
        e += 1
    for b in small:
        x = pow(b, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(e - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _primes_below(top, count):
    out = []
    m = top - 1
    while len(out) < count:
        if _is_prime(m):
            out.append(m)
        m -= 2 if m % 2 else 1
    return out


_PRIMES = _primes_below(1 << 62, 64)


def _partition_bits(n):
    # every restricted count is at most p(n) < exp(pi sqrt(2n/3))
    return int(math.pi * math.sqrt(2 * n / 3) / math.log(2)) + 2


def _knapsack_crt(parts, n):
    need = _partition_bits(n) + 1
    primes = []
    bits = 0
    for q in _PRIMES:
        primes.append(q)
        bits += q.bit_length() - 1
        if bits >= need:
            break
    else:
        return None
    modulus = 1
    for q in primes:
        modulus *= q
    total = [0] * (n + 1)
    for q in primes:
        mq = modulus // q
        w = mq * pow(mq, -1, q)
        res = _ckernels.knapsack_mod(parts, n, q)
        for i, v in enumerate(res):
            if v:
                total[i] += v * w
    return [v % modulus for v in total]


def _knapsack(parts, n):
    try:
        return _ckernels.knapsack(parts, n)
    except OverflowError:
        pass
    out = _knapsack_crt(parts, n)
    if out is None:
        out = _pykernels.knapsack(parts, n)
    return out


convolve = _wrap("convolve")
inverse = _wrap("inverse")
divide_one_minus = _wrap("divide_one_minus")
multiply_one_minus = _wrap("multiply_one_minus")
knapsack = _knapsack if _ckernels is not None else _pykernels.knapsack
sparse_times_dense = _wrap("sparse_times_dense")

__all__ = ["BACKEND", *_NAMES]

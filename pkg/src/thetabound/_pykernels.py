"""Big-integer reference kernels.

Every function takes and returns plain lists of Python ints.  The compiled
module mirrors these signatures exactly.
"""


def convolve(a, b, n):
    """Coefficients 0..n of the product of two dense lists."""
    out = [0] * (n + 1)
    la = min(len(a), n + 1)
    lb = min(len(b), n + 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        top = min(lb, n + 1 - i)
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def inverse(a, n):
    """Truncated reciprocal of a dense list with a[0] in {1, -1}."""
    a0 = a[0]
    la = len(a)
    out = [0] * (n + 1)
    out[0] = a0
    for m in range(1, n + 1):
        acc = 0
        for i in range(1, min(m, la - 1) + 1):
            ai = a[i]
            if ai:
                acc += ai * out[m - i]
        out[m] = -a0 * acc
    return out


def divide_one_minus(c, step):
    """In place: c <- c / (1 - q^step) truncated to len(c)."""
    for i in range(step, len(c)):
        c[i] += c[i - step]
    return c


def multiply_one_minus(c, step):
    """In place: c <- c * (1 - q^step) truncated to len(c)."""
    for i in range(len(c) - 1, step - 1, -1):
        c[i] -= c[i - step]
    return c


def knapsack(parts, n):
    """Number of multisets of the given parts with each sum 0..n."""
    t = [0] * (n + 1)
    t[0] = 1
    for a in parts:
        if a <= n:
            divide_one_minus(t, a)
    return t


def sparse_times_dense(terms, dense, n):
    """Product of a sparse list of (exponent, coeff) with a dense list."""
    out = [0] * (n + 1)
    ld = len(dense)
    for e, c in terms:
        if e > n or not c:
            continue
        top = min(ld, n + 1 - e)
        for j in range(top):
            out[e + j] += c * dense[j]
    return out

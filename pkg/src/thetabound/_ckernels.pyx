# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 versions of the reference kernels.

Each routine raises OverflowError as soon as an intermediate value leaves
the signed 64-bit range; the caller then reruns the big-integer path.
"""

from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    """
    static inline int tb_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int tb_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    """
    int tb_add(long long a, long long b, long long *r) nogil
    int tb_mul(long long a, long long b, long long *r) nogil


cdef long long *_load(object seq, Py_ssize_t size) except NULL:
    cdef long long *buf = <long long *>calloc(size if size > 0 else 1, sizeof(long long))
    cdef Py_ssize_t i, m
    if buf == NULL:
        raise MemoryError()
    m = min(len(seq), size)
    try:
        for i in range(m):
            buf[i] = seq[i]
    except OverflowError:
        free(buf)
        raise
    return buf


cdef list _dump(long long *buf, Py_ssize_t size):
    return [buf[i] for i in range(size)]


def convolve(a, b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n + 1), lb = min(len(b), n + 1)
    cdef long long *pa = _load(a, la)
    cdef long long *pb = NULL
    cdef long long *out = NULL
    cdef long long t
    cdef Py_ssize_t i, j, top
    cdef int bad = 0
    try:
        pb = _load(b, lb)
        out = _load((), n + 1)
        with nogil:
            for i in range(la):
                if pa[i] == 0:
                    continue
                top = lb if lb < n + 1 - i else n + 1 - i
                for j in range(top):
                    if tb_mul(pa[i], pb[j], &t) or tb_add(out[i + j], t, &out[i + j]):
                        bad = 1
                        break
                if bad:
                    break
        if bad:
            raise OverflowError("convolve")
        return _dump(out, n + 1)
    finally:
        free(pa)
        free(pb)
        free(out)


def inverse(a, Py_ssize_t n):
    cdef Py_ssize_t la = len(a)
    cdef long long *pa = _load(a, la)
    cdef long long *out = NULL
    cdef long long acc, t, a0 = pa[0]
    cdef Py_ssize_t m, i, top
    cdef int bad = 0
    try:
        out = _load((), n + 1)
        out[0] = a0
        with nogil:
            for m in range(1, n + 1):
                acc = 0
                top = m if m < la - 1 else la - 1
                for i in range(1, top + 1):
                    if pa[i] == 0:
                        continue
                    if tb_mul(pa[i], out[m - i], &t) or tb_add(acc, t, &acc):
                        bad = 1
                        break
                if bad:
                    break
                out[m] = -a0 * acc
        if bad:
            raise OverflowError("inverse")
        return _dump(out, n + 1)
    finally:
        free(pa)
        free(out)


cdef int _prefix(long long *c, Py_ssize_t size, Py_ssize_t step) nogil:
    cdef Py_ssize_t i
    for i in range(step, size):
        if tb_add(c[i], c[i - step], &c[i]):
            return 1
    return 0


def divide_one_minus(c, Py_ssize_t step):
    cdef Py_ssize_t size = len(c)
    cdef long long *buf = _load(c, size)
    cdef int bad
    try:
        with nogil:
            bad = _prefix(buf, size, step)
        if bad:
            raise OverflowError("divide_one_minus")
        c[:] = _dump(buf, size)
        return c
    finally:
        free(buf)


def multiply_one_minus(c, Py_ssize_t step):
    cdef Py_ssize_t size = len(c)
    cdef long long *buf = _load(c, size)
    cdef Py_ssize_t i
    cdef int bad = 0
    try:
        with nogil:
            for i in range(size - 1, step - 1, -1):
                if tb_add(buf[i], -buf[i - step], &buf[i]):
                    bad = 1
                    break
        if bad:
            raise OverflowError("multiply_one_minus")
        c[:] = _dump(buf, size)
        return c
    finally:
        free(buf)


def knapsack(parts, Py_ssize_t n):
    cdef long long *t = _load((), n + 1)
    cdef Py_ssize_t a
    cdef int bad = 0
    try:
        t[0] = 1
        for a in parts:
            if a <= n:
                with nogil:
                    bad = _prefix(t, n + 1, a)
                if bad:
                    raise OverflowError("knapsack")
        return _dump(t, n + 1)
    finally:
        free(t)


def sparse_times_dense(terms, dense, Py_ssize_t n):
    cdef Py_ssize_t ld = min(len(dense), n + 1)
    cdef long long *pd = _load(dense, ld)
    cdef long long *out = NULL
    cdef long long c, t
    cdef Py_ssize_t e, j, top
    cdef int bad = 0
    try:
        out = _load((), n + 1)
        for e, c in terms:
            if e > n or c == 0:
                continue
            top = ld if ld < n + 1 - e else n + 1 - e
            with nogil:
                for j in range(top):
                    if tb_mul(c, pd[j], &t) or tb_add(out[e + j], t, &out[e + j]):
                        bad = 1
                        break
            if bad:
                raise OverflowError("sparse_times_dense")
        return _dump(out, n + 1)
    finally:
        free(pd)
        free(out)


def knapsack_mod(parts, Py_ssize_t n, long long p):
    """knapsack(parts, n) reduced modulo a prime p < 2**62."""
    cdef long long *t = _load((), n + 1)
    cdef Py_ssize_t a, i
    cdef long long v
    try:
        t[0] = 1 % p
        for a in parts:
            if a > n:
                continue
            with nogil:
                for i in range(a, n + 1):
                    v = t[i] + t[i - a]
                    if v >= p:
                        v -= p
                    t[i] = v
        return _dump(t, n + 1)
    finally:
        free(t)

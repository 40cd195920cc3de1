# cython: language_level=3
"""Compiled recurrence kernels.

Same three functions as tetragauss._kernel_py; the win is removing the
interpreter dispatch around the inner loops. The values themselves stay
arbitrary-precision Python ints.
"""


def term_iter(c0, c1, c2, c3, n):
    """n-th term of the 4-step recurrence, O(|n|) time, O(1) memory."""
    cdef Py_ssize_t k, steps
    if 0 <= n <= 3:
        return (c0, c1, c2, c3)[n]
    a, b, c, d = c0, c1, c2, c3
    if n > 3:
        steps = n - 3
        for k in range(steps):
            a, b, c, d = b, c, d, a + b + c + d
        return d
    steps = -n
    for k in range(steps):
        a, b, c, d = d - c - b - a, a, b, c
    return a


def sweep(c0, c1, c2, c3, lo, hi):
    """Terms lo..hi (inclusive) in one pass. Requires lo <= hi."""
    cdef Py_ssize_t k, m, start, lo_i, hi_i
    if lo > hi:
        raise ValueError(f"empty sweep: {lo} > {hi}")
    lo_i = lo
    hi_i = hi
    cdef list out = []
    if lo_i < 0:
        a, b, c, d = c0, c1, c2, c3
        m = 0
        while m > lo_i:
            m -= 1
            a, b, c, d = d - c - b - a, a, b, c
            if m <= hi_i:
                out.append(a)
        out.reverse()
    if hi_i >= 0:
        a, b, c, d = c0, c1, c2, c3
        start = lo_i if lo_i > 0 else 0
        for k in range(start):
            a, b, c, d = b, c, d, a + b + c + d
        out.append(a)
        for k in range(start + 1, hi_i + 1):
            a, b, c, d = b, c, d, a + b + c + d
            out.append(a)
    return out


def series_expand(num, den_tail, count, zero=0):
    """First ``count`` power-series coefficients of num(x)/den(x).

    ``den_tail`` holds the denominator coefficients above the constant
    term, which the caller has already normalized to one.
    """
    cdef Py_ssize_t k, j, nlen, dlen, count_i
    count_i = count
    nlen = len(num)
    dlen = len(den_tail)
    cdef list out = []
    for k in range(count_i):
        acc = num[k] if k < nlen else zero
        for j in range(1, dlen + 1):
            if j > k:
                break
            acc = acc - den_tail[j - 1] * out[k - j]
        out.append(acc)
    return out

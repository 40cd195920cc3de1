"""Pure-Python recurrence kernels.

Fallback for :mod:`tetragauss._kernel` (the Cython build of the same three
functions). Both implementations must stay behaviorally identical; the
backend test suite compares them directly.
"""


def term_iter(c0, c1, c2, c3, n):
    """n-th term of the 4-step recurrence, O(|n|) time, O(1) memory.

    Forward rule for n > 3, backward rule for n < 0; initial values are
    returned directly.
    """
    if 0 <= n <= 3:
        return (c0, c1, c2, c3)[n]
    a, b, c, d = c0, c1, c2, c3
    if n > 3:
        for _ in range(n - 3):
            a, b, c, d = b, c, d, a + b + c + d
        return d
    for _ in range(-n):
        a, b, c, d = d - c - b - a, a, b, c
    return a


def sweep(c0, c1, c2, c3, lo, hi):
    """Terms lo..hi (inclusive) in one pass. Requires lo <= hi."""
    if lo > hi:
        raise ValueError(f"empty sweep: {lo} > {hi}")
    out = []
    if lo < 0:
        a, b, c, d = c0, c1, c2, c3
        m = 0
        while m > lo:
            m -= 1
            a, b, c, d = d - c - b - a, a, b, c
            if m <= hi:
                out.append(a)
        out.reverse()
    if hi >= 0:
        a, b, c, d = c0, c1, c2, c3
        start = max(lo, 0)
        for _ in range(start):
            a, b, c, d = b, c, d, a + b + c + d
        out.append(a)
        for _ in range(start + 1, hi + 1):
            a, b, c, d = b, c, d, a + b + c + d
            out.append(a)
    return out


def series_expand(num, den_tail, count, zero=0):
    """First ``count`` power-series coefficients of num(x)/den(x).

    ``den_tail`` holds the denominator coefficients above the constant
    term, which the caller has already normalized to one. Works for any
    coefficient type with ``+``/``-``/``*`` (ints, Gaussian integers).
    """
    out = []
    nlen = len(num)
    for k in range(count):
        acc = num[k] if k < nlen else zero
        for j, dj in enumerate(den_tail, start=1):
            if j > k:
                break
            acc = acc - dj * out[k - j]
        out.append(acc)
    return out

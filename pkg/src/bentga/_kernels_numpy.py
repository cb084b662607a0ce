"""Pure-NumPy implementations of the hot integer kernels.

Fallback path selected by ``BENTGA_NO_NUMBA=1`` (or automatically when
numba is missing).  Must stay value-identical to the numba versions;
``tests/test_backends.py`` and ``benchmarks/bench_backends.py`` compare
both.
"""

import numpy as np


def fwht_signs(bits):
    """Walsh spectrum of a 0/1 table via the vectorised butterfly."""
    w = 1 - 2 * bits.astype(np.int64)
    size = w.shape[0]
    h = 1
    while h < size:
        w = w.reshape(-1, 2 * h)
        left = w[:, :h].copy()
        w[:, :h] = left + w[:, h:]
        w[:, h:] = left - w[:, h:]
        w = w.reshape(-1)
        h *= 2
    return w


def quartic_sum(w):
    """Sum of fourth powers of spectrum entries (int64; caller bounds n)."""
    sq = w * w
    return int(np.dot(sq, sq))


def derivative_phase_sum(bits):
    """Literal sum of (-1)^{f(x)^f(x^a)^f(x^b)^f(x^a^b)} over all (x, a, b)."""
    size = bits.shape[0]
    s = 1 - 2 * bits.astype(np.int64)
    idx = np.arange(size)
    total = 0
    for a in range(size):
        sa = s * s[idx ^ a]
        for b in range(size):
            total += int(np.dot(sa, sa[idx ^ b]))
    return total


def autocorr_square_sum(bits):
    """Sum over a of (sum_x s(x) s(x^a))^2 with s = (-1)^f.

    Equals the triple phase sum above, grouped so the cost is 2^{2n}
    instead of 2^{3n}.
    """
    size = bits.shape[0]
    s = 1 - 2 * bits.astype(np.int64)
    idx = np.arange(size)
    total = 0
    for a in range(size):
        r = int(np.dot(s, s[idx ^ a]))
        total += r * r
    return total

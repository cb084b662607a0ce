"""Numba-compiled hot kernels (lazy @njit, on-disk cache)."""

import numpy as np
from numba import njit


@njit(cache=True)
def fwht_signs(bits):
    size = bits.shape[0]
    w = np.empty(size, dtype=np.int64)
    for i in range(size):
        w[i] = 1 - 2 * np.int64(bits[i])
    h = 1
    while h < size:
        for start in range(0, size, 2 * h):
            for j in range(start, start + h):
                x = w[j]
                y = w[j + h]
                w[j] = x + y
                w[j + h] = x - y
        h *= 2
    return w


@njit(cache=True)
def quartic_sum(w):
    total = np.int64(0)
    for i in range(w.shape[0]):
        sq = w[i] * w[i]
        total += sq * sq
    return total


@njit(cache=True)
def derivative_phase_sum(bits):
    size = bits.shape[0]
    total = np.int64(0)
    for a in range(size):
        for b in range(size):
            for x in range(size):
                d = bits[x] ^ bits[x ^ a] ^ bits[x ^ b] ^ bits[x ^ a ^ b]
                total += 1 - 2 * np.int64(d)
    return total


@njit(cache=True)
def autocorr_square_sum(bits):
    size = bits.shape[0]
    total = np.int64(0)
    for a in range(size):
        r = np.int64(0)
        for x in range(size):
            r += 1 - 2 * np.int64(bits[x] ^ bits[x ^ a])
        total += r * r
    return total

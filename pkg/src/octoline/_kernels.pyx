# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled product kernel. Must stay term for term identical to the
pure Python twin so both backends give bit-identical results."""

import numpy as np

BACKEND = "compiled"


def mul(const double[::1] a, const double[::1] b):
    """Multiply two coefficient arrays of length 8, returning a new array."""
    out = np.empty(8, dtype=np.float64)
    cdef double[::1] c = out
    cdef double a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3]
    cdef double a4 = a[4], a5 = a[5], a6 = a[6], a7 = a[7]
    cdef double b0 = b[0], b1 = b[1], b2 = b[2], b3 = b[3]
    cdef double b4 = b[4], b5 = b[5], b6 = b[6], b7 = b[7]
    c[0] = a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4 - a5 * b5 - a6 * b6 - a7 * b7
    c[1] = a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2 + a4 * b5 - a5 * b4 - a6 * b7 + a7 * b6
    c[2] = a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1 - a4 * b6 - a5 * b7 + a6 * b4 + a7 * b5
    c[3] = a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0 - a4 * b7 + a5 * b6 - a6 * b5 + a7 * b4
    c[4] = a0 * b4 - a1 * b5 + a2 * b6 + a3 * b7 + a4 * b0 + a5 * b1 - a6 * b2 - a7 * b3
    c[5] = a0 * b5 + a1 * b4 + a2 * b7 - a3 * b6 - a4 * b1 + a5 * b0 + a6 * b3 - a7 * b2
    c[6] = a0 * b6 + a1 * b7 - a2 * b4 + a3 * b5 + a4 * b2 - a5 * b3 + a6 * b0 - a7 * b1
    c[7] = a0 * b7 - a1 * b6 - a2 * b5 - a3 * b4 + a4 * b3 + a5 * b2 + a6 * b1 + a7 * b0
    return out

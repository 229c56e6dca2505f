# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled lattice kernel: the same point-by-point enumeration as
``hirzcoh._kernels_py``, lowered to C loops.

Callers bound the inputs (|a|, |b| <= 10**4 at the oracle surface), so the
running count fits comfortably in 64 bits.
"""


def lattice_point_count(long long a, long long b, long long e):
    """Count {(u, v) in Z^2 : 0 <= v <= a, 0 <= u <= b - e*v} point by point."""
    cdef long long n = 0
    cdef long long v, u, top
    for v in range(a + 1):
        top = b - e * v
        for u in range(top + 1):
            n += 1
    return n

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loop for sequence generation.

Only valid when every parameter and every generated value fits in signed
64-bit; hiccup.engine checks that bound and falls back to the pure Python
loop otherwise.  The algorithm is the same monotone-cursor scan in both
implementations.
"""

from cpython cimport array

import array

cdef array.array _I64 = array.array('q', [])


def generate(long long j, long long x, long long y, long long z,
             Py_ssize_t n_terms):
    """Return (values, hits) for n_terms terms of the (j, x, y, z) sequence.

    values is an array('q') with a(1..n_terms); hits is a bytes object of
    length n_terms - 1 whose entry i flags whether index k = i + 2 hit.
    """
    cdef array.array values = array.clone(_I64, n_terms, zero=False)
    cdef long long[::1] v = values
    cdef bytearray hits = bytearray(n_terms - 1 if n_terms > 1 else 0)
    cdef Py_ssize_t c = 0, k, limit
    cdef long long cur = x, target

    v[0] = x
    if n_terms == 1:
        return values, bytes(hits)

    cdef unsigned char[::1] h = hits
    for k in range(2, n_terms + 1):
        target = k - j
        limit = k - 1
        # stored values are nondecreasing, so the cursor never moves back
        while c < limit and v[c] < target:
            c += 1
        if c < limit and v[c] == target:
            cur += y
            h[k - 2] = 1
        else:
            cur += z
        v[k - 1] = cur
    return values, bytes(hits)

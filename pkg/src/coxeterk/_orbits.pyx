# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled union-find kernel for counting F-conjugacy orbits."""

import numpy as np


cdef inline int _find(int[::1] parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline void _union(int[::1] parent, int a, int b) noexcept nogil:
    a = _find(parent, a)
    b = _find(parent, b)
    if a < b:
        parent[b] = a
    elif b < a:
        parent[a] = b


def count_fconj_orbits(const int[:, ::1] mul, const int[::1] inv,
                       const int[:, ::1] powers, const unsigned char[::1] regular):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t k = powers.shape[0]
    cdef Py_ssize_t x, g, j
    cdef int count = 0
    cdef int[::1] parent = np.arange(n, dtype=np.intc)
    with nogil:
        for x in range(n):
            if not regular[x]:
                continue
            for g in range(n):
                _union(parent, <int>x, mul[mul[g, x], inv[g]])
        for x in range(n):
            if not regular[x]:
                continue
            for j in range(k):
                _union(parent, <int>x, powers[j, x])
        for x in range(n):
            if regular[x] and _find(parent, <int>x) == x:
                count += 1
    return count

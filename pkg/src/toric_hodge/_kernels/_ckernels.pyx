# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled lattice-point kernels. Mirrors ``_pykernels``."""

from libc.stdlib cimport malloc, free

ctypedef long long i64


def count_chamber(rays, coeffs, long mask, lo, hi):
    """Count integer m in the box ``lo <= m <= hi`` whose negative set is ``mask``."""
    cdef Py_ssize_t d = len(rays)
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t i, k
    cdef i64 v, count = 0
    cdef bint ok, bit
    for k in range(n):
        if lo[k] > hi[k]:
            return 0
    cdef i64 *u = <i64 *> malloc(d * n * sizeof(i64))
    cdef i64 *t = <i64 *> malloc(d * sizeof(i64))
    cdef i64 *m = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *a = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *b = <i64 *> malloc(n * sizeof(i64))
    if not u or not t or not m or not a or not b:
        free(u); free(t); free(m); free(a); free(b)
        raise MemoryError()
    try:
        for i in range(d):
            t[i] = -coeffs[i]
            for k in range(n):
                u[i * n + k] = rays[i][k]
        for k in range(n):
            a[k] = lo[k]
            b[k] = hi[k]
            m[k] = a[k]
        while True:
            ok = True
            for i in range(d):
                v = 0
                for k in range(n):
                    v += m[k] * u[i * n + k]
                bit = (mask >> i) & 1
                if (v < t[i]) != bit:
                    ok = False
                    break
            if ok:
                count += 1
            # odometer increment
            k = 0
            while k < n:
                m[k] += 1
                if m[k] <= b[k]:
                    break
                m[k] = a[k]
                k += 1
            if k == n:
                break
    finally:
        free(u); free(t); free(m); free(a); free(b)
    return count

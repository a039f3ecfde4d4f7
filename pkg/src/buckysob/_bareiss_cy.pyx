# cython: language_level=3
"""Compiled lane of the fraction-free elimination kernels.

Same algorithms as ``_bareiss_py``; arithmetic stays on Python ints
(arbitrary precision is required), Cython only strips the interpreter
overhead from the inner loops.
"""


def det_int(rows):
    """Determinant of a square integer matrix. Returns (det, ops)."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, piv
    cdef long long ops = 0
    cdef int sign = 1
    a = [list(r) for r in rows]
    prev = 1
    for k in range(n - 1):
        piv = -1
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv < 0:
            return 0, ops
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - aik * rk[j]) // prev
                ops += 1
            ri[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1], ops


def jordan_int(aug, Py_ssize_t n, Py_ssize_t m):
    """Fraction-free Gauss-Jordan on [M | R]; returns (det, num, ops)."""
    cdef Py_ssize_t w = n + m
    cdef Py_ssize_t i, j, k, piv
    cdef long long ops = 0
    cdef int sign = 1
    a = [list(r) for r in aug]
    prev = 1
    for k in range(n):
        piv = -1
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv < 0:
            raise ZeroDivisionError("matrix is singular")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        rk = a[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, w):
                ri[j] = (pk * ri[j] - aik * rk[j]) // prev
                ops += 1
            ri[k] = 0
        prev = pk
    det = sign * a[n - 1][n - 1]
    num = [[sign * a[i][j] for j in range(n, w)] for i in range(n)]
    return det, num, ops

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Brute-force segment-pair crossing scan, compiled twin of _crossings_py.

Same contract: (x, y) polyline vertices in, (k, 4) float64 array of raw hits
[i, t, j, u] out, ordered by (i, j), j >= i + 2, parallel pairs skipped,
identical bounding-box prefilter.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

SLACK = 1e-9


def find_hits(object x_in, object y_in, double slack=1e-9):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x = np.ascontiguousarray(x_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] y = np.ascontiguousarray(y_in, dtype=np.float64)
    if x.shape[0] != y.shape[0] or x.shape[0] < 2:
        raise ValueError("x and y must be equal-length 1-d vertex arrays")

    cdef Py_ssize_t n = x.shape[0] - 1
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lox = np.minimum(x[:-1], x[1:])
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hix = np.maximum(x[:-1], x[1:])
    cdef cnp.ndarray[cnp.float64_t, ndim=1] loy = np.minimum(y[:-1], y[1:])
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hiy = np.maximum(y[:-1], y[1:])

    cdef list out = []
    cdef Py_ssize_t i, j
    cdef double pix, piy, dix, diy, bix_lo, bix_hi, biy_lo, biy_hi
    cdef double rx, ry, djx, djy, den, t, u
    for i in range(n - 2):
        pix = x[i]
        piy = y[i]
        dix = x[i + 1] - pix
        diy = y[i + 1] - piy
        bix_lo = lox[i]
        bix_hi = hix[i]
        biy_lo = loy[i]
        biy_hi = hiy[i]
        for j in range(i + 2, n):
            if bix_lo > hix[j] or bix_hi < lox[j] or biy_lo > hiy[j] or biy_hi < loy[j]:
                continue
            djx = x[j + 1] - x[j]
            djy = y[j + 1] - y[j]
            den = dix * djy - diy * djx
            if den == 0.0:
                continue
            rx = x[j] - pix
            ry = y[j] - piy
            t = (rx * djy - ry * djx) / den
            if t < -slack or t > 1.0 + slack:
                continue
            u = (rx * diy - ry * dix) / den
            if u < -slack or u > 1.0 + slack:
                continue
            out.append((i, t, j, u))
    if not out:
        return np.empty((0, 4), dtype=np.float64)
    return np.array(out, dtype=np.float64)

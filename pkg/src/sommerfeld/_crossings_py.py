"""Brute-force segment-pair crossing scan, numpy implementation.

Contract shared with the compiled twin in _crossings.pyx: given polyline
vertices (x, y), return a (k, 4) float64 array of raw hits [i, t, j, u] with
j >= i + 2, where the parametric solve of segment i against segment j gives
t, u in [-slack, 1 + slack].  Hits are ordered by (i, j).  Pairs with a zero
cross product (parallel or collinear) are skipped: only transversal line
crossings count.  Adjacent segments share an endpoint by construction and
are excluded via the j >= i + 2 bound.

An axis-aligned bounding-box prefilter rejects almost every pair before the
exact solve; both backends apply the identical filter so their outputs match
bit for bit.
"""

from __future__ import annotations

import numpy as np

SLACK: float = 1e-9

_BLOCK: int = 1024


def find_hits(x: np.ndarray, y: np.ndarray, slack: float = SLACK) -> np.ndarray:
    x = np.ascontiguousarray(x, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1 or x.size < 2:
        raise ValueError("x and y must be equal-length 1-d vertex arrays")

    px, py = x[:-1], y[:-1]
    dx, dy = np.diff(x), np.diff(y)
    lox = np.minimum(px, x[1:])
    hix = np.maximum(px, x[1:])
    loy = np.minimum(py, y[1:])
    hiy = np.maximum(py, y[1:])

    n = px.size
    jall = np.arange(n)
    rows = []
    for a in range(0, max(n - 2, 0), _BLOCK):
        b = min(a + _BLOCK, n - 2)
        overlap = (
            (lox[a:b, None] <= hix[None, :])
            & (hix[a:b, None] >= lox[None, :])
            & (loy[a:b, None] <= hiy[None, :])
            & (hiy[a:b, None] >= loy[None, :])
            & (jall[None, :] >= np.arange(a, b)[:, None] + 2)
        )
        ii, jj = np.nonzero(overlap)
        if ii.size == 0:
            continue
        ii = ii + a
        rx = px[jj] - px[ii]
        ry = py[jj] - py[ii]
        den = dx[ii] * dy[jj] - dy[ii] * dx[jj]
        safe = np.where(den != 0.0, den, 1.0)
        t = (rx * dy[jj] - ry * dx[jj]) / safe
        u = (rx * dy[ii] - ry * dx[ii]) / safe
        good = (
            (den != 0.0)
            & (t >= -slack)
            & (t <= 1.0 + slack)
            & (u >= -slack)
            & (u <= 1.0 + slack)
        )
        if good.any():
            k = np.nonzero(good)[0]
            rows.append(np.column_stack([ii[k].astype(np.float64), t[k], jj[k].astype(np.float64), u[k]]))
    if not rows:
        return np.empty((0, 4), dtype=np.float64)
    return np.concatenate(rows, axis=0)

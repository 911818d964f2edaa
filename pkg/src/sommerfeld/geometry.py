"""Sampled rosette trajectories and transversal self-intersection counting.

The rosette in polar form is r(theta) = a*(1 - eps^2) / (1 + eps*cos(omega*theta)),
one radial period spanning theta in [0, 2*pi/omega].  Sampling uniformly in
theta with an even samples_per_rev places vertices exactly on the perihelion
(theta = 0) and the aphelion (theta = pi/omega), so sampled extremes match
r_min and r_max to float precision.

Self-intersections are counted by brute force over all non-adjacent segment
pairs.  A crossing that lands within VERTEX_SNAP of a shared vertex shows up
once per touching segment; such hits are merged by their nearest-sample index
pair, everything else counts directly.  The count is an independent geometric
check on the algebraic winding number: it never consults delta_theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import OrbitParameters
from .errors import DegenerateError, ResolutionError

MIN_SAMPLES_PER_REV: int = 16
COUNTING_FLOOR_PER_REV: int = 512
VERTEX_SNAP: float = 1e-9

PERIOD_LIMITS = ("one-period", "full")


def radius_at(params: OrbitParameters, theta):
    """Orbit radius at azimuth theta (scalar or array), in Bohr radii."""
    arr = np.asarray(theta, dtype=np.float64)
    semi_latus = params.a_over_a0 * (1.0 - params.epsilon**2)
    out = semi_latus / (1.0 + params.epsilon * np.cos(params.omega * arr))
    if arr.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class TrajectoryPolyline:
    """Uniform-in-theta samples of a rosette, as an (n, 4) array.

    Columns are theta, r, x, y with n = revolutions*samples_per_rev + 1.
    """

    points: np.ndarray
    revolutions: int
    samples_per_rev: int
    params: OrbitParameters

    @property
    def theta(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def r(self) -> np.ndarray:
        return self.points[:, 1]

    @property
    def x(self) -> np.ndarray:
        return self.points[:, 2]

    @property
    def y(self) -> np.ndarray:
        return self.points[:, 3]


@dataclass(frozen=True)
class IntersectionReport:
    """Transversal self-intersection census of one polyline window.

    count is the number of crossings in the requested window; loops is the
    count restricted to one radial period; winding_from_geometry = loops + 1.
    crossing_thetas holds the (theta_first, theta_second) parameter pairs of
    each counted crossing in the requested window.
    """

    count: int
    loops: int
    winding_from_geometry: int
    crossing_thetas: np.ndarray


def sample_trajectory(
    params: OrbitParameters,
    revolutions: int = 1,
    samples_per_rev: int = 1024,
) -> TrajectoryPolyline:
    """Sample revolutions radial periods at samples_per_rev points each.

    Returns revolutions*samples_per_rev + 1 points, endpoints included, theta
    strictly increasing from 0 to revolutions*2*pi/omega.
    """
    if isinstance(revolutions, bool) or not isinstance(revolutions, int) or revolutions < 1:
        raise ValueError(f"revolutions must be an integer >= 1, got {revolutions!r}")
    if (
        isinstance(samples_per_rev, bool)
        or not isinstance(samples_per_rev, int)
        or samples_per_rev < MIN_SAMPLES_PER_REV
    ):
        raise ValueError(
            f"samples_per_rev must be an integer >= {MIN_SAMPLES_PER_REV}, got {samples_per_rev!r}"
        )
    period = 2.0 * math.pi / params.omega
    theta = np.linspace(0.0, revolutions * period, revolutions * samples_per_rev + 1)
    r = radius_at(params, theta)
    pts = np.column_stack([theta, r, r * np.cos(theta), r * np.sin(theta)])
    return TrajectoryPolyline(
        points=pts, revolutions=revolutions, samples_per_rev=samples_per_rev, params=params
    )


def _dedupe(hits: np.ndarray, snap: float = VERTEX_SNAP) -> list[tuple[int, float, int, float]]:
    # Hits arrive ordered by (i, j); a crossing at a shared vertex appears once
    # per touching segment and collapses onto one nearest-sample key.
    seen = set()
    kept = []
    for i_f, t, j_f, u in hits:
        i, j = int(i_f), int(j_f)
        if min(t, 1.0 - t) < snap or min(u, 1.0 - u) < snap:
            key = (round(i + t), round(j + u))
        else:
            key = (i, j)
        if key in seen:
            continue
        seen.add(key)
        kept.append((i, float(t), j, float(u)))
    return kept


def _count_window(x: np.ndarray, y: np.ndarray, theta: np.ndarray):
    hits = kernels.find_hits(x, y)
    kept = _dedupe(hits)
    if not kept:
        return 0, np.empty((0, 2), dtype=np.float64)
    pairs = np.array(
        [
            (
                theta[i] + t * (theta[i + 1] - theta[i]),
                theta[j] + u * (theta[j + 1] - theta[j]),
            )
            for i, t, j, u in kept
        ],
        dtype=np.float64,
    )
    return len(kept), pairs


def count_self_intersections(
    poly: TrajectoryPolyline, period_limit: str = "one-period"
) -> IntersectionReport:
    """Count transversal self-crossings of the polyline.

    period_limit "one-period" restricts the scan to the first radial period;
    "full" scans the whole polyline but still reports loops for one period.
    """
    if period_limit not in PERIOD_LIMITS:
        raise ValueError(f"period_limit must be one of {PERIOD_LIMITS}, got {period_limit!r}")
    if poly.samples_per_rev < COUNTING_FLOOR_PER_REV:
        raise ResolutionError(
            f"need >= {COUNTING_FLOOR_PER_REV} samples per revolution for counting, "
            f"got {poly.samples_per_rev}"
        )
    if poly.params.epsilon == 0.0:
        raise DegenerateError("circular orbit (eps = 0) has no transversal self-crossings")

    one = poly.points[: poly.samples_per_rev + 1]
    loops, one_pairs = _count_window(one[:, 2], one[:, 3], one[:, 0])
    if period_limit == "one-period" or poly.revolutions == 1:
        count, pairs = loops, one_pairs
    else:
        count, pairs = _count_window(poly.x, poly.y, poly.theta)
    return IntersectionReport(
        count=count,
        loops=loops,
        winding_from_geometry=loops + 1,
        crossing_thetas=pairs,
    )

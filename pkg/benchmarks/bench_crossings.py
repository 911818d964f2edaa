"""Timing comparison of the segment-crossing kernels.

Runs the brute-force O(n^2) self-intersection scan over one radial period of
the z = 131 rosette (three crossings) at increasing sampling densities and
reports the median of three runs per backend.

Usage: python benchmarks/bench_crossings.py
"""

import statistics
import time

from sommerfeld import orbit_for, sample_trajectory
from sommerfeld.kernels import available_backends

SIZES = (1024, 2048, 4096, 8192)
RUNS = 3


def _time(fn, x, y) -> float:
    samples = []
    for _ in range(RUNS):
        start = time.perf_counter()
        fn(x, y)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def main() -> None:
    backends = available_backends()
    names = sorted(backends)
    poly_cache = {
        n: sample_trajectory(orbit_for(131), revolutions=1, samples_per_rev=n) for n in SIZES
    }

    print(f"backends found: {', '.join(names)}")
    header = "samples/period" + "".join(f"{name + ' (ms)':>16}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for n in SIZES:
        poly = poly_cache[n]
        medians = {name: _time(backends[name], poly.x, poly.y) for name in names}
        line = f"{n:>14}" + "".join(f"{medians[name] * 1e3:>16.2f}" for name in names)
        if len(names) == 2:
            line += f"{medians['python'] / medians['compiled']:>9.1f}x"
        print(line)

    counts = {name: len(backends[name](poly_cache[4096].x, poly_cache[4096].y)) for name in names}
    assert len(set(counts.values())) == 1, f"backends disagree: {counts}"
    print(f"raw hits at 4096 samples (all backends agree): {counts[names[0]]}")


if __name__ == "__main__":
    main()

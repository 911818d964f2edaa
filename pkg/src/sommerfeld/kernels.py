"""Crossing-kernel selection: compiled extension if available, numpy otherwise.

Both backends implement the exact same contract (see _crossings_py) and are
interchangeable; the compiled one is only faster.  Set the environment
variable SOMMERFELD_PURE_PYTHON=1 before import to force the fallback.
"""

from __future__ import annotations

import os
from typing import Callable

import numpy as np

from . import _crossings_py

find_hits: Callable[..., np.ndarray]

if os.environ.get("SOMMERFELD_PURE_PYTHON") == "1":
    BACKEND = "python"
    find_hits = _crossings_py.find_hits
else:
    try:
        from . import _crossings

        BACKEND = "compiled"
        find_hits = _crossings.find_hits
    except ImportError:
        BACKEND = "python"
        find_hits = _crossings_py.find_hits


def available_backends() -> dict[str, Callable[..., np.ndarray]]:
    """Every importable backend, keyed by name. Used by benchmarks and tests."""
    found = {"python": _crossings_py.find_hits}
    try:
        from . import _crossings

        found["compiled"] = _crossings.find_hits
    except ImportError:
        pass
    return found

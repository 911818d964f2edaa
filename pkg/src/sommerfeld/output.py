"""Deterministic writers: trajectory CSV, standalone SVG, parameter tables.

Every writer produces byte-identical output for identical input: fixed key
order, fixed attribute order, no timestamps, LF newlines.  Trajectory CSV
carries 9 significant digits; parameter CSV/JSON carry full binary64
precision (17 significant digits round-trip).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from io import StringIO
from typing import IO, Iterable, Sequence

from .core import ALPHA_FS, OrbitParameters, QuantumNumbers, orbit_for
from .elements import ElementInfo, Z_FIRST, Z_LAST, element_info, ion_label
from .geometry import TrajectoryPolyline

TRAJECTORY_FORMAT = "%.9g"
TABLE_FORMAT = "%.17g"

FORMATS = ("text", "csv", "json")

# label column of the text layout mirrors the published row order
_TEXT_ROWS = (
    ("omega", "omega"),
    ("epsilon", "epsilon"),
    ("a/a0", "a_over_a0"),
    ("r_min", "r_min"),
    ("r_max", "r_max"),
    ("delta_theta", "delta_theta"),
    ("v/c", "v_ground"),
    ("E/mc^2", "energy_ratio"),
    ("winding", "winding_raw"),
)

_TABLE_FIELDS = (
    "omega",
    "epsilon",
    "a_over_a0",
    "r_min",
    "r_max",
    "delta_theta",
    "v_ground",
    "energy_ratio",
    "winding_raw",
)


@dataclass(frozen=True)
class RenderOptions:
    """Knobs of the SVG renderer; defaults give an 800 px square canvas."""

    width_px: int = 800
    height_px: int = 800
    margin_fraction: float = 0.05
    stroke_width_px: float = 1.0
    show_focus: bool = True
    show_ground_circle: bool = False


def default_revolutions(params: OrbitParameters) -> int:
    """ceil(2*pi/delta_theta) radial periods, capped at 64."""
    return min(64, math.ceil(2.0 * math.pi / params.delta_theta))


def write_trajectory_csv(poly: TrajectoryPolyline, stream: IO[str]) -> None:
    """theta,r,x,y rows at 9 significant digits."""
    stream.write("theta,r,x,y\n")
    for theta, r, x, y in poly.points:
        stream.write(
            f"{TRAJECTORY_FORMAT % theta},{TRAJECTORY_FORMAT % r},"
            f"{TRAJECTORY_FORMAT % x},{TRAJECTORY_FORMAT % y}\n"
        )


def trajectory_csv(poly: TrajectoryPolyline) -> str:
    buf = StringIO()
    write_trajectory_csv(poly, buf)
    return buf.getvalue()


def render_svg(poly: TrajectoryPolyline, options: RenderOptions | None = None) -> str:
    """Standalone SVG: one path for the orbit, optional focus dot and ground circle.

    The viewBox spans [-v, v]^2 in world units (Bohr radii) with
    v = r_max * (1 + margin_fraction); a scale(1,-1) group makes y point up.
    Path coordinates are world coordinates at 9 significant digits, so the
    drawing is an exact record of the sampled polyline.  No scripts, no CSS.
    """
    opt = options or RenderOptions()
    p = poly.params
    view = p.r_max * (1.0 + opt.margin_fraction)
    world_per_px = 2.0 * view / opt.width_px
    stroke = TRAJECTORY_FORMAT % (opt.stroke_width_px * world_per_px)
    num = lambda v: TRAJECTORY_FORMAT % v

    body = []
    if opt.show_focus:
        body.append(f'<circle cx="0" cy="0" r="{num(view / 100.0)}" fill="#333333"/>')
    if opt.show_ground_circle:
        ground_r = math.sqrt(1.0 - (ALPHA_FS * p.z) ** 2) / p.z
        body.append(
            f'<circle cx="0" cy="0" r="{num(ground_r)}" fill="none" '
            f'stroke="#999999" stroke-width="{stroke}"/>'
        )
    d = "M " + " L ".join(f"{num(x)} {num(y)}" for x, y in zip(poly.x, poly.y))
    body.append(f'<path d="{d}" fill="none" stroke="#1f4e8c" stroke-width="{stroke}"/>')

    inner = "\n".join(f"  {line}" for line in body)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{opt.width_px}" '
        f'height="{opt.height_px}" '
        f'viewBox="{num(-view)} {num(-view)} {num(2 * view)} {num(2 * view)}">\n'
        '<g transform="scale(1,-1)">\n'
        f"{inner}\n"
        "</g>\n"
        "</svg>\n"
    )


def write_svg(poly: TrajectoryPolyline, stream: IO[str], options: RenderOptions | None = None) -> None:
    stream.write(render_svg(poly, options))


@dataclass(frozen=True)
class ParameterRow:
    """One table column: orbit parameters plus registry info when covered."""

    z: int
    element: ElementInfo | None
    params: OrbitParameters


def parameter_rows(zs: Iterable[int], qn: QuantumNumbers | None = None) -> list[ParameterRow]:
    qn = qn or QuantumNumbers()
    rows = []
    for z in zs:
        elem = element_info(z) if Z_FIRST <= z <= Z_LAST else None
        rows.append(ParameterRow(z=z, element=elem, params=orbit_for(z, qn.n_r, qn.n_theta)))
    return rows


def row_to_dict(row: ParameterRow) -> dict:
    p = row.params
    elem = None
    if row.element is not None:
        elem = {
            "symbol": row.element.symbol,
            "name": row.element.name,
            "hypothetical": row.element.hypothetical,
            "ion_label": ion_label(row.z),
        }
    out = {"z": row.z, "n_r": p.n_r, "n_theta": p.n_theta, "element": elem}
    for field in _TABLE_FIELDS:
        out[field] = getattr(p, field if field != "v_ground" else "ground_speed")
    out["winding"] = p.winding
    return out


def _column_header(row: ParameterRow) -> str:
    if row.element is not None:
        return ion_label(row.z)
    return f"Z={row.z}"


def _text_table(rows: Sequence[ParameterRow]) -> str:
    blocks = []
    for start in range(0, len(rows), 5):
        chunk = rows[start : start + 5]
        headers = [_column_header(r) for r in chunk]
        width = max(12, *(len(h) for h in headers)) + 2
        lines = ["Parameters vs Z".ljust(16) + "".join(h.rjust(width) for h in headers)]
        for label, field in _TEXT_ROWS:
            attr = "ground_speed" if field == "v_ground" else field
            cells = "".join(("%.6g" % getattr(r.params, attr)).rjust(width) for r in chunk)
            lines.append(label.ljust(16) + cells)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _csv_table(rows: Sequence[ParameterRow]) -> str:
    header = ["z", "symbol", "name", "hypothetical", "ion_label", *_TABLE_FIELDS, "winding"]
    lines = [",".join(header)]
    for row in rows:
        d = row_to_dict(row)
        elem = d["element"]
        cells = [
            str(d["z"]),
            elem["symbol"] if elem else "",
            elem["name"] if elem else "",
            str(elem["hypothetical"]).lower() if elem else "",
            elem["ion_label"] if elem else "",
        ]
        cells += [TABLE_FORMAT % d[f] for f in _TABLE_FIELDS]
        cells.append(str(d["winding"]))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def write_parameter_table(rows: Sequence[ParameterRow], fmt: str, stream: IO[str]) -> None:
    """Write rows as text (published table layout), csv or json."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    if fmt == "text":
        stream.write(_text_table(rows))
    elif fmt == "csv":
        stream.write(_csv_table(rows))
    else:
        stream.write(json.dumps([row_to_dict(r) for r in rows], indent=2, allow_nan=False))
        stream.write("\n")


def parameter_table(rows: Sequence[ParameterRow], fmt: str) -> str:
    buf = StringIO()
    write_parameter_table(rows, fmt, buf)
    return buf.getvalue()

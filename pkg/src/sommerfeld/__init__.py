"""Relativistic Kepler orbits of hydrogen-like ions (1 <= Z <= 137).

Computes the precessing-ellipse orbit of a single bound electron in the
fine-structure treatment: frequency ratio, eccentricity, apsides, perihelion
advance, binding energy and winding number; samples and renders the rosette
trajectories; counts their self-intersections geometrically; classifies the
Coulomb field strength of transuranium ions; and validates the embedded
published tables against recomputation.
"""

from .core import (
    ALPHA_FS,
    CONSTANTS,
    INV_ALPHA_FS,
    Z_MAX,
    Z_MIN,
    IonSpec,
    OrbitParameters,
    PhysicalConstants,
    QuantumNumbers,
    azimuthal_frequency,
    eccentricity,
    energy_ratio,
    ground_speed,
    orbit_for,
    orbit_parameters,
    perihelion_advance,
    round_half_away,
    semi_major_axis,
    winding_number,
)
from .elements import (
    HYPOTHETICAL_FROM,
    Z_FIRST,
    Z_LAST,
    ElementInfo,
    FieldStrength,
    classify,
    element_info,
    ion_label,
)
from .errors import (
    DegenerateError,
    DomainError,
    NotFoundError,
    ResolutionError,
    SommerfeldError,
)
from .geometry import (
    IntersectionReport,
    TrajectoryPolyline,
    count_self_intersections,
    radius_at,
    sample_trajectory,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .output import (
    ParameterRow,
    RenderOptions,
    default_revolutions,
    parameter_rows,
    parameter_table,
    render_svg,
    trajectory_csv,
    write_parameter_table,
    write_svg,
    write_trajectory_csv,
)
from .reference import (
    Discrepancy,
    ReferenceColumn,
    Verdict,
    errata_report,
    load_reference_columns,
    recompute_row,
    reference_column,
    validate_all,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_FS",
    "CONSTANTS",
    "INV_ALPHA_FS",
    "Z_MAX",
    "Z_MIN",
    "Z_FIRST",
    "Z_LAST",
    "HYPOTHETICAL_FROM",
    "KERNEL_BACKEND",
    "__version__",
    "IonSpec",
    "OrbitParameters",
    "PhysicalConstants",
    "QuantumNumbers",
    "azimuthal_frequency",
    "eccentricity",
    "energy_ratio",
    "ground_speed",
    "orbit_for",
    "orbit_parameters",
    "perihelion_advance",
    "round_half_away",
    "semi_major_axis",
    "winding_number",
    "ElementInfo",
    "FieldStrength",
    "classify",
    "element_info",
    "ion_label",
    "SommerfeldError",
    "DomainError",
    "NotFoundError",
    "ResolutionError",
    "DegenerateError",
    "IntersectionReport",
    "TrajectoryPolyline",
    "count_self_intersections",
    "radius_at",
    "sample_trajectory",
    "ParameterRow",
    "RenderOptions",
    "default_revolutions",
    "parameter_rows",
    "parameter_table",
    "render_svg",
    "trajectory_csv",
    "write_parameter_table",
    "write_svg",
    "write_trajectory_csv",
    "Discrepancy",
    "ReferenceColumn",
    "Verdict",
    "errata_report",
    "load_reference_columns",
    "recompute_row",
    "reference_column",
    "validate_all",
]

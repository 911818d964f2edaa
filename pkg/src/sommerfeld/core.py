"""Closed-form parameters of relativistic Bohr-Sommerfeld orbits.

A single electron bound to a bare nucleus of charge number z follows, in the
old quantum theory with special relativity, a precessing ellipse (a rosette).
In polar form

    1/r = (1 + eps * cos(omega * theta)) / (a * (1 - eps**2))

where omega < 1 is the azimuthal frequency ratio, eps the eccentricity and a
the semi-major axis.  Because omega is slightly below one, the perihelion
advances by delta_theta = 2*pi/omega - 2*pi per radial period.

Everything here is dimensionless: lengths are in Bohr radii a0, speeds in
units of c, energies as the ratio E/mc^2 with the rest energy included.

A bound state is labelled by the radial and angular quantum numbers
(n_r >= 0, n_theta >= 1).  The recurring radical sqrt(n_theta^2 - (alpha*z)^2)
is real only while alpha*z < n_theta; for the n_theta = 1 states this caps
the charge number at z = 137.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

ALPHA_FS: float = 7.2973525693e-3     # CODATA 2018
INV_ALPHA_FS: float = 137.035999084   # CODATA 2018

Z_MIN: int = 1
Z_MAX: int = 137


@dataclass(frozen=True)
class PhysicalConstants:
    """The fine-structure constant and its reciprocal, kept as a pair so the
    consistency alpha * inv_alpha == 1 can be asserted in one place."""

    alpha: float = ALPHA_FS
    inv_alpha: float = INV_ALPHA_FS


CONSTANTS = PhysicalConstants()


def _require_int(value, name: str) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError("bad_quantum_numbers", f"{name} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial and angular quantum numbers of a bound orbit.

    n_r = 0 gives the circular orbit of its shell; n_theta >= 1 always.
    """

    n_r: int = 1
    n_theta: int = 1

    def __post_init__(self):
        if _require_int(self.n_r, "n_r") < 0:
            raise DomainError("bad_quantum_numbers", f"n_r must be >= 0, got {self.n_r}")
        if _require_int(self.n_theta, "n_theta") < 1:
            raise DomainError("bad_quantum_numbers", f"n_theta must be >= 1, got {self.n_theta}")


@dataclass(frozen=True)
class IonSpec:
    """A hydrogen-like ion: bare nucleus of charge number z plus one electron."""

    z: int
    qn: QuantumNumbers = QuantumNumbers()

    def __post_init__(self):
        if isinstance(self.z, bool) or not isinstance(self.z, int):
            raise DomainError("bad_quantum_numbers", f"z must be an integer, got {self.z!r}")
        if self.z < Z_MIN:
            raise DomainError("z_below_min", f"z must be >= {Z_MIN}, got {self.z}")
        if self.z > Z_MAX:
            raise DomainError("z_above_max", f"z must be <= {Z_MAX}, got {self.z}")
        if ALPHA_FS * self.z >= self.qn.n_theta:
            raise DomainError(
                "relativistic_collapse",
                f"alpha*z = {ALPHA_FS * self.z:.6f} must stay below n_theta = {self.qn.n_theta}",
            )


@dataclass(frozen=True)
class OrbitParameters:
    """Complete dimensionless description of one quantized rosette orbit."""

    z: int
    n_r: int
    n_theta: int
    omega: float          # azimuthal frequency ratio, 0 < omega < 1
    epsilon: float        # eccentricity, 0 <= eps < 1
    a_over_a0: float      # semi-major axis in Bohr radii
    r_min: float          # perihelion distance, a*(1 - eps)
    r_max: float          # aphelion distance, a*(1 + eps)
    delta_theta: float    # perihelion advance per radial period, radians
    energy_ratio: float   # total energy E/mc^2, rest energy included
    winding_raw: float    # delta_theta / pi, the half-turn precession index
    winding: int          # winding_raw rounded, ties away from zero
    ground_speed: float   # v/c on the circular ground orbit of this z


def _radical(z: int, n_theta: int) -> float:
    return math.sqrt(n_theta * n_theta - (ALPHA_FS * z) ** 2)


def azimuthal_frequency(z: int, n_theta: int = 1) -> float:
    """omega = sqrt(n_theta^2 - (alpha*z)^2) / n_theta."""
    IonSpec(z, QuantumNumbers(0, n_theta))
    return _radical(z, n_theta) / n_theta


def eccentricity(z: int, qn: QuantumNumbers) -> float:
    """eps = sqrt(n_r) * sqrt(n_r + 2*s) / (n_r + s) with s the radical.

    Exactly zero for n_r = 0 and approaches sqrt(3)/2 for (1, 1) states as
    alpha*z -> 0.
    """
    IonSpec(z, qn)
    s = _radical(z, qn.n_theta)
    return math.sqrt(qn.n_r) * math.sqrt(qn.n_r + 2.0 * s) / (qn.n_r + s)


def semi_major_axis(z: int, qn: QuantumNumbers) -> float:
    """a/a0 = (n_r + s) * sqrt((alpha*z)^2 + (n_r + s)^2) / z."""
    IonSpec(z, qn)
    s = _radical(z, qn.n_theta)
    return (qn.n_r + s) * math.hypot(ALPHA_FS * z, qn.n_r + s) / z


def energy_ratio(z: int, qn: QuantumNumbers) -> float:
    """E/mc^2 = [1 + (alpha*z)^2 / (n_r + s)^2]^(-1/2), below one for bound states."""
    IonSpec(z, qn)
    s = _radical(z, qn.n_theta)
    return 1.0 / math.sqrt(1.0 + (ALPHA_FS * z) ** 2 / (qn.n_r + s) ** 2)


def perihelion_advance(omega: float) -> float:
    """Perihelion shift per radial period, delta_theta = 2*pi/omega - 2*pi."""
    if not 0.0 < omega <= 1.0:
        raise ValueError(f"omega must lie in (0, 1], got {omega}")
    return 2.0 * math.pi / omega - 2.0 * math.pi


def round_half_away(value: float) -> int:
    """Nearest integer with ties away from zero (round() would pick even)."""
    return int(math.copysign(math.floor(abs(value) + 0.5), value))


def winding_number(omega: float) -> tuple[float, int]:
    """(raw, rounded) winding of the orbit, raw = 2*(1/omega - 1).

    The raw value equals delta_theta/pi identically: it counts half-turns of
    perihelion precession per radial period.
    """
    raw = perihelion_advance(omega) / math.pi
    return raw, round_half_away(raw)


def ground_speed(z: int) -> float:
    """v/c of the circular ground orbit, alpha*z."""
    IonSpec(z, QuantumNumbers(0, 1))
    return ALPHA_FS * z


def orbit_parameters(ion: IonSpec) -> OrbitParameters:
    """All orbit parameters of one ion state, computed in a single pass."""
    z, qn = ion.z, ion.qn
    s = _radical(z, qn.n_theta)
    omega = s / qn.n_theta
    eps = math.sqrt(qn.n_r) * math.sqrt(qn.n_r + 2.0 * s) / (qn.n_r + s)
    a = (qn.n_r + s) * math.hypot(ALPHA_FS * z, qn.n_r + s) / z
    dtheta = 2.0 * math.pi / omega - 2.0 * math.pi
    raw = dtheta / math.pi
    return OrbitParameters(
        z=z,
        n_r=qn.n_r,
        n_theta=qn.n_theta,
        omega=omega,
        epsilon=eps,
        a_over_a0=a,
        r_min=a * (1.0 - eps),
        r_max=a * (1.0 + eps),
        delta_theta=dtheta,
        energy_ratio=1.0 / math.sqrt(1.0 + (ALPHA_FS * z) ** 2 / (qn.n_r + s) ** 2),
        winding_raw=raw,
        winding=round_half_away(raw),
        ground_speed=ALPHA_FS * z,
    )


def orbit_for(z: int, n_r: int = 1, n_theta: int = 1) -> OrbitParameters:
    """Convenience wrapper: orbit_parameters(IonSpec(z, QuantumNumbers(n_r, n_theta)))."""
    return orbit_parameters(IonSpec(z, QuantumNumbers(n_r, n_theta)))

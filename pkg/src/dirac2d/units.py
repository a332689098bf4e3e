"""Physical parameters and natural-unit scales of the planar Dirac oscillator.

Every closed-form result in this package depends on the inputs only through
two dimensionless combinations: the radial variable z = (m0*omega/hbar)*rho**2
and the frequency ratio lam = hbar*omega/(m0*c**2).  Parameters may therefore
be supplied in any consistent unit system (natural units are the default,
m0 = omega = hbar = c = 1); all downstream computation runs through the two
ratios, so SI magnitudes never enter raw arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PhysicalParams",
    "OscillatorScales",
    "natural_params",
    "to_dimensionless_z",
]


@dataclass(frozen=True)
class PhysicalParams:
    """Rest mass, angular frequency and the fundamental constants hbar, c.

    All four fields must be strictly positive and finite; NaN or infinity is
    rejected at construction.
    """

    rest_mass: float
    omega: float
    hbar: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        for name in ("rest_mass", "omega", "hbar", "c"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ValueError(f"{name} must be a number, got {value!r}") from None
            if not math.isfinite(value) or value <= 0.0:
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
            object.__setattr__(self, name, value)
        lam = self.lam
        if not math.isfinite(lam) or lam <= 0.0:
            raise ValueError(
                f"hbar*omega/(m0*c^2) = {lam!r} is not a positive finite ratio"
            )

    @property
    def rest_energy(self) -> float:
        """m0 * c**2."""
        return self.rest_mass * self.c * self.c

    @property
    def energy_quantum(self) -> float:
        """hbar * omega."""
        return self.hbar * self.omega

    @property
    def lam(self) -> float:
        """Dimensionless frequency ratio hbar*omega / (m0*c**2)."""
        return self.energy_quantum / self.rest_energy

    @property
    def oscillator_length(self) -> float:
        """Characteristic length b = sqrt(hbar / (m0*omega))."""
        return math.sqrt(self.hbar / (self.rest_mass * self.omega))

    @property
    def gamma(self) -> float:
        """Inverse squared oscillator length m0*omega/hbar; z = gamma*rho**2."""
        return self.rest_mass * self.omega / self.hbar

    def scales(self) -> "OscillatorScales":
        return OscillatorScales(
            length=self.oscillator_length,
            energy_quantum=self.energy_quantum,
            rest_energy=self.rest_energy,
        )


@dataclass(frozen=True)
class OscillatorScales:
    """Derived scales: oscillator length, level quantum and rest energy."""

    length: float
    energy_quantum: float
    rest_energy: float

    def __post_init__(self):
        for name in ("length", "energy_quantum", "rest_energy"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value <= 0.0:
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
            object.__setattr__(self, name, value)


def natural_params() -> PhysicalParams:
    """Parameters in natural units, m0 = omega = hbar = c = 1."""
    return PhysicalParams(rest_mass=1.0, omega=1.0, hbar=1.0, c=1.0)


def to_dimensionless_z(rho, params: PhysicalParams):
    """Map a radius (or array of radii) to z = (m0*omega/hbar) * rho**2.

    Monotone increasing in rho and exactly quadratic, so z(2*rho) = 4*z(rho).
    Negative radii are rejected.
    """
    arr = np.asarray(rho, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("rho must be finite")
    if np.any(arr < 0.0):
        raise ValueError("rho must be non-negative")
    z = params.gamma * arr * arr
    return float(z) if arr.ndim == 0 else z

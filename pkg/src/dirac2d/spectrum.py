"""Energy spectrum and quantization bookkeeping of the planar Dirac oscillator.

Bound states carry E = sqrt((m0 c^2)^2 + 4 (n+1) m0 c^2 hbar w) for the
radial termination index n >= 0, independent of the angular quantum number m.
The dimensionless eigenvalue k1 = 2(m+1) + (E^2 - (m0 c^2)^2)/(m0 c^2 hbar w)
combines the angular offset with the kinetic term, and the first Kummer
argument a = (m + 1 - k1/2)/2 must equal -(n+1) for the radial series to
terminate; ``quantization_residual`` exposes a(E) directly so that root
finding on the trial energy recovers the spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .units import PhysicalParams

__all__ = [
    "QuantumNumbers",
    "EnergyLevel",
    "NrExpansion",
    "energy",
    "quantization_residual",
    "nr_expansion",
    "level_spacings",
]


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial termination index n >= 0 and angular momentum index m >= 0.

    Negative m is rejected rather than mapped to |m|: the radial factor
    z**(m/2) diverges at the origin for m < 0, and this package only models
    the m >= 0 family.
    """

    n: int
    m: int

    def __post_init__(self):
        if not isinstance(self.n, (int,)) or isinstance(self.n, bool) or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n!r}")
        if not isinstance(self.m, (int,)) or isinstance(self.m, bool):
            raise ValueError(f"m must be an integer, got {self.m!r}")
        if self.m < 0:
            raise ValueError(
                f"m must be non-negative (got {self.m}); the z**(m/2) radial "
                "factor diverges at the origin for negative m and that sector "
                "is outside this package's domain"
            )


@dataclass(frozen=True)
class EnergyLevel:
    """One eigenvalue with its dimensionless bookkeeping.

    E is the positive-branch energy, k1 the dimensionless eigenvalue,
    kummer_a the first Kummer argument (always -(n+1) here), and k_sq the
    squared radial wavenumber k1 * m0*omega/hbar.
    """

    qn: QuantumNumbers
    E: float
    k1: float
    kummer_a: float
    k_sq: float


def energy(qn: QuantumNumbers, params: PhysicalParams) -> EnergyLevel:
    """Closed-form energy of the state (n, m); E never depends on m."""
    n = qn.n
    E = params.rest_energy * math.sqrt(1.0 + 4.0 * (n + 1) * params.lam)
    k1 = 2.0 * (qn.m + 1) + 4.0 * (n + 1)
    kummer_a = 0.5 * (qn.m + 1 - 0.5 * k1)
    k_sq = k1 * params.gamma
    return EnergyLevel(qn=qn, E=E, k1=k1, kummer_a=kummer_a, k_sq=k_sq)


def quantization_residual(E_trial: float, m: int, params: PhysicalParams) -> float:
    """First Kummer argument a(E_trial) = (m + 1 - k1(E_trial)/2) / 2.

    Zero at the threshold E_trial = m0 c^2, strictly decreasing in E_trial,
    and equal to -(n+1) exactly at the n-th eigenvalue.  A bisection on this
    residual against a target -(n+1) therefore recovers the spectrum without
    using the closed form.
    """
    if not isinstance(m, (int,)) or isinstance(m, bool) or m < 0:
        raise ValueError(f"m must be a non-negative integer, got {m!r}")
    rest = params.rest_energy
    if not math.isfinite(E_trial) or E_trial < rest:
        raise ValueError(
            f"E_trial must be at least the rest energy {rest!r}, got {E_trial!r}"
        )
    kinetic = (E_trial - rest) * (E_trial + rest) / (rest * params.energy_quantum)
    k1 = 2.0 * (m + 1) + kinetic
    return 0.5 * (m + 1 - 0.5 * k1)


@dataclass(frozen=True)
class NrExpansion:
    """Three leading terms of the weak-coupling expansion of E(n).

    rest_energy + harmonic_term + correction approximates the exact energy
    with an O(lam^3) remainder, lam = hbar*omega/(m0*c^2).  The harmonic term
    is the non-relativistic oscillator ladder 2(n+1) hbar*omega; the
    correction -2(n+1)^2 (hbar*omega)^2/(m0 c^2) is the leading relativistic
    shift and is always negative.
    """

    rest_energy: float
    harmonic_term: float
    correction: float

    @property
    def total(self) -> float:
        return self.rest_energy + self.harmonic_term + self.correction


def nr_expansion(n: int, params: PhysicalParams) -> NrExpansion:
    """Non-relativistic expansion of the level n energy."""
    if not isinstance(n, (int,)) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    quantum = params.energy_quantum
    harmonic = 2.0 * (n + 1) * quantum
    correction = -2.0 * (n + 1) ** 2 * quantum * quantum / params.rest_energy
    return NrExpansion(
        rest_energy=params.rest_energy,
        harmonic_term=harmonic,
        correction=correction,
    )


def level_spacings(n_max: int, params: PhysicalParams) -> list[float]:
    """Gaps E(n+1) - E(n) for n = 0 .. n_max-1.

    All gaps are positive and strictly decreasing: E grows like the square
    root of an affine function of n, so the ladder compresses upward instead
    of staying equally spaced.
    """
    if not isinstance(n_max, (int,)) or isinstance(n_max, bool) or n_max < 1:
        raise ValueError(f"n_max must be an integer >= 1, got {n_max!r}")
    levels = [
        energy(QuantumNumbers(n=n, m=0), params).E for n in range(n_max + 1)
    ]
    return [levels[n + 1] - levels[n] for n in range(n_max)]

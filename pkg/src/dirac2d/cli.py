"""Command-line front end: spectra, wavefunction tables, verification reports.

Subcommands
-----------
spectrum   energies and eigenvalue bookkeeping for n = 0 .. n_max
wavefn     sampled radial profiles and probability density for one state
verify     run the oracle suite and report pass/fail per check
nr-limit   exact energies against the three-term weak-coupling expansion

Output is CSV (comma separated, '.' decimals, LF line endings, floats in
17-significant-digit scientific form) or JSON (object with "config", "rows"
and "checks" keys; floats serialized in shortest round-trip form).  Identical
configurations produce byte-identical files; files are written atomically.
The environment variable DIRAC2D_OUTPUT_DIR redirects relative output paths.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import oracle, spectrum, wavefn
from .spectrum import QuantumNumbers
from .units import PhysicalParams, to_dimensionless_z

__all__ = [
    "RunConfig",
    "cmd_spectrum",
    "cmd_wavefn",
    "cmd_verify",
    "cmd_nr_limit",
    "main",
]

OUTPUT_DIR_ENV = "DIRAC2D_OUTPUT_DIR"

SI_HBAR = 1.054571817e-34
SI_C = 299792458.0
SI_ELECTRON_MASS = 9.1093837015e-31

DEFAULT_TOLERANCES = {
    "fd-spectrum": 1e-3,
    "dirac-energy-map": 1e-3,
    "ode-residual": 1e-12,
    "coupled-residual": 1e-6,
    "node-counts": 0.0,
    "normalization": 1e-8,
    "kummer-laguerre": 1e-10,
}


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a command's output."""

    command: str
    units: str = "natural"
    m0: float | None = None
    omega: float | None = None
    n_max: int = 5
    m: int = 0
    n: int = 0
    rho_max_in_b: float = 12.0
    grid_points: int = 4097
    fmt: str = "csv"
    output: str | None = None
    lambdas: tuple[float, ...] = (1e-2, 1e-3, 1e-4)
    tolerances: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.units not in ("natural", "si"):
            raise ValueError(f"units must be 'natural' or 'si', got {self.units!r}")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"format must be 'csv' or 'json', got {self.fmt!r}")
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be non-negative")
        for name in self.tolerances:
            if name not in DEFAULT_TOLERANCES:
                raise ValueError(
                    f"unknown tolerance {name!r}; known: {sorted(DEFAULT_TOLERANCES)}"
                )

    def params(self) -> PhysicalParams:
        if self.units == "natural":
            return PhysicalParams(
                rest_mass=self.m0 if self.m0 is not None else 1.0,
                omega=self.omega if self.omega is not None else 1.0,
                hbar=1.0,
                c=1.0,
            )
        return PhysicalParams(
            rest_mass=self.m0 if self.m0 is not None else SI_ELECTRON_MASS,
            omega=self.omega if self.omega is not None else 1.0,
            hbar=SI_HBAR,
            c=SI_C,
        )

    def grid(self, params: PhysicalParams) -> wavefn.RadialGrid:
        return wavefn.default_grid(params, self.rho_max_in_b, self.grid_points)

    def tolerance(self, name: str) -> float:
        return self.tolerances.get(name, DEFAULT_TOLERANCES[name])

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "units": self.units,
            "m0": self.m0,
            "omega": self.omega,
            "n_max": self.n_max,
            "m": self.m,
            "n": self.n,
            "rho_max_in_b": self.rho_max_in_b,
            "grid_points": self.grid_points,
            "format": self.fmt,
            "lambdas": list(self.lambdas),
            "tolerances": {k: self.tolerance(k) for k in sorted(DEFAULT_TOLERANCES)},
        }


# ---------------------------------------------------------------------------
# serialization helpers


def _fmt_csv(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return f"{value:.16e}"
    return str(value)


def _render_csv(columns: list[str], rows: list[dict]) -> str:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt_csv(row[c]) for c in columns))
    return "\n".join(lines) + "\n"


def _render_json(config: RunConfig, rows: list[dict], checks: list[dict]) -> str:
    return json.dumps(
        {"config": config.to_dict(), "rows": rows, "checks": checks},
        indent=2,
    ) + "\n"


def _resolve_output(config: RunConfig) -> Path:
    name = config.output or f"{config.command.replace('-', '_')}.{config.fmt}"
    path = Path(name)
    override = os.environ.get(OUTPUT_DIR_ENV)
    if override and not path.is_absolute():
        path = Path(override) / path
    return path


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(config: RunConfig, columns: list[str], rows: list[dict], checks: list[dict]) -> Path:
    if config.fmt == "csv":
        text = _render_csv(columns, rows or checks)
    else:
        text = _render_json(config, rows, checks)
    path = _resolve_output(config)
    _write_atomic(path, text)
    return path


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(config: RunConfig) -> Path:
    """Table of levels n = 0 .. n_max at fixed m."""
    params = config.params()
    rows = []
    levels = [
        spectrum.energy(QuantumNumbers(n=n, m=config.m), params)
        for n in range(config.n_max + 1)
    ]
    for n, level in enumerate(levels):
        nxt = levels[n + 1].E - level.E if n + 1 < len(levels) else None
        rows.append(
            {
                "n": n,
                "m": config.m,
                "E": level.E,
                "E_minus_mc2": level.E - params.rest_energy,
                "k1": level.k1,
                "kummer_a": level.kummer_a,
                "spacing_to_next": nxt,
            }
        )
    columns = ["n", "m", "E", "E_minus_mc2", "k1", "kummer_a", "spacing_to_next"]
    return _emit(config, columns, rows, [])


def cmd_wavefn(config: RunConfig, n: int | None = None, m: int | None = None) -> Path:
    """Sampled radial profiles of one state plus its probability density.

    Columns: rho, z, R1_normalized, R2_derived and the spinor density
    2 pi rho (|psi1|^2 + |psi2|^2).  The emitted columns are scaled so the
    density column integrates to one under the trapezoid rule on the emitted
    rows themselves, making the table self-consistently normalized.
    """
    params = config.params()
    qn = QuantumNumbers(n=config.n if n is None else n, m=config.m if m is None else m)
    grid = config.grid(params)
    level = spectrum.energy(qn, params)
    upper = wavefn.radial_psi1(qn, grid, params)
    lower = wavefn.derive_lower_component(upper, qn.m, level.E, params)

    rho = grid.samples
    density_raw = 2.0 * math.pi * rho * (upper.values**2 + lower.values**2)
    total = grid.spacing * float(
        0.5 * density_raw[0] + density_raw[1:-1].sum() + 0.5 * density_raw[-1]
    )
    scale = 1.0 / math.sqrt(total)

    z = to_dimensionless_z(rho, params)
    rows = []
    for i in range(grid.num_points):
        r1 = scale * upper.values[i]
        r2 = scale * lower.values[i]
        rows.append(
            {
                "rho": float(rho[i]),
                "z": float(z[i]),
                "R1_normalized": float(r1),
                "R2_derived": float(r2),
                "probability_density": float(
                    2.0 * math.pi * rho[i] * (r1 * r1 + r2 * r2)
                ),
            }
        )
    columns = ["rho", "z", "R1_normalized", "R2_derived", "probability_density"]
    return _emit(config, columns, rows, [])


def _check(name, measured, tolerance, detail=""):
    return {
        "name": name,
        "measured": float(measured),
        "tolerance": float(tolerance),
        "passed": bool(measured <= tolerance),
        "detail": detail,
    }


def run_verification_checks(config: RunConfig) -> list[dict]:
    """The oracle suite behind ``verify``; returns one record per check."""
    params = config.params()
    grid = config.grid(params)
    m = config.m
    n_values = range(config.n_max + 1)
    checks = []

    # Finite-difference spectrum against the auxiliary ladder k1 = 2(2 n_r + m + 1).
    levels = max(4, config.n_max + 2)
    op = oracle.build_radial_operator(m, grid, params)
    k1_fd = oracle.smallest_eigenvalues(op, levels)
    worst = max(
        abs(k1 - 2.0 * (2 * n_r + m + 1)) / (2.0 * (2 * n_r + m + 1))
        for n_r, k1 in enumerate(k1_fd)
    )
    checks.append(
        _check(
            "fd-spectrum",
            worst,
            config.tolerance("fd-spectrum"),
            f"first {levels} levels at m={m} on {grid.num_points} points",
        )
    )

    # The same finite-difference levels mapped onto bound-state energies.
    mapped = oracle.dirac_energies_from_k1(k1_fd, m, params)
    worst = max(
        abs(e_fd - spectrum.energy(QuantumNumbers(n=n, m=m), params).E)
        / spectrum.energy(QuantumNumbers(n=n, m=m), params).E
        for n, e_fd in mapped
    )
    checks.append(
        _check(
            "dirac-energy-map",
            worst,
            config.tolerance("dirac-energy-map"),
            f"{len(mapped)} mapped levels at m={m}",
        )
    )

    # Closed-form profiles pushed through the second-order radial equation.
    worst = 0.0
    for n in n_values:
        qn = QuantumNumbers(n=n, m=m)
        level = spectrum.energy(qn, params)
        rf = wavefn.radial_psi1(qn, grid, params)
        worst = max(worst, oracle.ode_residual(rf, m, level.k1, params).rms_residual)
    checks.append(
        _check(
            "ode-residual",
            worst,
            config.tolerance("ode-residual"),
            f"n <= {config.n_max} at m={m}",
        )
    )

    # Upper plus derived lower component in the coupled first-order system.
    worst = 0.0
    for n in n_values:
        qn = QuantumNumbers(n=n, m=m)
        level = spectrum.energy(qn, params)
        worst = max(
            worst,
            oracle.coupled_residual(qn, level.E, params, grid=grid).rms_residual,
        )
    checks.append(
        _check(
            "coupled-residual",
            worst,
            config.tolerance("coupled-residual"),
            f"n <= {config.n_max} at m={m}",
        )
    )

    # Node counts: n+1 sign changes for psi1, n for the psi2 ansatz.
    mismatches = 0
    for n in n_values:
        qn = QuantumNumbers(n=n, m=m)
        if wavefn.count_radial_nodes(qn, params) != n + 1:
            mismatches += 1
        ansatz = wavefn.radial_psi2(qn, grid, params)
        if wavefn.sign_changes(ansatz.values[1:-1]) != n:
            mismatches += 1
    checks.append(
        _check(
            "node-counts",
            mismatches,
            config.tolerance("node-counts"),
            f"n <= {config.n_max} at m={m}",
        )
    )

    # Quadrature normalization against the Laguerre-orthogonality constant.
    worst = 0.0
    for n in n_values:
        qn = QuantumNumbers(n=n, m=m)
        quad = wavefn.normalize(wavefn.radial_psi1(qn, grid, params)).norm_constant
        closed = oracle.closed_form_norm_constant(qn, params)
        worst = max(worst, abs(quad / closed - 1.0))
    checks.append(
        _check(
            "normalization",
            worst,
            config.tolerance("normalization"),
            f"n <= {config.n_max} at m={m}",
        )
    )

    # Kummer series against the independent Laguerre recurrence.
    from .specfun import kummer_m, laguerre

    worst = 0.0
    z_set = np.array([0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0])
    for n in range(21):
        for alpha in range(11):
            lag = laguerre(n, alpha, z_set)
            kum = math.comb(n + alpha, n) * kummer_m(-float(n), alpha + 1.0, z_set)
            dev = np.max(np.abs(kum - lag) / np.maximum(1.0, np.abs(lag)))
            worst = max(worst, float(dev))
    checks.append(
        _check(
            "kummer-laguerre",
            worst,
            config.tolerance("kummer-laguerre"),
            "n <= 20 and alpha <= 10 with z up to 50",
        )
    )
    return checks


def cmd_verify(config: RunConfig) -> tuple[Path, bool]:
    """Write the verification report; returns (path, all_passed)."""
    checks = run_verification_checks(config)
    columns = ["name", "measured", "tolerance", "passed", "detail"]
    path = _emit(config, columns, [], checks)
    return path, all(c["passed"] for c in checks)


def cmd_nr_limit(config: RunConfig, lambda_list=None) -> Path:
    """Exact energy against the three-term expansion across lambda decades.

    Energies are reported in units of the rest energy, so the rows depend
    only on lambda and n.
    """
    lambdas = tuple(lambda_list) if lambda_list is not None else config.lambdas
    for lam in lambdas:
        if not (0.0 < lam <= 0.1):
            raise ValueError(f"lambda must lie in (0, 0.1], got {lam}")
    rows = []
    for lam in lambdas:
        params = PhysicalParams(rest_mass=1.0, omega=lam, hbar=1.0, c=1.0)
        for n in range(config.n_max + 1):
            exact = spectrum.energy(QuantumNumbers(n=n, m=0), params).E
            approx = spectrum.nr_expansion(n, params).total
            err = abs(exact - approx)
            rows.append(
                {
                    "lambda": lam,
                    "n": n,
                    "E_exact": exact,
                    "E_three_term": approx,
                    "abs_error": err,
                    "error_over_lambda_cubed": err / lam**3,
                }
            )
    columns = [
        "lambda",
        "n",
        "E_exact",
        "E_three_term",
        "abs_error",
        "error_over_lambda_cubed",
    ]
    return _emit(config, columns, rows, [])


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n-max", type=int, default=5, help="largest level index")
    parser.add_argument("--m", type=int, default=0, help="angular momentum index")
    parser.add_argument("--omega", type=float, default=None, help="oscillator frequency")
    parser.add_argument("--m0", type=float, default=None, help="rest mass")
    parser.add_argument(
        "--units", choices=("natural", "si"), default="natural", help="unit system"
    )
    parser.add_argument(
        "--rho-max",
        type=float,
        default=12.0,
        dest="rho_max",
        help="grid extent in units of the oscillator length",
    )
    parser.add_argument(
        "--grid-points", type=int, default=4097, help="radial samples (odd)"
    )
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--output", default=None, help="output file path")
    parser.add_argument(
        "--tolerance",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="override a verification tolerance (repeatable)",
    )


def _parse_tolerances(pairs: list[str]) -> dict[str, float]:
    out = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep:
            raise ValueError(f"tolerance override must look like name=value, got {pair!r}")
        out[name.strip()] = float(value)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac2d",
        description="Spectrum and eigenfunctions of the two-dimensional Dirac "
        "oscillator, with independent numerical verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="tabulate energy levels")
    _add_common(p)

    p = sub.add_parser("wavefn", help="tabulate radial profiles for one state")
    _add_common(p)
    p.add_argument("--n", type=int, default=0, help="level index of the state")

    p = sub.add_parser("verify", help="run the oracle verification suite")
    _add_common(p)

    p = sub.add_parser("nr-limit", help="compare against the weak-coupling expansion")
    _add_common(p)
    p.add_argument(
        "--lambdas",
        default="1e-2,1e-3,1e-4",
        help="comma-separated frequency ratios in (0, 0.1]",
    )
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    lambdas = (1e-2, 1e-3, 1e-4)
    if getattr(args, "lambdas", None):
        lambdas = tuple(float(part) for part in str(args.lambdas).split(",") if part)
    return RunConfig(
        command=args.command,
        units=args.units,
        m0=args.m0,
        omega=args.omega,
        n_max=args.n_max,
        m=args.m,
        n=getattr(args, "n", 0),
        rho_max_in_b=args.rho_max,
        grid_points=args.grid_points,
        fmt=args.format,
        output=args.output,
        lambdas=lambdas,
        tolerances=_parse_tolerances(args.tolerance),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        if config.command == "spectrum":
            path = cmd_spectrum(config)
        elif config.command == "wavefn":
            path = cmd_wavefn(config)
        elif config.command == "verify":
            path, passed = cmd_verify(config)
            print(f"wrote {path}")
            return 0 if passed else 1
        elif config.command == "nr-limit":
            path = cmd_nr_limit(config)
        else:  # pragma: no cover - argparse enforces the choices
            raise ValueError(f"unknown command {config.command!r}")
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from dirac2d import (
    OscillatorScales,
    PhysicalParams,
    natural_params,
    to_dimensionless_z,
)

PARAM_SWEEP = [
    natural_params(),
    PhysicalParams(rest_mass=2.0, omega=0.5),
    PhysicalParams(rest_mass=0.3, omega=7.0, hbar=2.0, c=4.0),
    PhysicalParams(rest_mass=9.1093837015e-31, omega=1.0e12, hbar=1.054571817e-34, c=299792458.0),
]


class TestPhysicalParams:
    def test_natural_params_is_all_ones(self):
        p = natural_params()
        assert (p.rest_mass, p.omega, p.hbar, p.c) == (1.0, 1.0, 1.0, 1.0)

    def test_natural_scales(self):
        scales = natural_params().scales()
        assert scales.length == 1.0
        assert scales.rest_energy == 1.0
        assert scales.energy_quantum == 1.0

    @pytest.mark.parametrize("field", ["rest_mass", "omega", "hbar", "c"])
    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
    def test_rejects_nonpositive_or_nonfinite(self, field, bad):
        kwargs = dict(rest_mass=1.0, omega=1.0, hbar=1.0, c=1.0)
        kwargs[field] = bad
        with pytest.raises(ValueError):
            PhysicalParams(**kwargs)

    def test_lambda_ratio(self):
        p = PhysicalParams(rest_mass=1.0, omega=1e-4)
        assert_allclose(p.lam, 1e-4, rtol=1e-15)

    def test_scales_reproducible_exactly(self):
        for p in PARAM_SWEEP:
            s = p.scales()
            assert s.length == math.sqrt(p.hbar / (p.rest_mass * p.omega))
            assert s.energy_quantum == p.hbar * p.omega
            assert s.rest_energy == p.rest_mass * p.c * p.c

    def test_scales_validation(self):
        with pytest.raises(ValueError):
            OscillatorScales(length=-1.0, energy_quantum=1.0, rest_energy=1.0)


class TestDimensionlessZ:
    def test_zero_radius(self):
        assert to_dimensionless_z(0.0, natural_params()) == 0.0

    def test_unit_radius_natural(self):
        assert to_dimensionless_z(1.0, natural_params()) == 1.0

    def test_plain_arithmetic(self):
        p = PhysicalParams(rest_mass=4.0, omega=1.0, hbar=1.0, c=1.0)
        assert to_dimensionless_z(2.0, p) == 16.0

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            to_dimensionless_z(-0.5, natural_params())
        with pytest.raises(ValueError):
            to_dimensionless_z(np.array([0.5, -0.1]), natural_params())

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            to_dimensionless_z(math.inf, natural_params())

    def test_array_matches_scalars(self):
        p = PhysicalParams(rest_mass=2.0, omega=3.0)
        rho = np.array([0.0, 0.1, 1.0, 2.5])
        out = to_dimensionless_z(rho, p)
        assert out.shape == rho.shape
        for r, z in zip(rho, out):
            assert to_dimensionless_z(float(r), p) == z

    def test_oscillator_length_maps_to_one(self):
        # z(b) = 1 up to one rounding of sqrt followed by squaring
        for p in PARAM_SWEEP:
            z = to_dimensionless_z(p.oscillator_length, p)
            assert abs(z - 1.0) <= 4e-16

    def test_quadratic_scaling(self):
        for p in PARAM_SWEEP:
            for rho in (0.0, 1e-3, 0.7, 3.0, 50.0):
                assert_allclose(
                    to_dimensionless_z(2.0 * rho, p),
                    4.0 * to_dimensionless_z(rho, p),
                    rtol=1e-15,
                )

    def test_monotone_in_rho(self):
        p = PARAM_SWEEP[2]
        rho = np.linspace(0.0, 5.0, 300)
        z = to_dimensionless_z(rho, p)
        assert np.all(np.diff(z) > 0.0)

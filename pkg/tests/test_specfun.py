import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from dirac2d import kummer_m, kummer_m_derivative, laguerre

Z_SET = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0]


class TestKummerM:
    def test_value_at_origin_is_one(self):
        for a in (-3.0, -1.0, 0.0, 0.7, 2.0):
            for b in (1.0, 2.5, 4.0):
                assert kummer_m(a, b, 0.0) == 1.0

    def test_two_term_polynomial(self):
        for z in (0.0, 0.3, 1.0, 7.5):
            assert_allclose(kummer_m(-1.0, 1.0, z), 1.0 - z, rtol=1e-15, atol=1e-15)

    def test_three_term_polynomial(self):
        # 1 - 2 + 1/2 from the a = -2, b = 1 series at z = 1
        assert_allclose(kummer_m(-2.0, 1.0, 1.0), -0.5, rtol=1e-15)

    def test_exponential_case(self):
        assert_allclose(kummer_m(1.0, 1.0, 1.0), math.e, rtol=1e-14)
        assert_allclose(kummer_m(1.0, 1.0, 30.0), math.exp(30.0), rtol=1e-13)

    def test_closed_form_nonterminating(self):
        # M(2, 1, z) = e^z (1 + z) and M(1, 2, z) = (e^z - 1)/z
        for z in (0.5, 2.0, 10.0, 40.0):
            assert_allclose(kummer_m(2.0, 1.0, z), math.exp(z) * (1.0 + z), rtol=1e-13)
            assert_allclose(kummer_m(1.0, 2.0, z), math.expm1(z) / z, rtol=1e-13)

    def test_noninteger_parameters_against_quadrature_free_series(self):
        # mpmath's independent implementation as oracle for the infinite branch
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 40
        for a, b, z in [(0.5, 1.5, 3.0), (-0.7, 2.2, 12.0), (1.3, 0.4, 5.0), (-2.5, 3.0, 25.0)]:
            expected = float(mp.hyp1f1(a, b, z))
            assert_allclose(kummer_m(a, b, z), expected, rtol=1e-12)

    def test_rejects_bad_b(self):
        for b in (0.0, -1.0, -5.0):
            with pytest.raises(ValueError):
                kummer_m(-1.0, b, 1.0)

    def test_rejects_bad_z(self):
        with pytest.raises(ValueError):
            kummer_m(-1.0, 1.0, -0.5)
        with pytest.raises(ValueError):
            kummer_m(-1.0, 1.0, math.inf)

    def test_array_input(self):
        z = np.array(Z_SET)
        out = kummer_m(-3.0, 2.0, z)
        assert out.shape == z.shape
        for zi, oi in zip(z, out):
            assert kummer_m(-3.0, 2.0, float(zi)) == oi

    def test_polynomial_termination_by_divided_differences(self):
        # a = -k gives a degree-k polynomial: its (k+1)-th finite difference
        # over equally spaced points vanishes apart from rounding.
        step = 0.25
        for k in (0, 1, 2, 4, 7, 10):
            zs = np.arange(k + 2) * step
            vals = kummer_m(-float(k), 2.0, zs)
            diff = np.diff(vals, n=k + 1)
            scale = max(1.0, float(np.max(np.abs(vals))))
            assert np.all(np.abs(diff) <= 1e-10 * scale)


class TestKummerDerivative:
    def test_constant_function(self):
        assert kummer_m_derivative(0.0, 1.0, 5.0) == 0.0

    def test_linear_case(self):
        assert_allclose(kummer_m_derivative(-1.0, 1.0, 3.0), -1.0, rtol=1e-15)

    def test_exponential_case(self):
        assert_allclose(kummer_m_derivative(1.0, 1.0, 1.0), math.e, rtol=1e-14)

    def test_central_difference_sweep(self):
        h = 1e-5
        for n in range(0, 21, 2):
            for alpha in range(0, 11, 2):
                a, b = -float(n), alpha + 1.0
                for z in (0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0):
                    exact = kummer_m_derivative(a, b, z)
                    fd = (kummer_m(a, b, z + h) - kummer_m(a, b, z - h)) / (2.0 * h)
                    assert abs(fd - exact) <= 1e-6 * max(1.0, abs(exact))


class TestLaguerre:
    def test_order_zero(self):
        for alpha in (0, 3, 9):
            assert laguerre(0, alpha, 17.2) == 1.0

    def test_order_one(self):
        for z in (0.0, 1.0, 4.5):
            assert laguerre(1, 0, z) == 1.0 - z

    def test_cross_check_against_kummer(self):
        # both sides computed through their own algorithm
        left = laguerre(2, 1, 1.0)
        right = 3.0 * kummer_m(-2.0, 2.0, 1.0)
        assert_allclose(left, right, rtol=1e-14)
        assert_allclose(left, 0.5, rtol=1e-14)

    def test_rejects_negative_order_or_weight(self):
        with pytest.raises(ValueError):
            laguerre(-1, 0, 1.0)
        with pytest.raises(ValueError):
            laguerre(2, -1, 1.0)
        with pytest.raises(ValueError):
            laguerre(2, 0, -1.0)

    def test_identity_sweep(self):
        # binom(n+alpha, n) M(-n, alpha+1, z) == L_n^(alpha)(z)
        z = np.array(Z_SET)
        for n in range(21):
            for alpha in range(11):
                lag = laguerre(n, alpha, z)
                kum = math.comb(n + alpha, n) * kummer_m(-float(n), alpha + 1.0, z)
                bound = 1e-10 * np.maximum(1.0, np.abs(lag))
                assert np.all(np.abs(kum - lag) <= bound), (n, alpha)

    def test_root_count_bound(self):
        # M(-k, m+1, z) has exactly k sign changes on (0, 4k + 2m + 4);
        # samples landing exactly on a root are dropped before counting.
        for k in (1, 2, 3, 5, 8, 12):
            for m in (0, 1, 3, 6):
                end = 4.0 * k + 2.0 * m + 4.0
                z = np.linspace(0.0, end, 4001)[1:]
                vals = kummer_m(-float(k), m + 1.0, z)
                kept = vals[np.abs(vals) > 1e-13 * np.max(np.abs(vals))]
                changes = int(np.sum(kept[:-1] * kept[1:] < 0.0))
                assert changes == k, (k, m)

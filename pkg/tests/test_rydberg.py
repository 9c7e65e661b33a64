import numpy as np
import pytest

from dmqubit import (
    RydbergParams,
    blockade_radius,
    blockade_regime,
    c6_coefficient,
    c6_scaled,
)
from dmqubit.constants import HBAR


class TestC6Coefficient:
    def test_reference_evaluation(self):
        # d1 = d2 = 1e4 Debye, delta = 5e-25 J -> (1e-41)^2 / 1e-24
        c6 = c6_coefficient(3.33564e-26, 3.33564e-26, 5e-25)
        assert c6 == pytest.approx(1.0e-58, rel=1e-4)

    def test_quadratic_in_each_dipole(self):
        base = c6_coefficient(1e-27, 2e-27, 1e-25)
        assert c6_coefficient(2e-27, 2e-27, 1e-25) == pytest.approx(
            4.0 * base, rel=1e-14
        )

    def test_inverse_in_defect(self):
        base = c6_coefficient(1e-27, 1e-27, 1e-25)
        assert c6_coefficient(1e-27, 1e-27, 2e-25) == pytest.approx(
            base / 2.0, rel=1e-14
        )

    def test_resonant_defect_rejected(self):
        with pytest.raises(ValueError, match="defect"):
            c6_coefficient(1e-27, 1e-27, 0.0)
        with pytest.raises(ValueError, match="dipole"):
            c6_coefficient(-1e-27, 1e-27, 1e-25)


class TestC6Scaled:
    def test_doubling_n_gives_2048(self):
        assert c6_scaled(1e-60, 50, 100) == pytest.approx(2048e-60, rel=1e-12)

    def test_identity(self):
        assert c6_scaled(3e-59, 80, 80) == 3e-59

    def test_consistent_with_direct_formula(self):
        # d ~ n^2 and delta ~ n^-3 composed through the direct formula must
        # reproduce the n^11 rescaling identically
        rng = np.random.default_rng(23)
        for _ in range(200):
            d = rng.uniform(1e-28, 1e-26)
            delta = rng.uniform(1e-26, 1e-24)
            n_ref = int(rng.integers(10, 80))
            k = int(rng.integers(2, 5))
            direct = c6_coefficient(k**2 * d, k**2 * d, delta / k**3)
            scaled = c6_scaled(c6_coefficient(d, d, delta), n_ref, k * n_ref)
            assert scaled == pytest.approx(direct, rel=1e-12)

    def test_invalid_inputs(self):
        with pytest.raises(ValueError, match="quantum numbers"):
            c6_scaled(1e-60, 0, 10)
        with pytest.raises(ValueError, match="c6_ref"):
            c6_scaled(-1e-60, 10, 10)


class TestBlockadeRadius:
    def test_millimeter_reference(self):
        # C6 = hbar * 1e6 * (1e-3)^6 inverts back to 1 mm at Omega = 1e6 rad/s
        c6 = HBAR * 1e6 * (1e-3) ** 6
        assert blockade_radius(c6, 1e6) == pytest.approx(1.0e-3, rel=1e-12)
        assert blockade_radius(1.0546e-46, 1e6) == pytest.approx(1.0e-3, rel=1e-4)

    def test_sixth_root_scaling(self):
        r = blockade_radius(1e-58, 1e6)
        assert blockade_radius(1e-58, 64e6) == pytest.approx(r / 2.0, rel=1e-12)
        assert blockade_radius(64e-58, 1e6) == pytest.approx(2.0 * r, rel=1e-12)

    def test_round_trip(self):
        rng = np.random.default_rng(31)
        for _ in range(500):
            c6 = rng.uniform(1e-60, 1e-45)
            rabi = rng.uniform(1e3, 1e9)
            radius = blockade_radius(c6, rabi)
            assert HBAR * rabi * radius**6 == pytest.approx(c6, rel=1e-12)

    def test_monotonicity(self):
        rng = np.random.default_rng(37)
        for _ in range(200):
            c6 = rng.uniform(1e-60, 1e-45)
            rabi = rng.uniform(1e3, 1e9)
            factor = rng.uniform(1.01, 10.0)
            assert blockade_radius(c6 * factor, rabi) > blockade_radius(c6, rabi)
            assert blockade_radius(c6, rabi * factor) < blockade_radius(c6, rabi)

    def test_invalid_inputs(self):
        with pytest.raises(ValueError, match="c6"):
            blockade_radius(0.0, 1e6)
        with pytest.raises(ValueError, match="rabi"):
            blockade_radius(1e-58, 0.0)


class TestBlockadeRegime:
    def test_strong_interaction(self):
        assert blockade_regime(100.0 * HBAR * 1e6, 1e6, margin=10.0) is True

    def test_weak_interaction(self):
        assert blockade_regime(HBAR * 1e6, 1e6, margin=10.0) is False

    def test_boundary_inclusive(self):
        assert blockade_regime(HBAR * 1e6, 1e6, margin=1.0) is True

    def test_margin_below_one_rejected(self):
        with pytest.raises(ValueError, match="margin"):
            blockade_regime(1e-28, 1e6, margin=0.5)


class TestRydbergParams:
    def test_valid_construction(self):
        params = RydbergParams(
            d1=1e-27, d2=1e-27, delta=1e-25, n_ryd=100, rabi=1e6, u_int=1e-27
        )
        assert params.n_ryd == 100

    def test_invariants(self):
        with pytest.raises(ValueError, match="dipole"):
            RydbergParams(0.0, 1e-27, 1e-25, 100, 1e6, 1e-27)
        with pytest.raises(ValueError, match="defect"):
            RydbergParams(1e-27, 1e-27, -1e-25, 100, 1e6, 1e-27)
        with pytest.raises(ValueError, match="rabi"):
            RydbergParams(1e-27, 1e-27, 1e-25, 100, 0.0, 1e-27)

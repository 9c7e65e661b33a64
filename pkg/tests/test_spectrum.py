import numpy as np
import pytest

from dmqubit import (
    GridConfig,
    MoleculeSpec,
    anharmonicity,
    intrinsic_frequency,
    solve_spectrum,
    transition_matrix_element,
    validity_report,
)
from dmqubit.coherence import harmonic_angle_element_squared
from dmqubit.constants import HBAR

from conftest import field_for_lambda, scaled_energies


def perturbative_energy(n: np.ndarray, lam: float) -> np.ndarray:
    """First-order oracle: E_n/(hbar*omega0) = n + 1/2 - (lam/32)(2n^2+2n+1),
    from <n|xi^4|n> = (3/4)(2n^2+2n+1) for the harmonic ladder."""
    return n + 0.5 - (lam / 32.0) * (2.0 * n**2 + 2.0 * n + 1.0)


class TestMoleculeSpec:
    def test_rejects_nonpositive_fields(self):
        for bad in ("dipole_moment", "moment_of_inertia", "dipole_length"):
            kwargs = dict(
                name="x", dipole_moment=1e-30, moment_of_inertia=1e-47,
                dipole_length=1e-10,
            )
            kwargs[bad] = 0.0
            with pytest.raises(ValueError, match=bad):
                MoleculeSpec(**kwargs)


class TestGridConfig:
    def test_rejects_even_points(self):
        with pytest.raises(ValueError, match="odd"):
            GridConfig(n_points=2000)

    def test_rejects_too_few_points(self):
        with pytest.raises(ValueError, match="201"):
            GridConfig(n_points=101)

    def test_rejects_unknown_model(self):
        with pytest.raises(ValueError, match="model"):
            GridConfig(potential_model="sextic")

    def test_rejects_nonpositive_half_width(self):
        with pytest.raises(ValueError, match="half_width"):
            GridConfig(half_width_xi=-1.0)


class TestIntrinsicFrequency:
    def test_hcl_operating_point(self, hcl):
        # sqrt(p*E/J) with p = 1 Debye, E = 300 V/m, J = 2.5e-47 kg*m^2
        omega0 = intrinsic_frequency(hcl, 300.0)
        assert omega0 == pytest.approx(6.3267e9, rel=1e-4)
        # quoted operating frequency ~6e9 rad/s, within 10%
        assert abs(omega0 - 6e9) / 6e9 < 0.10

    def test_zero_field(self, hcl):
        assert intrinsic_frequency(hcl, 0.0) == 0.0

    def test_sqrt_scaling(self, hcl):
        rng = np.random.default_rng(11)
        for efield in rng.uniform(1.0, 1e10, 50):
            assert intrinsic_frequency(hcl, 4.0 * efield) == pytest.approx(
                2.0 * intrinsic_frequency(hcl, efield), rel=1e-14
            )

    def test_negative_field_rejected(self, hcl):
        with pytest.raises(ValueError, match=">= 0"):
            intrinsic_frequency(hcl, -1.0)


class TestAnharmonicity:
    def test_hcl_operating_point(self, hcl):
        assert anharmonicity(hcl, 300.0) == pytest.approx(666.739, rel=1e-4)

    def test_identity_with_omega0(self, hcl):
        rng = np.random.default_rng(5)
        for efield in rng.uniform(1.0, 1e12, 100):
            lam = anharmonicity(hcl, efield)
            alt = HBAR / (hcl.moment_of_inertia * intrinsic_frequency(hcl, efield))
            assert lam == pytest.approx(alt, rel=1e-12)

    def test_inverse_sqrt_scaling(self, hcl):
        lam = anharmonicity(hcl, 1e8)
        assert anharmonicity(hcl, 4e8) == pytest.approx(lam / 2.0, rel=1e-14)

    def test_zero_field_rejected(self, hcl):
        with pytest.raises(ValueError, match="rotor"):
            anharmonicity(hcl, 0.0)


class TestSolveSpectrum:
    def test_harmonic_levels(self, harmonic_result):
        scaled = scaled_energies(harmonic_result)
        assert np.max(np.abs(scaled - (np.arange(6) + 0.5))) <= 1e-5

    def test_harmonic_levels_documented_grid(self, hcl):
        grid = GridConfig(n_points=4001, half_width_xi=12.0, potential_model="harmonic")
        res = solve_spectrum(hcl, field_for_lambda(hcl, 0.1), grid, n_levels=6)
        scaled = scaled_energies(res)
        exact = np.arange(6) + 0.5
        assert np.max(np.abs(scaled - exact) / exact) <= 1e-5

    def test_quartic_first_order_perturbation(self, quartic_result_001):
        scaled = scaled_energies(quartic_result_001)
        oracle = perturbative_energy(np.arange(5), 0.01)
        assert np.max(np.abs(scaled - oracle)) <= 1e-4

    def test_quartic_residual_scales_quadratically(self, hcl, quartic_result_001):
        def residual(res, lam):
            n = np.arange(res.n_levels)
            return np.max(np.abs(scaled_energies(res) - perturbative_energy(n, lam)))

        res_002 = solve_spectrum(
            hcl, field_for_lambda(hcl, 0.02),
            GridConfig(potential_model="quartic"), n_levels=5,
        )
        assert residual(res_002, 0.02) <= 4.4 * residual(quartic_result_001, 0.01)

    def test_quartic_gap_law(self, hcl):
        lam = 0.1
        res = solve_spectrum(
            hcl, field_for_lambda(hcl, lam),
            GridConfig(potential_model="quartic"), n_levels=5,
        )
        gaps = res.gaps / (HBAR * res.omega0)
        n = np.arange(4)
        assert np.max(np.abs(gaps - (1.0 - lam * (n + 1) / 8.0))) <= 0.01
        assert np.all(np.diff(gaps) < 0.0)

    @pytest.mark.parametrize("lam", [0.01, 0.05, 0.1, 0.2])
    def test_gap_compression_is_monotone(self, hcl, lam):
        res = solve_spectrum(
            hcl, field_for_lambda(hcl, lam),
            GridConfig(potential_model="quartic"), n_levels=7,
        )
        assert np.all(np.diff(res.gaps) < 0.0)

    def test_energies_strictly_increasing(self, harmonic_result, quartic_result_001):
        for res in (harmonic_result, quartic_result_001):
            assert np.all(np.diff(res.energies) > 0.0)

    def test_full_cosine_matches_quartic_in_deep_regime(self, hcl):
        # pendulum depth p*E/(hbar^2/2J) = 2/lam^2 = 800 >= 400 here
        lam = 0.05
        efield = field_for_lambda(hcl, lam)
        cos_res = solve_spectrum(
            hcl, efield, GridConfig(potential_model="full_cosine"), n_levels=3
        )
        quartic_res = solve_spectrum(
            hcl, efield, GridConfig(potential_model="quartic"), n_levels=3
        )
        rel = np.abs(cos_res.gaps - quartic_res.gaps) / quartic_res.gaps
        assert np.max(rel) <= 0.02

    @pytest.mark.parametrize(
        "model,lam", [("harmonic", 0.1), ("quartic", 0.1), ("full_cosine", 0.05)]
    )
    def test_orthonormal_eigenvectors(self, hcl, model, lam):
        res = solve_spectrum(
            hcl, field_for_lambda(hcl, lam),
            GridConfig(potential_model=model), n_levels=5,
        )
        dxi = res.xi[1] - res.xi[0]
        gram = res.eigenvectors @ res.eigenvectors.T * dxi
        assert np.max(np.abs(np.diag(gram) - 1.0)) <= 1e-10
        off = gram - np.diag(np.diag(gram))
        assert np.max(np.abs(off)) <= 1e-8

    @pytest.mark.parametrize(
        "model,lam", [("harmonic", 0.1), ("quartic", 0.1), ("full_cosine", 0.05)]
    )
    def test_parity_alternates(self, hcl, model, lam):
        res = solve_spectrum(
            hcl, field_for_lambda(hcl, lam),
            GridConfig(potential_model=model), n_levels=5,
        )
        dxi = res.xi[1] - res.xi[0]
        for n in range(res.n_levels):
            vec = res.eigenvectors[n]
            dev = np.sqrt(np.sum((vec - (-1.0) ** n * vec[::-1]) ** 2) * dxi)
            assert dev <= 1e-8

    def test_deterministic_output(self, hcl):
        efield = field_for_lambda(hcl, 0.05)
        grid = GridConfig(potential_model="full_cosine")
        a = solve_spectrum(hcl, efield, grid, n_levels=4)
        b = solve_spectrum(hcl, efield, grid, n_levels=4)
        assert np.array_equal(a.energies, b.energies)
        assert np.array_equal(a.eigenvectors, b.eigenvectors)

    def test_sign_convention(self, harmonic_result):
        for vec in harmonic_result.eigenvectors:
            significant = np.abs(vec) > 1e-8 * np.max(np.abs(vec))
            first = int(np.argmax(significant))
            assert vec[first] > 0.0

    def test_grid_convergence_flag(self, hcl, harmonic_result):
        assert harmonic_result.validity.grid_converged is True
        coarse = solve_spectrum(
            hcl, field_for_lambda(hcl, 0.1),
            GridConfig(n_points=201, potential_model="harmonic"), n_levels=6,
        )
        assert coarse.validity.grid_converged is False

    def test_converged_means_stable_under_doubling(self, hcl):
        efield = field_for_lambda(hcl, 0.1)
        res1 = solve_spectrum(
            hcl, efield, GridConfig(n_points=2001, potential_model="quartic"), 5
        )
        res2 = solve_spectrum(
            hcl, efield, GridConfig(n_points=4001, potential_model="quartic"), 5
        )
        assert res1.validity.grid_converged is True
        assert np.max(np.abs(res2.energies - res1.energies) / res1.energies) <= 1e-8

    def test_turnover_rejection(self, hcl):
        lam = 0.1  # sqrt(6/lam) ~ 7.75
        with pytest.raises(ValueError) as err:
            solve_spectrum(
                hcl, field_for_lambda(hcl, lam),
                GridConfig(half_width_xi=20.0, potential_model="quartic"), 4,
            )
        message = str(err.value)
        assert "20" in message and "lam" in message

    def test_zero_field_rejected(self, hcl):
        for model in ("harmonic", "quartic", "full_cosine"):
            with pytest.raises(ValueError, match="E > 0"):
                solve_spectrum(hcl, 0.0, GridConfig(potential_model=model), 4)

    def test_too_few_levels_rejected(self, hcl):
        with pytest.raises(ValueError, match="n_levels"):
            solve_spectrum(hcl, 1e10, GridConfig(), n_levels=1)


class TestTransitionMatrixElement:
    def test_harmonic_oscillator_element(self, harmonic_result, hcl):
        m01 = transition_matrix_element(harmonic_result, 0, 1)
        nu_eg = harmonic_result.omega0 / (2.0 * np.pi)
        oracle = harmonic_angle_element_squared(nu_eg, hcl.moment_of_inertia, 1)
        assert m01**2 == pytest.approx(oracle, rel=1e-6)

    def test_diagonal_element_vanishes(self, harmonic_result):
        assert abs(transition_matrix_element(harmonic_result, 0, 0)) <= 1e-10

    def test_harmonic_selection_rule(self, harmonic_result):
        assert abs(transition_matrix_element(harmonic_result, 0, 2)) <= 1e-8

    def test_symmetry(self, harmonic_result):
        m01 = transition_matrix_element(harmonic_result, 0, 1)
        m10 = transition_matrix_element(harmonic_result, 1, 0)
        assert m01 == pytest.approx(m10, rel=1e-12)

    def test_out_of_range_levels(self, harmonic_result):
        with pytest.raises(ValueError, match="levels"):
            transition_matrix_element(harmonic_result, 0, 99)


class TestValidityReport:
    def test_hcl_at_300_volts_per_meter(self, hcl):
        report = validity_report(hcl, 300.0)
        assert report.zero_point_spread_rad == pytest.approx(18.258, rel=1e-4)
        assert report.small_angle_ok is False

    def test_hcl_at_implied_lifetime_field(self, hcl):
        # sqrt(hbar/(2*J*omega0)) evaluated at E = 3e10 V/m gives 0.1826 rad,
        # still above the 0.1 rad small-angle bound.
        report = validity_report(hcl, 3e10)
        assert report.zero_point_spread_rad == pytest.approx(0.18258, rel=1e-4)
        assert report.small_angle_ok is False

    def test_small_angle_holds_at_tiny_lambda(self, hcl):
        # spread = sqrt(lam/2), so lam = 0.01 gives 0.0707 rad
        report = validity_report(hcl, field_for_lambda(hcl, 0.01))
        assert report.zero_point_spread_rad == pytest.approx(np.sqrt(0.005), rel=1e-10)
        assert report.small_angle_ok is True

    def test_quarter_power_scaling(self, hcl):
        spread = validity_report(hcl, 1e8).zero_point_spread_rad
        spread16 = validity_report(hcl, 16e8).zero_point_spread_rad
        assert spread16 == pytest.approx(spread / 2.0, rel=1e-12)

    def test_turnover_consistent_with_lambda(self, hcl):
        efield = field_for_lambda(hcl, 0.1)
        report = validity_report(hcl, efield)
        assert report.turnover_xi == pytest.approx(np.sqrt(60.0), rel=1e-12)
        assert report.grid_converged is None

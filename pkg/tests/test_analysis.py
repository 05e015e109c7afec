import math

import numpy as np
import pytest

from jcspec import (
    LorentzianFit,
    Spectrum,
    bare_transmission,
    extract_fwhm,
    find_peaks,
    fit_lorentzian,
    mode_descriptors,
    mode_summary_sweep,
    sample_spectrum,
)
from jcspec._backend import kernels
from jcspec.errors import (
    BadGrid,
    DegenerateWindow,
    HalfMaxOutsideWindow,
    NoPeaks,
)


def synthetic_lorentzian(omega_0, kappa, kappa_c_eff, lo, hi, n):
    grid = np.linspace(lo, hi, n)
    t = kernels.lorentzian_grid(kappa_c_eff, kappa, omega_0, grid)
    return Spectrum(frequencies=grid, transmissions=t)


class TestFindPeaks:
    def test_two_hybridized_peaks(self, equal_rates):
        spec = sample_spectrum(equal_rates, 0.9, 1.1, 2001)
        peaks = find_peaks(spec)
        assert len(peaks) == 2
        positions = sorted(p.omega_peak for p in peaks)
        assert positions[0] == pytest.approx(0.95, abs=1e-3)
        assert positions[1] == pytest.approx(1.05, abs=1e-3)
        assert peaks[0].fwhm is None
        assert all(p.quality == "clean" for p in peaks)

    def test_bare_resonator_single_peak(self, equal_rates):
        grid = np.linspace(0.9, 1.1, 501)
        spec = Spectrum(frequencies=grid,
                        transmissions=bare_transmission(equal_rates, grid))
        peaks = find_peaks(spec)
        assert len(peaks) == 1
        assert peaks[0].omega_peak == pytest.approx(1.0, abs=1e-6)
        assert peaks[0].t_peak == pytest.approx(1.0, abs=1e-6)

    def test_monotone_window_has_no_peaks(self, equal_rates):
        spec = sample_spectrum(equal_rates, 1.2, 1.3, 201)
        with pytest.raises(NoPeaks):
            find_peaks(spec)

    def test_too_short_grid(self, equal_rates):
        spec = sample_spectrum(equal_rates, 0.9, 1.1, 2)
        with pytest.raises(BadGrid):
            find_peaks(spec)

    def test_sorted_by_height(self, equal_rates):
        spec = sample_spectrum(equal_rates.detuned(0.1), 0.9, 1.25, 2001)
        peaks = find_peaks(spec)
        heights = [p.t_peak for p in peaks]
        assert heights == sorted(heights, reverse=True)


class TestExtractFwhm:
    def test_synthetic_lorentzian_roundtrip(self):
        spec = synthetic_lorentzian(1.05, 0.01, 0.0025, 1.0, 1.1, 3001)
        peak = find_peaks(spec)[0]
        assert extract_fwhm(spec, peak) == pytest.approx(0.01, abs=1e-6)

    def test_equal_rates_upper_mode(self, equal_rates):
        spec = sample_spectrum(equal_rates, 1.0, 1.1, 1001)
        peak = find_peaks(spec)[0]
        fwhm = extract_fwhm(spec, peak)
        assert fwhm == pytest.approx(0.01, rel=0.02)
        # frozen from a dense-scan oracle: 0.01000001
        assert fwhm == pytest.approx(0.01000001, rel=1e-3)

    def test_sharp_qubit_at_crossover(self, sharp_qubit):
        p = sharp_qubit.detuned(0.5)
        plus, _ = mode_descriptors(p)
        spec = sample_spectrum(p, plus.omega_mode - 5 * plus.kappa_eff,
                               plus.omega_mode + 5 * plus.kappa_eff, 801)
        fwhm = extract_fwhm(spec, find_peaks(spec)[0])
        assert fwhm == pytest.approx(plus.kappa_eff, rel=0.05)
        # frozen dense-scan value
        assert fwhm == pytest.approx(1.9626633e-4, rel=1e-3)

    def test_crossing_outside_window(self, equal_rates):
        spec = sample_spectrum(equal_rates, 1.048, 1.052, 101)
        peak = find_peaks(spec)[0]
        with pytest.raises(HalfMaxOutsideWindow):
            extract_fwhm(spec, peak)

    def test_interpolation_path_without_params(self):
        # loses the generating parameters -> linear interpolation on the grid
        spec = synthetic_lorentzian(1.0, 0.004, 0.002, 0.98, 1.02, 4001)
        peak = find_peaks(spec)[0]
        assert extract_fwhm(spec, peak) == pytest.approx(0.004, rel=1e-4)


class TestFitLorentzian:
    def test_noiseless_roundtrip(self):
        spec = synthetic_lorentzian(1.05, 0.01, 0.0025, 1.0, 1.1, 101)
        fit = fit_lorentzian(spec)
        assert fit.converged
        assert fit.omega_0 == pytest.approx(1.05, abs=1e-8)
        assert fit.kappa_fit == pytest.approx(0.01, rel=1e-8)
        assert fit.kappa_c_fit == pytest.approx(0.0025, rel=1e-8)
        assert fit.rms_residual < 1e-12

    def test_explicit_initial_guess(self):
        spec = synthetic_lorentzian(1.05, 0.01, 0.0025, 1.0, 1.1, 101)
        init = LorentzianFit(omega_0=1.049, kappa_fit=0.012,
                             kappa_c_fit=0.003)
        fit = fit_lorentzian(spec, init=init)
        assert fit.kappa_fit == pytest.approx(0.01, rel=1e-8)

    def test_equal_rates_window(self, equal_rates):
        plus, _ = mode_descriptors(equal_rates)
        spec = sample_spectrum(equal_rates, 1.0, 1.1, 2001)
        fit = fit_lorentzian(spec, window=(plus.omega_mode - 3 * plus.kappa_eff,
                                           plus.omega_mode + 3 * plus.kappa_eff))
        assert fit.kappa_fit == pytest.approx(0.01, rel=0.02)
        assert fit.omega_0 == pytest.approx(1.05, abs=1e-3)

    def test_sharp_qubit_detuned_window(self, sharp_qubit):
        p = sharp_qubit.detuned(0.25)
        plus, _ = mode_descriptors(p)
        spec = sample_spectrum(p, plus.omega_mode - 3 * plus.kappa_eff,
                               plus.omega_mode + 3 * plus.kappa_eff, 401)
        fit = fit_lorentzian(spec)
        assert fit.kappa_fit == pytest.approx(plus.kappa_eff, rel=0.05)

    def test_random_roundtrips(self):
        rng = np.random.default_rng(71)
        for _ in range(10):
            kappa = 10 ** rng.uniform(-4, math.log10(0.05))
            omega_0 = rng.uniform(0.9, 1.1)
            kappa_c_eff = 0.5 * kappa * rng.uniform(0.1, 1.0)
            spec = synthetic_lorentzian(omega_0, kappa, kappa_c_eff,
                                        omega_0 - 5 * kappa,
                                        omega_0 + 5 * kappa, 201)
            fit = fit_lorentzian(spec)
            assert fit.omega_0 == pytest.approx(omega_0, abs=1e-6 * kappa)
            assert fit.kappa_fit == pytest.approx(kappa, rel=1e-6)
            assert fit.kappa_c_fit == pytest.approx(kappa_c_eff, rel=1e-6)

    def test_window_with_too_few_points(self):
        spec = synthetic_lorentzian(1.05, 0.01, 0.0025, 1.0, 1.1, 101)
        with pytest.raises(DegenerateWindow):
            fit_lorentzian(spec, window=(1.049, 1.051))

    def test_deterministic(self):
        spec = synthetic_lorentzian(1.05, 0.01, 0.0025, 1.0, 1.1, 101)
        a, b = fit_lorentzian(spec), fit_lorentzian(spec)
        assert a == b


class TestModeSummarySweep:
    def test_single_resonant_row(self, equal_rates):
        rows = mode_summary_sweep(equal_rates, [0.0], branches=("plus",))
        (row,) = rows
        assert row.branch == "plus"
        assert row.t_peak_model == pytest.approx(0.25, rel=1e-12)
        assert row.kappa_eff == pytest.approx(0.01, rel=1e-12)
        assert row.t_peak_exact == pytest.approx(0.252, abs=2e-3)
        assert row.fwhm_exact == pytest.approx(0.0100, rel=0.02)
        assert row.flag == "clean"

    def test_equal_rates_table(self, equal_rates):
        deltas = np.linspace(-0.3, 0.3, 13)
        rows = mode_summary_sweep(equal_rates, deltas, branches=("plus",))
        assert len(rows) == 13
        by_delta = {round(r.delta, 6): r for r in rows}
        # photonic side: transmission close to the bare value
        assert by_delta[-0.3].t_peak_exact > 0.94
        # fully hybridized: factor-4 reduction
        assert by_delta[0.0].t_peak_exact == pytest.approx(0.25, abs=0.01)
        # linewidth stays at kappa for all clean rows
        for row in rows:
            if row.flag == "clean":
                assert row.fwhm_exact == pytest.approx(0.01, rel=0.05)
                assert abs(row.t_peak_exact - row.t_peak_model) <= 0.02

    def test_sharp_qubit_table(self, sharp_qubit):
        deltas = np.linspace(0.0, 0.7, 15)
        rows = mode_summary_sweep(sharp_qubit, deltas, branches=("plus",))
        clean = [r for r in rows if r.flag == "clean"]
        assert len(clean) >= 12
        # linewidth collapses toward the qubit decoherence rate
        assert clean[0].fwhm_exact == pytest.approx(0.00505, rel=0.05)
        assert clean[-1].fwhm_exact < 3e-4
        fwhms = [r.fwhm_exact for r in clean]
        assert fwhms == sorted(fwhms, reverse=True)
        assert clean[0].t_peak_exact > 0.95

    def test_shoulder_flag_on_suppressed_branch(self, equal_rates):
        rows = mode_summary_sweep(equal_rates, [-0.3, 0.3])
        table = {(round(r.delta, 6), r.branch): r for r in rows}
        assert table[(0.3, "plus")].flag == "shoulder-contaminated"
        assert table[(-0.3, "minus")].flag == "shoulder-contaminated"
        assert table[(-0.3, "plus")].flag == "clean"
        assert table[(0.3, "minus")].flag == "clean"

    def test_mirror_symmetry(self, sharp_qubit):
        deltas = [-0.22, -0.1, 0.0, 0.1, 0.22]
        rows = mode_summary_sweep(sharp_qubit, deltas)
        table = {(round(r.delta, 6), r.branch): r for r in rows}
        for delta in (0.1, 0.22):
            a = table[(delta, "plus")]
            b = table[(-delta, "minus")]
            assert a.flag == b.flag
            assert a.t_peak_exact == pytest.approx(b.t_peak_exact, rel=1e-9)
            if not math.isnan(a.fwhm_exact):
                assert a.fwhm_exact == pytest.approx(b.fwhm_exact, rel=1e-9)

    def test_row_order_follows_grid(self, equal_rates):
        rows = mode_summary_sweep(equal_rates, [0.1, -0.1])
        assert [(r.delta, r.branch) for r in rows] == [
            (0.1, "plus"), (0.1, "minus"), (-0.1, "plus"), (-0.1, "minus")]

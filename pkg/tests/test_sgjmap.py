import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from duomic.config import SgjmapParams
from duomic.noise import NoiseState
from duomic.sgjmap import SnrEstimates, estimate_snr, sgjmap_gain
from duomic.stft import FrameSpectrum

N_BINS = 161


def reference_gain(xi, gamma, nu=0.1, mu=1.5):
    """Independent one-line evaluation of the MAP gain."""
    u = 0.5 - mu / (4.0 * np.sqrt(gamma * xi))
    return np.clip(u + np.sqrt(u * u + nu / (2.0 * gamma)), 0.0, 1.0)


def snr_of(xi, gamma):
    n = np.broadcast_shapes(np.shape(xi), np.shape(gamma)) or (1,)
    return SnrEstimates(xi=np.broadcast_to(np.asarray(xi, float), n).copy(),
                        gamma=np.broadcast_to(np.asarray(gamma, float), n).copy(),
                        prev_amp=np.zeros(n))


class TestEstimateSnr:
    def test_silence_floors_xi(self):
        p = SgjmapParams()
        noise = NoiseState(noise_psd=np.full(N_BINS, 1.0))
        prev = SnrEstimates.initial(N_BINS, p)
        out = estimate_snr(FrameSpectrum(np.zeros(N_BINS, complex), 0),
                           noise, prev, p)
        assert np.all(out.gamma == 0)
        np.testing.assert_allclose(out.xi, p.xi_min)

    def test_unit_gamma_floors_xi(self):
        p = SgjmapParams()
        noise = NoiseState(noise_psd=np.full(N_BINS, 4.0))
        prev = SnrEstimates.initial(N_BINS, p)
        out = estimate_snr(FrameSpectrum(np.full(N_BINS, 2.0 + 0j), 0),
                           noise, prev, p)
        np.testing.assert_allclose(out.gamma, 1.0)
        np.testing.assert_allclose(out.xi, p.xi_min)

    def test_decision_directed_blend(self):
        # prev_amp^2 = noise psd and gamma = 2 -> xi = 0.98 + 0.02 = 1.0
        p = SgjmapParams()
        noise = NoiseState(noise_psd=np.full(N_BINS, 4.0))
        prev = SnrEstimates(xi=np.ones(N_BINS), gamma=np.ones(N_BINS),
                            prev_amp=np.full(N_BINS, 2.0))
        r = np.full(N_BINS, np.sqrt(8.0))     # R^2 = 8 -> gamma = 2
        out = estimate_snr(FrameSpectrum(r.astype(complex), 0), noise, prev, p)
        np.testing.assert_allclose(out.gamma, 2.0)
        np.testing.assert_allclose(out.xi, 1.0)


class TestGain:
    def test_zero_shape_parameters_give_identity(self):
        p = SgjmapParams(nu=0.0, mu=0.0)
        g = sgjmap_gain(snr_of([1.0, 0.3, 50.0], [2.0, 0.5, 10.0]), p)
        np.testing.assert_allclose(g, 1.0)

    def test_spot_value_unit_snr(self):
        g = sgjmap_gain(snr_of(1.0, 1.0), SgjmapParams())
        assert g[0] == pytest.approx(0.38117, abs=1e-5)

    def test_spot_value_high_snr(self):
        g = sgjmap_gain(snr_of(100.0, 100.0), SgjmapParams())
        assert g[0] == pytest.approx(0.99300, abs=1e-5)

    def test_singular_bins_get_floor(self):
        p = SgjmapParams()
        g = sgjmap_gain(snr_of([1.0, 1.0], [0.0, 1.0]), p, g_min=0.1)
        assert g[0] == 0.1
        assert 0.0 < g[1] < 1.0

    def test_oracle_match_random_pairs(self, rng):
        xi = 10.0 ** rng.uniform(-3, 3, 100_000)
        gamma = 10.0 ** rng.uniform(-3, 3, 100_000)
        g = sgjmap_gain(snr_of(xi, gamma), SgjmapParams())
        np.testing.assert_allclose(g, reference_gain(xi, gamma), atol=1e-12)

    def test_monotone_in_xi(self):
        p = SgjmapParams()
        xi = np.logspace(-3, 3, 200)
        for gamma in np.logspace(-3, 3, 25):
            g = sgjmap_gain(snr_of(xi, np.full_like(xi, gamma)), p)
            assert np.all(np.diff(g) >= -1e-12)

    def test_high_snr_limit(self):
        g = sgjmap_gain(snr_of(1e4, 1e4), SgjmapParams())
        assert abs(g[0] - 1.0) < 2e-3

    @settings(max_examples=200, deadline=None)
    @given(xi=st.floats(1e-6, 1e8), gamma=st.floats(0.0, 1e8))
    def test_bounds_and_finiteness(self, xi, gamma):
        g = sgjmap_gain(snr_of(xi, gamma), SgjmapParams(), g_min=0.1)
        assert np.all(np.isfinite(g))
        assert np.all((g >= 0.0) & (g <= 1.0))

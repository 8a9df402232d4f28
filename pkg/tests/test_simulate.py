import math

import numpy as np
import pytest

from duomic.config import SceneConfig
from duomic.errors import InputError
from duomic.signals import white_noise
from duomic.simulate import fractional_delay, make_scene, measured_snr


def bandlimited_noise(n, seed=0, cutoff=0.8):
    """White noise lowpassed in the frequency domain (keeps |f| < cutoff*fN)."""
    x = np.random.default_rng(seed).standard_normal(n)
    spec = np.fft.rfft(x)
    k = int(cutoff * len(spec))
    spec[k:] = 0.0
    return np.fft.irfft(spec, n=n)


class TestFractionalDelay:
    def test_zero_delay_identity(self, rng):
        x = rng.standard_normal(4000)
        np.testing.assert_allclose(fractional_delay(x, 0.0), x, atol=1e-12)

    def test_integer_delay_moves_impulse(self):
        x = np.zeros(256)
        x[10] = 1.0
        y = fractional_delay(x, 1.0)
        assert int(np.argmax(np.abs(y))) == 11
        assert y[11] == pytest.approx(1.0, abs=1e-9)

    def test_group_delay_by_phase_slope(self):
        x = bandlimited_noise(16000, seed=5)
        y = fractional_delay(x, 6.06)
        spec_x = np.fft.rfft(x)
        spec_y = np.fft.rfft(y)
        n_keep = int(0.7 * len(spec_x))
        omega = 2.0 * np.pi * np.arange(len(spec_x)) / len(x)
        phase = np.unwrap(np.angle(spec_y[1:n_keep] / spec_x[1:n_keep]))
        slope = np.polyfit(omega[1:n_keep], phase, 1)[0]
        assert -slope == pytest.approx(6.06, abs=0.01)

    def test_energy_preserved(self):
        x = bandlimited_noise(8000, seed=6)
        y = fractional_delay(x, 3.7)
        e_x = np.sum(x ** 2)
        assert abs(np.sum(y ** 2) - e_x) / e_x < 1e-9

    def test_non_finite_rejected(self):
        with pytest.raises(InputError):
            fractional_delay(np.array([1.0, np.inf]), 1.0)


class TestMeasuredSnr:
    def test_equal_power_is_zero_db(self, rng):
        x = rng.standard_normal(1000)
        assert measured_snr(x, x[::-1].copy()) == pytest.approx(0.0)

    def test_halved_noise_adds_6db(self, rng):
        c = rng.standard_normal(1000)
        n = rng.standard_normal(1000)
        base = measured_snr(c, n)
        assert measured_snr(c, 0.5 * n) - base == pytest.approx(
            20.0 * math.log10(2.0), abs=1e-9)

    def test_silent_noise_is_inf(self):
        assert measured_snr(np.ones(10), np.zeros(10)) == math.inf


class TestMakeScene:
    def test_default_tau(self):
        cfg = SceneConfig()
        assert cfg.tau == pytest.approx(16000 * 0.13 / 343.0)
        assert cfg.tau == pytest.approx(6.06, abs=0.01)

    def test_speech_only_cross_correlation_lag(self):
        cfg = SceneConfig(theta=90.0, snr_db=math.inf)
        speech = bandlimited_noise(16000, seed=7)
        scene = make_scene(speech, white_noise(2.0, seed=8), cfg)
        np.testing.assert_array_equal(scene.ch1, speech)
        xc = np.correlate(scene.ch2, scene.ch1, mode="full")
        lag = int(np.argmax(xc)) - (len(speech) - 1)
        assert lag == round(cfg.tau) == 6

    def test_broadside_noise_identical_at_both_mics(self):
        cfg = SceneConfig(theta=90.0, snr_db=0.0)
        speech = np.zeros(16000)
        speech[:] = 1e-6    # keep speech negligible but non-silent
        noise = white_noise(2.0, seed=9)
        scene = make_scene(speech, noise, cfg)
        assert cfg.noise_tau == pytest.approx(0.0, abs=1e-12)
        np.testing.assert_allclose(scene.ch1 - 1e-6, scene.ch2 - 1e-6,
                                   atol=1e-9)

    def test_collinear_noise_shares_speech_delay(self):
        cfg = SceneConfig(theta=0.0)
        assert cfg.noise_tau == pytest.approx(cfg.tau)

    def test_requested_snr_is_met(self):
        cfg = SceneConfig(theta=45.0, snr_db=5.0)
        scene = make_scene(white_noise(2.0, seed=10), white_noise(2.0, seed=11),
                           cfg)
        assert measured_snr(scene.clean_ref, scene.noise_ref) == pytest.approx(
            5.0, abs=0.1)

    def test_both_mics_see_similar_snr(self):
        cfg = SceneConfig(theta=45.0, snr_db=0.0)
        speech = white_noise(2.0, seed=12)
        noise = white_noise(2.0, seed=13)
        scene = make_scene(speech, noise, cfg)
        x2 = fractional_delay(speech, cfg.tau)
        w2 = scene.ch2 - x2
        snr2 = measured_snr(x2, w2)
        snr1 = measured_snr(scene.clean_ref, scene.noise_ref)
        assert abs(snr1 - snr2) < 0.2

    def test_short_inputs_rejected(self):
        with pytest.raises(InputError):
            make_scene(np.zeros(100), np.zeros(100), SceneConfig())
        with pytest.raises(InputError):
            make_scene(np.ones(1000), np.ones(500), SceneConfig())

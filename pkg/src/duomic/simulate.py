"""Two-microphone spatial scene synthesis with ground-truth references.

Speech is on-axis (endfire) and reaches mic 2 tau samples after mic 1;
noise at azimuth theta reaches mic 2 tau*cos(theta) samples later. Delays
are applied with a whole-signal frequency-domain phase ramp so the ground
truth carries no block-edge artifacts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import SceneConfig
from .errors import InputError

MIN_SCENE_LEN = 320     # one 20 ms frame at 16 kHz


@dataclass
class Scene:
    ch1: np.ndarray
    ch2: np.ndarray
    clean_ref: np.ndarray   # speech as seen at mic 1
    noise_ref: np.ndarray   # scaled noise as seen at mic 1
    cfg: SceneConfig


def fractional_delay(x: np.ndarray, tau: float) -> np.ndarray:
    """Delay a signal by tau samples via a linear phase ramp (circular).

    Exact for any real tau; the Nyquist bin (even lengths) keeps only the
    cos(pi*tau) component so the output stays real.
    """
    x = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(x)):
        raise InputError("non-finite sample in signal")
    n = len(x)
    spec = np.fft.rfft(x)
    omega = 2.0 * np.pi * np.arange(len(spec)) / n
    spec = spec * np.exp(-1j * omega * tau)
    if n % 2 == 0:
        spec[-1] = spec[-1].real    # keep the inverse transform real-valued
    return np.fft.irfft(spec, n=n)


def measured_snr(clean_ref: np.ndarray, noise_ref: np.ndarray) -> float:
    """Broadband power ratio in dB; +inf when the noise is silent."""
    if len(clean_ref) != len(noise_ref):
        raise InputError("reference signals differ in length")
    p_noise = float(np.sum(np.square(noise_ref)))
    if p_noise == 0.0:
        return math.inf
    p_clean = float(np.sum(np.square(clean_ref)))
    return 10.0 * math.log10(p_clean / p_noise)


def make_scene(speech: np.ndarray, noise: np.ndarray,
               cfg: SceneConfig) -> Scene:
    """Mix speech and noise into a two-mic pair at the requested mic-1 SNR."""
    speech = np.asarray(speech, dtype=np.float64)
    noise = np.asarray(noise, dtype=np.float64)
    if len(speech) < MIN_SCENE_LEN:
        raise InputError("speech shorter than one frame")
    if len(noise) < len(speech):
        raise InputError("noise must be at least as long as speech")
    noise = noise[: len(speech)]

    x1 = speech
    x2 = fractional_delay(speech, cfg.tau)
    w1 = noise
    w2 = fractional_delay(noise, cfg.noise_tau)

    p_s = float(np.mean(np.square(x1)))
    p_n = float(np.mean(np.square(w1)))
    if math.isinf(cfg.snr_db) and cfg.snr_db > 0:
        gain = 0.0
    elif p_n == 0.0:
        raise InputError("noise signal is silent but finite SNR requested")
    else:
        gain = math.sqrt(p_s / p_n) * 10.0 ** (-cfg.snr_db / 20.0)

    return Scene(ch1=x1 + gain * w1, ch2=x2 + gain * w2,
                 clean_ref=x1, noise_ref=gain * w1, cfg=cfg)

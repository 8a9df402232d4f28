"""Synthetic test signals: speech-like harmonic complexes and noise."""

from __future__ import annotations

import numpy as np


def white_noise(duration: float, fs: int = 16000, seed: int = 0,
                rms: float = 0.1) -> np.ndarray:
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(int(round(duration * fs)))
    return x * (rms / np.sqrt(np.mean(np.square(x))))


def synthetic_speech(duration: float, fs: int = 16000, seed: int = 0,
                     rms: float = 0.1, lead_silence: float = 0.25) -> np.ndarray:
    """Speech-like signal: drifting-pitch harmonic stack with syllabic gaps.

    Starts with lead_silence seconds of zeros so noise trackers that assume
    a noise-only lead-in can bootstrap.
    """
    rng = np.random.default_rng(seed)
    n = int(round(duration * fs))
    t = np.arange(n) / fs
    f0 = 120.0 + 25.0 * np.sin(2.0 * np.pi * 0.4 * t + rng.uniform(0, 2 * np.pi))
    phase = 2.0 * np.pi * np.cumsum(f0) / fs
    sig = np.zeros(n)
    for h in range(1, 11):
        sig += np.sin(h * phase + rng.uniform(0, 2 * np.pi)) / h
    # syllabic amplitude modulation plus hard pauses
    env = 0.55 + 0.45 * np.sin(2.0 * np.pi * 3.0 * t + rng.uniform(0, 2 * np.pi))
    gate = (np.sin(2.0 * np.pi * 0.7 * t + rng.uniform(0, 2 * np.pi)) > -0.5)
    sig *= env * gate
    lead = int(round(lead_silence * fs))
    sig[:lead] = 0.0
    active = sig[np.abs(sig) > 0]
    if active.size:
        sig *= rms / np.sqrt(np.mean(np.square(active)))
    return sig

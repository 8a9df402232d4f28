"""Two-microphone complex coherence and the coherence suppression filters.

The recursive auto/cross spectral densities give the estimated coherence;
`model_coherence` is the closed-form prediction for a point speech source
on-axis and a point noise source at azimuth theta, used as a test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import CoherenceParams
from .errors import ConfigMismatchError
from .stft import FrameSpectrum

BAND_SPLIT = math.pi / 8.0      # low/high band boundary in rad/sample


@dataclass
class CoherenceState:
    phi_11: np.ndarray          # real auto-PSD, mic 1
    phi_22: np.ndarray          # real auto-PSD, mic 2
    phi_12: np.ndarray          # complex cross-PSD
    psd_floor: float = 1e-10

    @classmethod
    def initial(cls, n_bins: int, psd_floor: float = 1e-10) -> "CoherenceState":
        return cls(phi_11=np.zeros(n_bins), phi_22=np.zeros(n_bins),
                   phi_12=np.zeros(n_bins, dtype=complex), psd_floor=psd_floor)


def update_coherence(f1: FrameSpectrum, f2: FrameSpectrum,
                     state: CoherenceState, p: CoherenceParams) -> np.ndarray:
    """Smooth the spectral densities with the new frame pair; return coherence."""
    if f1.bins.shape != f2.bins.shape:
        raise ConfigMismatchError("channel spectra differ in bin count")
    lam = p.lambda_s
    state.phi_11 = lam * state.phi_11 + (1.0 - lam) * np.abs(f1.bins) ** 2
    state.phi_22 = lam * state.phi_22 + (1.0 - lam) * np.abs(f2.bins) ** 2
    state.phi_12 = lam * state.phi_12 + (1.0 - lam) * f1.bins * np.conj(f2.bins)
    denom = np.sqrt(np.maximum(state.phi_11, state.psd_floor)
                    * np.maximum(state.phi_22, state.psd_floor))
    return state.phi_12 / denom


def model_coherence(omega, snr: float, theta: float, tau: float):
    """Closed-form coherence for on-axis speech plus noise at azimuth theta.

    omega is normalized frequency in rad/sample (scalar or array), snr the
    linear power ratio shared by both mics, theta in degrees, tau the
    inter-mic delay in samples. Pure function; serves as the test oracle.
    """
    omega = np.asarray(omega, dtype=np.float64)
    speech_frac = snr / (1.0 + snr)
    noise_frac = 1.0 / (1.0 + snr)
    ct = math.cos(math.radians(theta))
    return (np.exp(1j * omega * tau) * speech_frac
            + np.exp(1j * omega * tau * ct) * noise_frac)


def bin_omegas(n_bins: int, fft_len: int) -> np.ndarray:
    """Normalized frequency of each one-sided bin: 2*pi*k/fft_len."""
    return 2.0 * np.pi * np.arange(n_bins) / fft_len


def g1_filter(coherence: np.ndarray, p: CoherenceParams,
              fft_len: int) -> np.ndarray:
    """Suppress bins whose real coherence is near +/-1 (broadside noise)."""
    omega = bin_omegas(len(coherence), fft_len)
    exponent = np.where(omega <= BAND_SPLIT, p.alpha_low, p.alpha_high)
    re = np.clip(np.real(coherence), -1.0, 1.0)
    return 1.0 - np.abs(re) ** exponent


def g2_filter(coherence: np.ndarray, p: CoherenceParams,
              fft_len: int) -> np.ndarray:
    """Floor bins whose imaginary coherence falls below the band threshold."""
    omega = bin_omegas(len(coherence), fft_len)
    threshold = np.where(omega <= BAND_SPLIT, p.beta_low, p.beta_high)
    return np.where(np.imag(coherence) < threshold, p.g2_floor, 1.0)


def coherence_gain(g1: np.ndarray, g2: np.ndarray) -> np.ndarray:
    """Element-wise product of the two suppression filters."""
    if g1.shape != g2.shape:
        raise ConfigMismatchError("gain vectors differ in length")
    return g1 * g2

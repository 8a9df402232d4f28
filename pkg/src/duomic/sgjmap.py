"""Super-Gaussian MAP spectral amplitude gain with decision-directed SNRs.

The gain per bin is G = u + sqrt(u^2 + nu/(2*gamma)) with
u = 1/2 - mu/(4*sqrt(gamma*xi)), clamped to [0,1]. Bins with zero observed
power are singular and receive the gain floor instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import SgjmapParams
from .noise import NoiseState
from .stft import FrameSpectrum


@dataclass
class SnrEstimates:
    xi: np.ndarray          # a priori SNR, >= xi_min
    gamma: np.ndarray       # a posteriori SNR, >= 0
    prev_amp: np.ndarray    # enhanced amplitude of the previous frame

    @classmethod
    def initial(cls, n_bins: int, p: SgjmapParams) -> "SnrEstimates":
        z = np.zeros(n_bins)
        return cls(xi=np.full(n_bins, p.xi_min), gamma=z.copy(), prev_amp=z)


def estimate_snr(frame: FrameSpectrum, noise: NoiseState,
                 prev: SnrEstimates, p: SgjmapParams) -> SnrEstimates:
    """A posteriori SNR from the frame, a priori SNR decision-directed."""
    r2 = np.abs(frame.bins) ** 2
    gamma = r2 / noise.noise_psd
    xi = (p.alpha_dd * prev.prev_amp ** 2 / noise.noise_psd
          + (1.0 - p.alpha_dd) * np.maximum(gamma - 1.0, 0.0))
    xi = np.maximum(xi, p.xi_min)
    return SnrEstimates(xi=xi, gamma=gamma, prev_amp=prev.prev_amp)


def sgjmap_gain(snr: SnrEstimates, p: SgjmapParams,
                g_min: float = 0.0) -> np.ndarray:
    """Evaluate the MAP amplitude gain per bin, clamped to [0,1]."""
    gamma = snr.gamma
    xi = snr.xi
    singular = gamma * xi <= 0.0
    gamma_safe = np.where(singular, 1.0, gamma)
    xi_safe = np.where(singular, 1.0, xi)
    # overflow for denormal gamma is benign: the clamp saturates those bins
    with np.errstate(over="ignore"):
        u = 0.5 - p.mu / (4.0 * np.sqrt(gamma_safe * xi_safe))
        g = u + np.sqrt(u * u + p.nu / (2.0 * gamma_safe))
    g = np.where(singular, g_min, g)
    return np.clip(g, 0.0, 1.0)

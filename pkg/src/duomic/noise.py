"""Likelihood-ratio VAD and recursive per-bin noise PSD tracking."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import NoiseParams
from .errors import InputError
from .stft import FrameSpectrum


@dataclass
class NoiseState:
    noise_psd: np.ndarray               # per-bin power, >= psd_floor
    vad_speech: bool = False
    frames_seen: int = 0
    hangover_left: int = 0


def init_noise(frames: list[FrameSpectrum], params: NoiseParams) -> NoiseState:
    """Bootstrap the noise PSD from leading frames assumed noise-only."""
    if not frames:
        raise InputError("noise initialization needs at least one frame")
    psd = np.mean([np.abs(f.bins) ** 2 for f in frames], axis=0)
    psd = np.maximum(psd, params.psd_floor)
    return NoiseState(noise_psd=psd, frames_seen=len(frames))


def vad_decide(frame: FrameSpectrum, state: NoiseState,
               params: NoiseParams) -> bool:
    """Frame-level speech/noise decision.

    Geometric-mean log-likelihood ratio over bins with the a priori SNR
    fixed at a design constant; a hangover counter extends speech runs.
    """
    xi = 10.0 ** (params.xi_fixed_db / 10.0)
    gamma = np.abs(frame.bins) ** 2 / state.noise_psd
    llr = float(np.mean(gamma * xi / (1.0 + xi) - np.log(1.0 + xi)))
    raw = llr > params.vad_threshold
    if raw:
        state.hangover_left = params.hangover
        speech = True
    elif state.hangover_left > 0:
        state.hangover_left -= 1
        speech = True
    else:
        speech = False
    state.vad_speech = speech
    return speech


def update_noise(frame: FrameSpectrum, state: NoiseState,
                 params: NoiseParams) -> None:
    """Recursive PSD update on noise-only frames; speech frames freeze it."""
    state.frames_seen += 1
    if state.vad_speech:
        return
    power = np.abs(frame.bins) ** 2
    state.noise_psd = np.maximum(
        params.alpha_n * state.noise_psd + (1.0 - params.alpha_n) * power,
        params.psd_floor)

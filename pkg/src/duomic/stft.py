"""Framing, windowing, forward/inverse DFT and overlap-add synthesis.

Analysis and synthesis both use a periodic Hann window; the overlap-add
output is normalized by the summed squared windows so a unity-gain round
trip reconstructs the signal exactly on the interior.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import StftConfig
from .errors import ConfigMismatchError, InputError


@dataclass
class FrameSpectrum:
    """One-sided complex spectrum of a single windowed frame."""
    bins: np.ndarray
    frame_index: int


def window(cfg: StftConfig) -> np.ndarray:
    # periodic Hann: COLA-friendly at hop = frame_len/2
    n = np.arange(cfg.frame_len)
    return 0.5 * (1.0 - np.cos(2.0 * np.pi * n / cfg.frame_len))


def analyze_frame(samples: np.ndarray, cfg: StftConfig,
                  frame_index: int = 0) -> FrameSpectrum:
    """Window and transform one frame of frame_len samples."""
    x = np.asarray(samples, dtype=np.float64)
    if x.shape != (cfg.frame_len,):
        raise InputError(f"frame must have {cfg.frame_len} samples, got {x.shape}")
    if not np.all(np.isfinite(x)):
        raise InputError("non-finite sample in frame")
    spec = np.fft.rfft(x * window(cfg), n=cfg.fft_len)
    return FrameSpectrum(bins=spec, frame_index=frame_index)


def analyze(signal: np.ndarray, cfg: StftConfig) -> list[FrameSpectrum]:
    """Split signal into half-overlapping frames and transform each.

    Frame lambda covers samples [lambda*hop, lambda*hop + frame_len).
    Signals shorter than one frame yield an empty list.
    """
    x = np.asarray(signal, dtype=np.float64)
    if x.ndim != 1:
        raise InputError("signal must be mono")
    if not np.all(np.isfinite(x)):
        raise InputError("non-finite sample in signal")
    if len(x) < cfg.frame_len:
        return []
    n_frames = (len(x) - cfg.frame_len) // cfg.hop + 1
    win = window(cfg)
    frames = []
    for lam in range(n_frames):
        seg = x[lam * cfg.hop: lam * cfg.hop + cfg.frame_len]
        frames.append(FrameSpectrum(np.fft.rfft(seg * win, n=cfg.fft_len), lam))
    return frames


def synthesize(frames: list[FrameSpectrum], cfg: StftConfig) -> np.ndarray:
    """Inverse transform, window again, and overlap-add with normalization.

    Output length is (num_frames - 1)*hop + frame_len; the first and last
    frame_len samples see partial overlap and are not guaranteed exact.
    """
    if not frames:
        return np.zeros(0)
    n_bins = cfg.n_bins
    win = window(cfg)
    out = np.zeros((len(frames) - 1) * cfg.hop + cfg.frame_len)
    norm = np.zeros_like(out)
    for i, f in enumerate(frames):
        if len(f.bins) != n_bins:
            raise ConfigMismatchError(
                f"frame has {len(f.bins)} bins, config expects {n_bins}")
        t = np.fft.irfft(f.bins, n=cfg.fft_len)[: cfg.frame_len]
        start = i * cfg.hop
        out[start: start + cfg.frame_len] += t * win
        norm[start: start + cfg.frame_len] += win * win
    np.divide(out, norm, out=out, where=norm > 1e-12)
    return out


def apply_gain(frame: FrameSpectrum, gain: np.ndarray) -> FrameSpectrum:
    """Scale each bin by a real gain in [0,1]; phase is untouched."""
    g = np.asarray(gain, dtype=np.float64)
    if g.shape != frame.bins.shape:
        raise ConfigMismatchError(
            f"gain length {g.shape} does not match bins {frame.bins.shape}")
    return FrameSpectrum(bins=frame.bins * g, frame_index=frame.frame_index)


class OlaSynthesizer:
    """Streaming overlap-add accumulator emitting hop samples per frame.

    Uses the steady-state window-square normalization, exact everywhere
    except the first frame's leading hop (partial overlap at stream start).
    """

    def __init__(self, cfg: StftConfig):
        self.cfg = cfg
        self._win = window(cfg)
        self._buf = np.zeros(cfg.frame_len)
        w2 = self._win * self._win
        self._norm = w2[: cfg.hop] + w2[cfg.hop:]

    def push(self, frame: FrameSpectrum) -> np.ndarray:
        """Add one frame; return the hop samples that are now complete."""
        cfg = self.cfg
        if len(frame.bins) != cfg.n_bins:
            raise ConfigMismatchError("bin count does not match config")
        t = np.fft.irfft(frame.bins, n=cfg.fft_len)[: cfg.frame_len]
        self._buf += t * self._win
        chunk = self._buf[: cfg.hop] / self._norm
        self._buf[: cfg.hop] = self._buf[cfg.hop:]
        self._buf[cfg.hop:] = 0.0
        return chunk

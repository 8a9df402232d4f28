"""Frame loop wiring the full enhancement chain for one stereo stream.

Per frame: STFT both channels, VAD + noise tracking and the MAP gain on
channel 1, coherence gain from the pair, weighted combination, post
filter, gain applied to channel 1's spectrum, overlap-add synthesis.
The first init_frames frames bootstrap the noise PSD and pass through
unprocessed (they are assumed noise-only).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import coherence as coh
from . import combiner as comb
from . import noise as ns
from . import sgjmap
from .config import EnhanceConfig
from .errors import FormatError, InputError
from .stft import FrameSpectrum, OlaSynthesizer, analyze_frame, apply_gain


@dataclass
class FrameTelemetry:
    frame_index: int
    mean_gk: float
    mean_gcoh: float
    weight: float
    vad_speech: bool


class Enhancer:
    """One enhancement engine; owns all per-stream state.

    `weight` may be reassigned between process_frame calls; it is read once
    per frame so updates land exactly on frame boundaries.
    """

    def __init__(self, cfg: EnhanceConfig | None = None):
        self.cfg = cfg or EnhanceConfig()
        n_bins = self.cfg.stft.n_bins
        self.weight = self.cfg.combiner.weight
        self.frame_index = 0
        self._init_buffer: list[FrameSpectrum] = []
        self.noise_state: ns.NoiseState | None = None
        self.coh_state = coh.CoherenceState.initial(
            n_bins, self.cfg.noise.psd_floor)
        self.snr = sgjmap.SnrEstimates.initial(n_bins, self.cfg.sgjmap)
        self.prev_gain = np.ones(n_bins)
        self._ola = OlaSynthesizer(self.cfg.stft)
        self.telemetry: FrameTelemetry | None = None

    def process_frame(self, ch1: np.ndarray, ch2: np.ndarray) -> np.ndarray:
        """Consume one aligned frame pair, emit hop enhanced samples."""
        cfg = self.cfg
        lam = self.frame_index
        f1 = analyze_frame(ch1, cfg.stft, lam)
        f2 = analyze_frame(ch2, cfg.stft, lam)
        weight = float(self.weight)

        gamma_c = coh.update_coherence(f1, f2, self.coh_state, cfg.coherence)

        if self.noise_state is None:
            self._init_buffer.append(f1)
            if len(self._init_buffer) >= cfg.noise.init_frames:
                self.noise_state = ns.init_noise(self._init_buffer, cfg.noise)
                self._init_buffer = []
            # bootstrap frames pass through unprocessed
            g_final = np.ones(cfg.stft.n_bins)
            gk = gcoh = g_final
            vad = False
        else:
            vad = ns.vad_decide(f1, self.noise_state, cfg.noise)
            ns.update_noise(f1, self.noise_state, cfg.noise)
            self.snr = sgjmap.estimate_snr(
                f1, self.noise_state, self.snr, cfg.sgjmap)
            gk = sgjmap.sgjmap_gain(self.snr, cfg.sgjmap, cfg.combiner.g_min)
            g1 = coh.g1_filter(gamma_c, cfg.coherence, cfg.stft.fft_len)
            g2 = coh.g2_filter(gamma_c, cfg.coherence, cfg.stft.fft_len)
            gcoh = coh.coherence_gain(g1, g2)
            g_final = comb.combine(gk, gcoh, cfg.combiner, weight)
            g_final = comb.post_filter(g_final, self.prev_gain, cfg.combiner)
            self.snr.prev_amp = g_final * np.abs(f1.bins)
        self.prev_gain = g_final

        out_frame = apply_gain(f1, g_final)
        self.telemetry = FrameTelemetry(
            frame_index=lam, mean_gk=float(np.mean(gk)),
            mean_gcoh=float(np.mean(gcoh)), weight=weight, vad_speech=vad)
        self.frame_index += 1
        return self._ola.push(out_frame)

    def process(self, stereo: np.ndarray) -> np.ndarray:
        """Batch wrapper: stream every full frame pair, concatenate output."""
        stereo = np.asarray(stereo, dtype=np.float64)
        if stereo.ndim != 2 or stereo.shape[1] != 2:
            raise FormatError("expected a 2-channel signal of shape (n, 2)")
        frame_len, hop = self.cfg.stft.frame_len, self.cfg.stft.hop
        n = stereo.shape[0]
        if n < frame_len:
            raise InputError("input shorter than one frame")
        chunks = []
        for start in range(0, n - frame_len + 1, hop):
            seg = stereo[start: start + frame_len]
            chunks.append(self.process_frame(seg[:, 0], seg[:, 1]))
        return np.concatenate(chunks)


def process_file(stereo: np.ndarray, cfg: EnhanceConfig | None = None,
                 sample_rate: int = 16000) -> np.ndarray:
    """Enhance a whole stereo array; rejects anything but 16 kHz stereo."""
    cfg = cfg or EnhanceConfig()
    if sample_rate != cfg.stft.sample_rate:
        raise FormatError(
            f"expected {cfg.stft.sample_rate} Hz input, got {sample_rate} Hz")
    return Enhancer(cfg).process(stereo)

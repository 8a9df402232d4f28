"""Dataclass configs for every tunable, with strict JSON round-tripping."""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass, field

from .errors import ParameterError


@dataclass
class StftConfig:
    sample_rate: int = 16000
    frame_len: int = 320        # 20 ms at 16 kHz
    hop: int = 160              # 50% overlap
    fft_len: int = 320
    window: str = "hann"

    def __post_init__(self):
        if self.hop != self.frame_len // 2 or self.frame_len % 2 != 0:
            raise ParameterError("hop must equal frame_len / 2 (50% overlap)")
        if self.fft_len < self.frame_len:
            raise ParameterError("fft_len must be >= frame_len")
        if self.window != "hann":
            raise ParameterError(f"unsupported window: {self.window!r}")

    @property
    def n_bins(self) -> int:
        return self.fft_len // 2 + 1


@dataclass
class NoiseParams:
    alpha_n: float = 0.95       # recursive noise PSD smoothing
    psd_floor: float = 1e-10
    init_frames: int = 10       # leading frames assumed noise-only
    vad_threshold: float = 0.15
    xi_fixed_db: float = 10.0   # design a priori SNR for the likelihood ratio
    hangover: int = 8           # frames speech decision is extended

    def __post_init__(self):
        if not 0.0 < self.alpha_n < 1.0:
            raise ParameterError("alpha_n must be in (0,1)")
        if self.psd_floor <= 0.0:
            raise ParameterError("psd_floor must be positive")
        if self.init_frames < 1:
            raise ParameterError("init_frames must be >= 1")
        if self.hangover < 0:
            raise ParameterError("hangover must be >= 0")


@dataclass
class SgjmapParams:
    nu: float = 0.1
    mu: float = 1.5
    alpha_dd: float = 0.98      # decision-directed smoothing
    xi_min: float = 10.0 ** (-25.0 / 10.0)

    def __post_init__(self):
        if self.nu < 0.0 or self.mu < 0.0:
            raise ParameterError("nu and mu must be >= 0")
        if not 0.0 < self.alpha_dd < 1.0:
            raise ParameterError("alpha_dd must be in (0,1)")
        if self.xi_min <= 0.0:
            raise ParameterError("xi_min must be positive")


@dataclass
class CoherenceParams:
    alpha_low: float = 16.0     # real-part exponent, |omega| <= pi/8
    alpha_high: float = 2.0     # real-part exponent, |omega| > pi/8
    beta_low: float = -0.1      # imag-part threshold, |omega| <= pi/8
    beta_high: float = -0.3     # imag-part threshold, |omega| > pi/8
    g2_floor: float = 0.1       # suppression constant when below threshold
    lambda_s: float = 0.8       # PSD/CSD recursive smoothing

    def __post_init__(self):
        if not self.alpha_low > self.alpha_high > 1.0:
            raise ParameterError("need alpha_low > alpha_high > 1")
        if not 0.0 > self.beta_low > self.beta_high > -1.0:
            raise ParameterError("need 0 > beta_low > beta_high > -1")
        if not 0.0 < self.g2_floor <= 1.0:
            raise ParameterError("g2_floor must be in (0,1]")
        if not 0.0 < self.lambda_s < 1.0:
            raise ParameterError("lambda_s must be in (0,1)")


@dataclass
class CombinerParams:
    weight: float = 0.7         # user-steered mix of the two gains
    g_min: float = 0.1          # spectral gain floor
    smooth_t: float = 0.6       # temporal gain smoothing

    def __post_init__(self):
        if not 0.0 <= self.weight <= 1.0:
            raise ParameterError("weight must be in [0,1]")
        if not 0.0 <= self.g_min < 1.0:
            raise ParameterError("g_min must be in [0,1)")
        if not 0.0 <= self.smooth_t < 1.0:
            raise ParameterError("smooth_t must be in [0,1)")


@dataclass
class EnhanceConfig:
    stft: StftConfig = field(default_factory=StftConfig)
    noise: NoiseParams = field(default_factory=NoiseParams)
    sgjmap: SgjmapParams = field(default_factory=SgjmapParams)
    coherence: CoherenceParams = field(default_factory=CoherenceParams)
    combiner: CombinerParams = field(default_factory=CombinerParams)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "EnhanceConfig":
        if not isinstance(data, dict):
            raise ParameterError("config must be a JSON object")
        sections = {f.name: f.type for f in dataclasses.fields(cls)}
        unknown = set(data) - set(sections)
        if unknown:
            raise ParameterError(f"unknown config keys: {sorted(unknown)}")
        kwargs = {}
        for name, sub_cls in [("stft", StftConfig), ("noise", NoiseParams),
                              ("sgjmap", SgjmapParams),
                              ("coherence", CoherenceParams),
                              ("combiner", CombinerParams)]:
            if name in data:
                sub = data[name]
                if not isinstance(sub, dict):
                    raise ParameterError(f"config section {name!r} must be an object")
                known = {f.name for f in dataclasses.fields(sub_cls)}
                bad = set(sub) - known
                if bad:
                    raise ParameterError(f"unknown keys in {name!r}: {sorted(bad)}")
                kwargs[name] = sub_cls(**sub)
        return cls(**kwargs)

    def to_json(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def from_json(cls, path) -> "EnhanceConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


@dataclass
class SceneConfig:
    theta: float = 90.0         # noise azimuth, degrees
    d: float = 0.13             # mic spacing, meters
    c: float = 343.0            # speed of sound, m/s
    snr_db: float = 0.0         # target SNR at mic 1
    fs: int = 16000

    def __post_init__(self):
        if not 0.0 <= self.theta < 360.0:
            raise ParameterError("theta must be in [0, 360)")
        if self.d <= 0.0 or self.c <= 0.0 or self.fs <= 0:
            raise ParameterError("d, c, fs must be positive")

    @property
    def tau(self) -> float:
        """Inter-mic delay in samples for an endfire source."""
        return self.fs * self.d / self.c

    @property
    def noise_tau(self) -> float:
        return self.tau * math.cos(math.radians(self.theta))

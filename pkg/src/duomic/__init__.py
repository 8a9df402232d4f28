"""Dual-microphone speech enhancement: MAP spectral gain + coherence gain."""

__version__ = "0.1.0"

from .config import (CoherenceParams, CombinerParams, EnhanceConfig,
                     NoiseParams, SceneConfig, SgjmapParams, StftConfig)
from .pipeline import Enhancer, process_file

__all__ = [
    "CoherenceParams", "CombinerParams", "EnhanceConfig", "Enhancer",
    "NoiseParams", "SceneConfig", "SgjmapParams", "StftConfig",
    "process_file", "__version__",
]

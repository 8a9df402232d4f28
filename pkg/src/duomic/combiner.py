"""Weighted union of the two gain paths plus the musical-noise post filter."""

from __future__ import annotations

import numpy as np

from .config import CombinerParams
from .errors import ConfigMismatchError, ParameterError


def combine(gk: np.ndarray, gcoh: np.ndarray, p: CombinerParams,
            weight: float | None = None) -> np.ndarray:
    """Convex mix weight*gk + (1-weight)*gcoh.

    weight overrides p.weight when given (live tuning reads it per frame).
    """
    if gk.shape != gcoh.shape:
        raise ConfigMismatchError("gain vectors differ in length")
    w = p.weight if weight is None else weight
    if not 0.0 <= w <= 1.0:
        raise ParameterError("weight must be in [0,1]")
    return w * gk + (1.0 - w) * gcoh


def post_filter(g: np.ndarray, prev_g: np.ndarray,
                p: CombinerParams) -> np.ndarray:
    """First-order temporal smoothing plus a gain floor."""
    if g.shape != prev_g.shape:
        raise ConfigMismatchError("gain vectors differ in length")
    smoothed = p.smooth_t * prev_g + (1.0 - p.smooth_t) * g
    return np.minimum(np.maximum(smoothed, p.g_min), 1.0)

"""Segmental SNR and improvement scoring used for acceptance."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError

SEGSNR_CLAMP = (-10.0, 35.0)
SILENCE_DBFS = -60.0


@dataclass
class SegSnrReport:
    per_frame_db: list          # (frame_index, clamped dB) pairs
    mean_db: float


def segmental_snr(clean: np.ndarray, test: np.ndarray,
                  frame_len: int = 320) -> SegSnrReport:
    """Mean of per-frame clamped SNRs over non-silent reference frames."""
    clean = np.asarray(clean, dtype=np.float64)
    test = np.asarray(test, dtype=np.float64)
    if clean.shape != test.shape:
        raise InputError("clean and test signals differ in length")
    silence_power = 10.0 ** (SILENCE_DBFS / 10.0)
    lo, hi = SEGSNR_CLAMP
    rows = []
    for i in range(len(clean) // frame_len):
        c = clean[i * frame_len: (i + 1) * frame_len]
        t = test[i * frame_len: (i + 1) * frame_len]
        p_c = float(np.mean(np.square(c)))
        if p_c < silence_power:
            continue
        p_e = float(np.sum(np.square(c - t)))
        if p_e == 0.0:
            snr = hi
        else:
            snr = 10.0 * math.log10(float(np.sum(np.square(c))) / p_e)
        rows.append((i, min(max(snr, lo), hi)))
    mean = float(np.mean([v for _, v in rows])) if rows else math.nan
    return SegSnrReport(per_frame_db=rows, mean_db=mean)


def improvement(clean: np.ndarray, noisy: np.ndarray, enhanced: np.ndarray,
                frame_len: int = 320) -> float:
    """Segmental SNR gain of enhanced over noisy against the clean reference."""
    if not (len(clean) == len(noisy) == len(enhanced)):
        raise InputError("signals differ in length")
    before = segmental_snr(clean, noisy, frame_len).mean_db
    after = segmental_snr(clean, enhanced, frame_len).mean_db
    return after - before


def write_csv(report: SegSnrReport, path) -> None:
    """One row per frame plus a trailing summary row."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["frame", "segsnr_db"])
        for idx, db in report.per_frame_db:
            w.writerow([idx, f"{db:.4f}"])
        w.writerow(["mean", f"{report.mean_db:.4f}"])

"""WAV read/write helpers: 16-bit PCM and 32-bit float, 16 kHz only."""

from __future__ import annotations

import numpy as np
from scipy.io import wavfile

from .errors import FormatError


def read_wav(path) -> tuple[int, np.ndarray]:
    """Return (sample_rate, float64 array scaled to [-1, 1])."""
    try:
        rate, data = wavfile.read(path)
    except FileNotFoundError:
        raise
    except Exception as exc:
        raise FormatError(f"cannot read WAV file {path}: {exc}") from exc
    if data.dtype == np.int16:
        data = data.astype(np.float64) / 32768.0
    elif data.dtype in (np.float32, np.float64):
        data = data.astype(np.float64)
    elif data.dtype == np.int32:
        data = data.astype(np.float64) / 2147483648.0
    else:
        raise FormatError(f"unsupported WAV sample format: {data.dtype}")
    return rate, data


def write_wav(path, rate: int, data: np.ndarray, float_format: bool = False) -> None:
    """Write mono or multichannel audio; 16-bit PCM unless float_format."""
    data = np.asarray(data, dtype=np.float64)
    if float_format:
        wavfile.write(path, rate, data.astype(np.float32))
    else:
        clipped = np.clip(data, -1.0, 1.0)
        wavfile.write(path, rate, np.round(clipped * 32767.0).astype(np.int16))

"""Command-line front door: enhance, simulate, score.

Exit codes: 0 success, 2 input/format error, 64 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .config import EnhanceConfig, SceneConfig
from .errors import DuomicError, FormatError, InputError, ParameterError
from .metrics import improvement, segmental_snr, write_csv
from .pipeline import Enhancer
from .simulate import make_scene, measured_snr
from .wavio import read_wav, write_wav

EX_OK = 0
EX_DATA = 2
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _load_stereo(path, expected_rate: int) -> np.ndarray:
    rate, data = read_wav(path)
    if rate != expected_rate:
        raise FormatError(
            f"{path}: expected {expected_rate} Hz stereo WAV, got {rate} Hz")
    if data.ndim != 2 or data.shape[1] != 2:
        raise FormatError(f"{path}: expected 2-channel WAV")
    return data


def _load_mono(path, expected_rate: int) -> np.ndarray:
    rate, data = read_wav(path)
    if rate != expected_rate:
        raise FormatError(
            f"{path}: expected {expected_rate} Hz mono WAV, got {rate} Hz")
    if data.ndim == 2:
        if data.shape[1] != 1:
            raise FormatError(f"{path}: expected mono WAV")
        data = data[:, 0]
    return data


def cmd_enhance(args) -> int:
    cfg = EnhanceConfig.from_json(args.config) if args.config else EnhanceConfig()
    if args.weight is not None:
        if not 0.0 <= args.weight <= 1.0:
            print("error: weight must be in [0,1]", file=sys.stderr)
            return EX_USAGE
        cfg.combiner.weight = args.weight
    stereo = _load_stereo(args.infile, cfg.stft.sample_rate)
    engine = Enhancer(cfg)
    frame_len, hop = cfg.stft.frame_len, cfg.stft.hop
    if stereo.shape[0] < frame_len:
        raise InputError("input shorter than one frame")
    chunks = []
    frame_times = []
    for start in range(0, stereo.shape[0] - frame_len + 1, hop):
        seg = stereo[start: start + frame_len]
        t0 = time.perf_counter()
        chunks.append(engine.process_frame(seg[:, 0], seg[:, 1]))
        frame_times.append(time.perf_counter() - t0)
    write_wav(args.outfile, cfg.stft.sample_rate, np.concatenate(chunks),
              float_format=args.float)
    if args.bench:
        us = np.array(frame_times) * 1e6
        print(f"frames: {len(us)}")
        print(f"mean_frame_us: {us.mean():.1f}")
        print(f"max_frame_us: {us.max():.1f}")
    return EX_OK


def cmd_simulate(args) -> int:
    scene_cfg = SceneConfig(theta=args.theta, snr_db=args.snr)
    speech = _load_mono(args.speech, scene_cfg.fs)
    noise = _load_mono(args.noise, scene_cfg.fs)
    scene = make_scene(speech, noise, scene_cfg)
    out = Path(args.outfile)
    write_wav(out, scene_cfg.fs,
              np.stack([scene.ch1, scene.ch2], axis=1), float_format=True)
    write_wav(out.with_name(out.stem + "_clean.wav"), scene_cfg.fs,
              scene.clean_ref, float_format=True)
    write_wav(out.with_name(out.stem + "_noise.wav"), scene_cfg.fs,
              scene.noise_ref, float_format=True)
    sidecar = dataclasses.asdict(scene_cfg)
    sidecar["tau"] = scene_cfg.tau
    sidecar["noise_tau"] = scene_cfg.noise_tau
    sidecar["measured_snr_db"] = measured_snr(scene.clean_ref, scene.noise_ref)
    with open(out.with_suffix(".json"), "w") as fh:
        json.dump(sidecar, fh, indent=2)
        fh.write("\n")
    return EX_OK


def cmd_score(args) -> int:
    clean = _load_mono(args.clean, 16000)
    noisy = _load_mono(args.noisy, 16000)
    enhanced = _load_mono(args.enhanced, 16000)
    n = min(len(clean), len(noisy), len(enhanced))
    if len(clean) != len(noisy):
        raise InputError("clean and noisy lengths differ")
    delta = improvement(clean[:n], noisy[:n], enhanced[:n])
    print(f"improvement_db: {delta:.1f}")
    if args.csv:
        write_csv(segmental_snr(clean[:n], enhanced[:n]), args.csv)
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="duomic",
                     description="Dual-microphone speech enhancement tool")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enhance", help="enhance a stereo WAV to mono")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--weight", type=float, default=None)
    p.add_argument("--config", default=None)
    p.add_argument("--bench", action="store_true")
    p.add_argument("--float", action="store_true",
                   help="write 32-bit float output instead of 16-bit PCM")
    p.set_defaults(func=cmd_enhance)

    p = sub.add_parser("simulate", help="synthesize a two-mic scene")
    p.add_argument("--speech", required=True)
    p.add_argument("--noise", required=True)
    p.add_argument("--theta", type=float, default=90.0)
    p.add_argument("--snr", type=float, default=0.0)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("score", help="segmental SNR improvement report")
    p.add_argument("--clean", required=True)
    p.add_argument("--noisy", required=True)
    p.add_argument("--enhanced", required=True)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=cmd_score)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EX_OK
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except (FormatError, InputError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATA
    except DuomicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATA


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Sweep the gain weighting factor across SNRs and print a segSNR table.

Usage: python3 scripts/weight_sweep.py [--theta 90] [--seconds 4]
"""

import argparse

import numpy as np

from duomic.config import EnhanceConfig, SceneConfig
from duomic.metrics import improvement
from duomic.pipeline import Enhancer
from duomic.signals import synthetic_speech, white_noise
from duomic.simulate import make_scene


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--theta", type=float, default=90.0)
    ap.add_argument("--seconds", type=float, default=4.0)
    args = ap.parse_args()

    speech = synthetic_speech(args.seconds, seed=1)
    noise = white_noise(args.seconds, seed=2)
    weights = [0.0, 0.3, 0.5, 0.7, 0.9, 1.0]
    snrs = [-5.0, 0.0, 5.0]

    print(f"segSNR improvement (dB), theta={args.theta:g} deg")
    print("weight " + "".join(f"{s:>9.0f}dB" for s in snrs))
    for w in weights:
        row = []
        for snr_db in snrs:
            scene = make_scene(speech, noise,
                               SceneConfig(theta=args.theta, snr_db=snr_db))
            cfg = EnhanceConfig()
            cfg.combiner.weight = w
            out = Enhancer(cfg).process(
                np.stack([scene.ch1, scene.ch2], axis=1))
            n = len(out)
            row.append(improvement(scene.clean_ref[:n], scene.ch1[:n], out))
        print(f"{w:>6.1f} " + "".join(f"{v:>11.2f}" for v in row))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Expected mean TVD curve for the geometric-length ensemble.

Computes the exact leading-digit law for each (lambda, N) on the default grid
(exact integer counting for lengths <= 64 bits, continuous mantissa law above),
then the expected TVD of a 10^4-string sample by multinomial simulation.
With a sweep_aggregates.csv argument, prints z-scores of the measured means.

    python3 tools/tvd_curve_oracle.py [sweep_aggregates.csv]
"""
import csv
import math
import sys

import numpy as np

LAMBDA_STAR = 0.2307597768180522
GRID = [1e-12, 1e-6, 0.025, 0.05, 0.075, 0.1, 0.15, 0.175, 0.2, 0.225, LAMBDA_STAR,
        0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
STRINGS = 10_000
BENFORD = np.array([math.log10(1 + 1 / d) for d in range(1, 10)])


def digit_law_exact(k):
    lo, hi = 1 << (k - 1), 1 << k
    counts = np.zeros(9)
    e = 0
    while 10**e < hi:
        for d in range(1, 10):
            a, b = max(lo, d * 10**e), min(hi, (d + 1) * 10**e)
            if b > a:
                counts[d - 1] += b - a
        e += 1
    return counts / (hi - lo)


def digit_law_continuous(k):
    a = (k - 1) * math.log10(2)
    m0 = 10 ** (a - math.floor(a))
    out = np.zeros(9)
    for d in range(1, 10):
        for scale in (1, 10):
            lo, hi = max(m0, d * scale), min(2 * m0, (d + 1) * scale)
            if hi > lo:
                out[d - 1] += (hi - lo) / m0
    return out


_cache = {}


def digit_law(k):
    if k not in _cache:
        _cache[k] = digit_law_exact(k) if k <= 64 else digit_law_continuous(k)
    return _cache[k]


def ensemble_law(p_halt):
    law, w, k, total = np.zeros(9), p_halt, 1, 0.0
    while w > 1e-15 or k < 5:
        law += w * digit_law(k)
        total += w
        w *= 1 - p_halt
        k += 1
    return law / total


def main():
    measured = {}
    if len(sys.argv) > 1:
        with open(sys.argv[1]) as f:
            for row in csv.DictReader(f):
                key = (round(float(row["lambda"]), 12), int(row["n_scale"]))
                measured[key] = (float(row["mean_tvd"]), float(row["sem"]))
    rng = np.random.default_rng(1)
    for n in (64, 128):
        print(f"N = {n}")
        for lam in GRID:
            law = ensemble_law(-math.expm1(math.log(lam) / n))
            exact = 0.5 * np.abs(law - BENFORD).sum()
            draws = rng.multinomial(STRINGS, law, size=2000) / STRINGS
            expected = 0.5 * np.abs(draws - BENFORD).sum(axis=1).mean()
            line = f"{lam:10.4g}  exact {exact:.5f}  expected {expected:.5f}"
            got = measured.get((round(lam, 12), n))
            if got:
                line += f"  measured {got[0]:.5f}  z {(got[0] - expected) / got[1]:+.1f}"
            print(line)


if __name__ == "__main__":
    main()

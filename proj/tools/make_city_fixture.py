#!/usr/bin/env python3
"""Regenerates data/city_populations.csv deterministically.

The file is a synthetic stand-in for a public city-population table. Values
are drawn from a seeded log-normal whose location and spread were tuned so
that the table reproduces target summary statistics (mean binary
length ~18.28, maximum binary length 25, first-digit TVD to Benford ~0.279).
A few malformed rows exercise the ingestion filter.
"""
import csv
import math
import sys

import numpy as np

SEED = 20250101
COUNT = 6000
MU_LOG10 = 5.35
SIGMA_LOG10 = 0.183
MAX_POP = (1 << 25) - 1


def main(path):
    rng = np.random.default_rng(SEED)
    pops = []
    while len(pops) < COUNT:
        v = int(round(10 ** rng.normal(MU_LOG10, SIGMA_LOG10)))
        if 1000 <= v <= MAX_POP:
            pops.append(v)
    pops[0] = 24_893_000  # largest metro, 25 bits
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["city", "country", "population"])
        for i, v in enumerate(pops):
            w.writerow([f"City {i + 1:05d}", f"C{i % 97:02d}", f"{v:,}"])
        w.writerow(["Unknown settlement", "C00", "n/a"])
        w.writerow(["Abandoned town", "C01", "0"])
        w.writerow(["Data entry error", "C02", "-12"])


def report(path):
    vals = []
    with open(path) as fh:
        for row in csv.DictReader(fh):
            try:
                v = int(row["population"].replace(",", ""))
            except ValueError:
                continue
            if v > 0:
                vals.append(v)
    bits = [v.bit_length() for v in vals]
    ben = [math.log10(1 + 1 / d) for d in range(1, 10)]
    hist = [0] * 9
    for v in vals:
        hist[int(str(v)[0]) - 1] += 1
    freq = [h / len(vals) for h in hist]
    tvd = 0.5 * sum(abs(a - b) for a, b in zip(freq, ben))
    print(f"count={len(vals)} mean_bits={sum(bits)/len(bits):.4f} "
          f"max_bits={max(bits)} tvd={tvd:.4f}")


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "data/city_populations.csv"
    main(out)
    report(out)

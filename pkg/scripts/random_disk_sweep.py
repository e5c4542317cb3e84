"""Cheeger inequality slack on seeded random disks, as CSV.

    python3 scripts/random_disk_sweep.py --seeds 200 --max-triangles 14 > disks.csv
"""

from __future__ import annotations

import argparse
import csv
import sys

from scx import generators as gen
from scx.cheeger import cheeger
from scx.spectra import spectral_gap


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seeds", type=int, default=100)
    p.add_argument("--max-triangles", type=int, default=12)
    args = p.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["seed", "triangles", "h_2", "lambda_2", "h_2^2/6", "upper_ok", "lower_ok"])
    for seed in range(args.seeds):
        t = 1 + seed % args.max_triangles
        X = gen.random_disk(t, seed)
        h = cheeger(X, 2, "boundary").value
        lam = spectral_gap(X, 2, "down")
        lo = float(h) ** 2 / 6
        w.writerow([seed, t, str(h), f"{lam:.10f}", f"{lo:.10f}",
                    float(h) >= lam - 1e-9, lam >= lo - 1e-9])


if __name__ == "__main__":
    main()

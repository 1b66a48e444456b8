#!/usr/bin/env python3
"""Spectral-dimension estimates on grid spectra at n = 4096.

Runs the three estimators (CDF slope, heat-trace decay, random-walk
return probability) on the closed-form grid spectrum for one reference
configuration per dimension and writes estimates, curves, and the
Taylor-vs-exact dispersion comparison per run directory.

Usage:
  python scripts/run_specdim.py
  python scripts/run_specdim.py --walkers 200000 --out results/specdim_big
"""

import argparse
import sys

from rgg_spectra.cli import main as cli_main

# (d, N, gamma_prime): n = N^d = 4096 in both cases
CONFIGS = ((1, 4096, 16), (2, 64, 8))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--alpha", type=float, default=0.1)
    parser.add_argument("--walkers", type=int, default=100000)
    parser.add_argument("--tmax", type=int, default=512)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="results/specdim")
    args = parser.parse_args()

    for d, N, gp in CONFIGS:
        code = cli_main([
            "specdim", "--d", str(d), "--N", str(N),
            "--gamma-prime", str(gp), "--alpha", str(args.alpha),
            "--walkers", str(args.walkers), "--tmax", str(args.tmax),
            "--seed", str(args.seed),
            "--out", f"{args.out}/d{d}", "--svg",
        ])
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(main())

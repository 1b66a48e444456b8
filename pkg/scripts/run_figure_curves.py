#!/usr/bin/env python3
"""Dispersion-curve data: numeric vs closed-form grid spectra.

Eigensolves the chain grid at two mean degrees and writes the rank-matched
numeric/analytic comparison per run, plus a diffusion run (heat trace and
walk returns) for the smaller degree.  The comparison columns should agree
to near machine precision; the curves are the plotting payload.

Usage:
  python scripts/run_figure_curves.py
  python scripts/run_figure_curves.py --N 1024 --out results/curves_big
"""

import argparse
import sys

from rgg_spectra.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--N", type=int, default=512, help="grid side")
    parser.add_argument("--alpha", type=float, default=0.1)
    parser.add_argument("--out", default="results/curves")
    args = parser.parse_args()

    for gamma in (8, 28):
        code = cli_main([
            "spectrum", "--kind", "dgg", "--d", "1", "--N", str(args.N),
            "--gamma", str(gamma), "--alpha", str(args.alpha),
            "--out", f"{args.out}/gamma{gamma}", "--svg",
        ])
        if code != 0:
            return code

    return cli_main([
        "diffusion", "--d", "1", "--N", str(args.N), "--gamma", "8",
        "--alpha", str(args.alpha), "--walkers", "50000", "--tmax", "256",
        "--out", f"{args.out}/diffusion", "--svg",
    ])


if __name__ == "__main__":
    sys.exit(main())

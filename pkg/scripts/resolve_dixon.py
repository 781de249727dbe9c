#!/usr/bin/env python3
"""The dixonx denominator experiment.

The extended Dixon closed form is printed with two different second-term
denominators in different places: one reading carries
Gamma(1 + a/2 - b) Gamma(1 + a/2 - c), the other Gamma(1 + a/2 - c)
twice.  This script evaluates both against the direct series oracle over
admissible random draws and prints the per-draw evidence.

Usage:
    python scripts/resolve_dixon.py [--n 50] [--seed 42]
"""

import argparse
import sys

from hyperlap.verifier import SamplerConfig, resolve_dixon_variant


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=50)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args(argv)

    verdict, evidence = resolve_dixon_variant(SamplerConfig(seed=args.seed),
                                              n=args.n)
    print(f"{'a':>8} {'b':>8} {'c':>8} {'d':>8} "
          f"{'res(half_a_minus_b)':>20} {'res(half_a_minus_c_twice)':>26}")
    for row in evidence:
        print(f"{row['a'].real:>8.4f} {row['b'].real:>8.4f} "
              f"{row['c'].real:>8.4f} {row['d'].real:>8.4f} "
              f"{row['residual_half_a_minus_b']:>20.3e} "
              f"{row['residual_half_a_minus_c_twice']:>26.3e}")
    print(f"\nverdict: {verdict}")
    return 0 if verdict != "inconclusive" else 3


if __name__ == "__main__":
    sys.exit(main())

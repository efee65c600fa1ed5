"""Leclerc's multisegment: pole data, the golden battery and a seed/sample stability table."""

import argparse

from msl.core import LECLERC, LECLERC_M1, LECLERC_M2, find_pattern
from msl.pi_oracle import SampleConfig, ext1_diagonal, fibre_dimension
from msl.poles import leclerc_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--count", type=int, default=50, help="random n for the additivity check")
    args = ap.parse_args()

    print(f"m_Lec = {LECLERC}  (m1 = {LECLERC_M1}, m2 = {LECLERC_M2})")
    print(f"pattern witness: {find_pattern(LECLERC)}")
    print(f"T-fibre dimension: {fibre_dimension(LECLERC)}, generic Ext^1(x, x): {ext1_diagonal(LECLERC)}")
    rep = leclerc_suite(count=args.count)[0]
    print(rep.to_json())

    print("\nseed  samples  verdicts")
    for seed in range(args.seeds):
        for samples in (1, 16):
            r = leclerc_suite(SampleConfig(seed=seed, samples=samples), count=args.count, strict=False)[0]
            flags = "".join("." if ok else "F" for _, ok in r.crosschecks)
            print(f"{seed:>4}  {samples:>7}  {flags}")


if __name__ == "__main__":
    main()

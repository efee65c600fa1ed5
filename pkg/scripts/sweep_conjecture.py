"""Sweep random pairs and tabulate how many fall outside the balanced range.

Pairs with no balanced member among m, n, m*, n* are where the identification
of pole orders with generic Hom is only conjectural; the sweep shows the
backends and transport identities still agree there.
"""

import argparse
import collections
import time

from msl.pi_oracle import SampleConfig
from msl.poles import BackendDisagreement, pole_report
from msl.sampling import SweepConfig, sweep_pairs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--max-segments", type=int, default=5)
    ap.add_argument("--hi", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    scfg = SweepConfig(seed=args.seed, count=args.count, max_segments=args.max_segments, coord_range=(0, args.hi))
    cfg = SampleConfig(seed=args.seed)
    tally = collections.Counter()
    failures = []
    t0 = time.perf_counter()
    for m, n in sweep_pairs(scfg):
        try:
            rep = pole_report(m, n, cfg, check=True)
            ok = True
        except BackendDisagreement as exc:
            rep, ok = exc.report, False
            failures.append(f"{m} ; {n}")
        tally[(rep.method, "conjectural" if rep.conjectural else "theorem", ok)] += 1
    print(f"{args.count} pairs in {time.perf_counter() - t0:.1f}s")
    for (method, status, ok), k in sorted(tally.items()):
        print(f"  {method:<9} {status:<12} {'agree' if ok else 'DISAGREE':<9} {k}")
    for f in failures[:10]:
        print("  failure:", f)


if __name__ == "__main__":
    main()

"""Exhaustive census of regular multisegments: balanced vs rigid, by pattern type."""

import argparse
import collections
import itertools

from msl.core import Multisegment, Segment, find_pattern
from msl.pi_oracle import is_rigid_component


def regular_multisegments(k, lo, hi):
    for starts in itertools.combinations(range(lo, hi + 1), k):
        for ends in itertools.combinations(range(lo, hi + 1), k):
            for perm in itertools.permutations(ends):
                if all(a <= b for a, b in zip(starts, perm)):
                    yield Multisegment(Segment(a, b) for a, b in zip(starts, perm))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-segments", type=int, default=5)
    ap.add_argument("--hi", type=int, default=6)
    args = ap.parse_args()

    print("k  total  rigid  pattern=4231  pattern=3412  mismatches")
    for k in range(1, args.max_segments + 1):
        counts = collections.Counter()
        for m in regular_multisegments(k, 0, args.hi):
            w = find_pattern(m)
            rigid = is_rigid_component(m)
            counts["total"] += 1
            counts["rigid"] += rigid
            if w is not None:
                counts[w.kind] += 1
            counts["mismatch"] += rigid != (w is None)
        print(f"{k}  {counts['total']:>5}  {counts['rigid']:>5}  {counts['4231']:>12}  {counts['3412']:>12}  {counts['mismatch']:>10}")


if __name__ == "__main__":
    main()

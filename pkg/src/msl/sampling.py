"""Seeded random multisegments for sweeps and property batteries."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import Multisegment, Segment, balanced_flag, is_ladder, is_regular, is_speh

FILTERS = ("ladder", "speh", "regular", "balanced")
_PREDICATES = {"ladder": is_ladder, "speh": is_speh, "regular": is_regular, "balanced": balanced_flag}


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 0
    count: int = 100
    max_segments: int = 4
    coord_range: tuple[int, int] = (0, 6)
    filters: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.max_segments < 1:
            raise ValueError("max_segments must be >= 1")
        lo, hi = self.coord_range
        if lo > hi:
            raise ValueError(f"empty coordinate range {self.coord_range}")
        unknown = set(self.filters) - set(FILTERS)
        if unknown:
            raise ValueError(f"unknown filters {sorted(unknown)}")


def random_segment(rng: random.Random, lo: int, hi: int) -> Segment:
    a, b = rng.randint(lo, hi), rng.randint(lo, hi)
    return Segment(min(a, b), max(a, b))


def random_multisegment(rng: random.Random, max_segments: int, lo: int, hi: int, min_segments: int = 1) -> Multisegment:
    k = rng.randint(min_segments, max_segments)
    return Multisegment(random_segment(rng, lo, hi) for _ in range(k))


def random_filtered(rng: random.Random, max_segments: int, lo: int, hi: int, filters=(), max_tries: int = 100000) -> Multisegment:
    preds = [_PREDICATES[f] for f in filters]
    for _ in range(max_tries):
        m = random_multisegment(rng, max_segments, lo, hi)
        if all(p(m) for p in preds):
            return m
    raise RuntimeError(f"no multisegment met filters {sorted(filters)} after {max_tries} draws")


def random_ladder(rng: random.Random, max_segments: int, lo: int, hi: int) -> Multisegment:
    """Uniform size, then distinct starts and ends paired in decreasing order (rejecting a > b)."""
    span = hi - lo + 1
    k = rng.randint(1, min(max_segments, span))
    while True:
        starts = sorted(rng.sample(range(lo, hi + 1), k), reverse=True)
        ends = sorted(rng.sample(range(lo, hi + 1), k), reverse=True)
        if all(a <= b for a, b in zip(starts, ends)):
            return Multisegment(Segment(a, b) for a, b in zip(starts, ends))


def random_speh(rng: random.Random, max_segments: int, lo: int, hi: int) -> Multisegment:
    """Top segment [a, b] and k-1 unit shifts below it, all inside [lo, hi]."""
    span = hi - lo + 1
    k = rng.randint(1, min(max_segments, span))
    a = rng.randint(lo + k - 1, hi)
    b = rng.randint(a, hi)
    return Multisegment(Segment(a - t, b - t) for t in range(k))


def random_regular(rng: random.Random, max_segments: int, lo: int, hi: int) -> Multisegment:
    """Distinct starts and distinct ends, matched by a random admissible pairing."""
    span = hi - lo + 1
    k = rng.randint(1, min(max_segments, span))
    while True:
        starts = rng.sample(range(lo, hi + 1), k)
        ends = sorted(rng.sample(range(lo, hi + 1), k))
        # largest start first; any end left over stays admissible for smaller starts
        free = list(ends)
        pairs = []
        for i in sorted(range(k), key=lambda i: -starts[i]):
            choices = [e for e in free if e >= starts[i]]
            if not choices:
                break
            e = rng.choice(choices)
            free.remove(e)
            pairs.append(Segment(starts[i], e))
        else:
            return Multisegment(pairs)


def sweep_pairs(cfg: SweepConfig):
    """The deterministic sequence of (m, n) pairs of a sweep."""
    rng = random.Random(cfg.seed)
    lo, hi = cfg.coord_range
    filt = tuple(sorted(cfg.filters))
    for _ in range(cfg.count):
        m = random_filtered(rng, cfg.max_segments, lo, hi, filt)
        n = random_filtered(rng, cfg.max_segments, lo, hi, filt)
        yield m, n

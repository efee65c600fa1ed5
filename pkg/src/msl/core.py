"""Segments, multisegments, dimension vectors and the type-A Euler forms.

All coordinates live on a single cuspidal line, identified with the integers.
Values are immutable; every function here is pure.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping


class MultisegmentError(ValueError):
    """Raised on malformed multisegment text or an invalid segment."""


@dataclass(frozen=True, order=False)
class Segment:
    """The integer interval [a, b] with a <= b."""

    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise MultisegmentError(f"segment endpoints must be integers: {self.a!r}, {self.b!r}")
        if self.a > self.b:
            raise MultisegmentError(f"segment [{self.a},{self.b}] has a > b")

    @property
    def length(self) -> int:
        return self.b - self.a + 1

    def shift(self) -> "Segment":
        return Segment(self.a - 1, self.b - 1)

    def dual(self) -> "Segment":
        return Segment(-self.b, -self.a)

    def sort_key(self):
        # canonical order is descending b, then descending a
        return (-self.b, -self.a)

    def __str__(self):
        return f"[{self.a},{self.b}]"

    def __repr__(self):
        return f"Segment({self.a}, {self.b})"


def precedes(d1: Segment, d2: Segment) -> bool:
    """``d1 ≺ d2``: a1 + 1 <= a2 <= b1 + 1 <= b2."""
    return d1.a + 1 <= d2.a <= d1.b + 1 <= d2.b


def unlinked(d1: Segment, d2: Segment) -> bool:
    return not precedes(d1, d2) and not precedes(d2, d1)


def shift(x):
    """Shift a segment or multisegment one step to the left."""
    if isinstance(x, Segment):
        return x.shift()
    return Multisegment(s.shift() for s in x)


def dual(x):
    """The contragredient map [a, b] -> [-b, -a], extended additively."""
    if isinstance(x, Segment):
        return x.dual()
    return Multisegment(s.dual() for s in x)


class Multisegment:
    """A finite multiset of segments, stored in canonical order."""

    def __init__(self, segments: Iterable[Segment] = ()):
        segs = tuple(segments)
        for s in segs:
            if not isinstance(s, Segment):
                raise TypeError(f"expected Segment, got {type(s).__name__}")
        self._segs = tuple(sorted(segs, key=Segment.sort_key))

    @classmethod
    def of(cls, *pairs) -> "Multisegment":
        """Shorthand: ``Multisegment.of((1, 2), (2, 3))``."""
        return cls(Segment(a, b) for a, b in pairs)

    @property
    def segments(self) -> tuple[Segment, ...]:
        return self._segs

    def __iter__(self) -> Iterator[Segment]:
        return iter(self._segs)

    def __len__(self):
        return len(self._segs)

    def __bool__(self):
        return bool(self._segs)

    def __getitem__(self, i):
        return self._segs[i]

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(self._segs + tuple(other))

    def __sub__(self, other: "Multisegment") -> "Multisegment":
        left = Counter(self._segs)
        left.subtract(Counter(other))
        if any(v < 0 for v in left.values()):
            raise MultisegmentError(f"{other} is not contained in {self}")
        return Multisegment(left.elements())

    def __eq__(self, other):
        return isinstance(other, Multisegment) and self._segs == other._segs

    def __hash__(self):
        return hash(self._segs)

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"Multisegment({serialize(self)!r})"

    @cached_property
    def grdim(self) -> "DimVector":
        return grdim(self)


_TERM = re.compile(r"\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*")


def parse_multisegment(text: str) -> Multisegment:
    """Parse ``"[a,b]+[c,d]+..."``; the empty (or blank) string is the zero multisegment."""
    if text is None or not text.strip():
        return Multisegment()
    segs = []
    for term in text.split("+"):
        match = _TERM.fullmatch(term)
        if match is None:
            raise MultisegmentError(f"malformed segment term {term.strip()!r} in {text!r}")
        segs.append(Segment(int(match.group(1)), int(match.group(2))))
    return Multisegment(segs)


def serialize(m: Multisegment) -> str:
    return "+".join(str(s) for s in m)


# -- dimension vectors and Euler forms ---------------------------------------


class DimVector(Mapping[int, int]):
    """Finitely supported vector Z -> N; absent coordinates read as 0."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean = {}
        for i, v in items:
            if v < 0:
                raise ValueError(f"negative multiplicity {v} at coordinate {i}")
            if v:
                clean[int(i)] = clean.get(int(i), 0) + int(v)
        self._entries = dict(sorted(clean.items()))

    def __getitem__(self, i: int) -> int:
        return self._entries.get(i, 0)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __contains__(self, i):
        return i in self._entries

    def __add__(self, other: "DimVector") -> "DimVector":
        out = dict(self._entries)
        for i, v in other.items():
            out[i] = out.get(i, 0) + v
        return DimVector(out)

    def __eq__(self, other):
        if isinstance(other, DimVector):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        return f"DimVector({self._entries})"

    def reflect(self) -> "DimVector":
        return DimVector({-i: v for i, v in self._entries.items()})

    @property
    def total(self) -> int:
        return sum(self._entries.values())


def grdim(m: Multisegment) -> DimVector:
    counts: dict[int, int] = {}
    for s in m:
        for i in range(s.a, s.b + 1):
            counts[i] = counts.get(i, 0) + 1
    return DimVector(counts)


def euler_plus(d: Mapping[int, int], e: Mapping[int, int]) -> int:
    """Directed form <d, e>_+ = sum_i d_i e_i - d_i e_{i+1}."""
    return sum(v * (e.get(i, 0) - e.get(i + 1, 0)) for i, v in d.items())


def euler_minus(d: Mapping[int, int], e: Mapping[int, int]) -> int:
    return euler_plus(e, d)


def sym_form(d: Mapping[int, int], e: Mapping[int, int]) -> int:
    """Symmetrized type-A Cartan form (d, e)."""
    return euler_plus(d, e) + euler_plus(e, d)


# -- classification ------------------------------------------------------------


def arranged_form(m: Multisegment) -> tuple[Segment, ...]:
    """Listing with no earlier segment preceding a later one.

    ``d1 ≺ d2`` forces ``b(d2) > b(d1)``, so the canonical descending-b order is
    already the stable topological order with canonical tie-breaks.
    """
    return m.segments


def is_ladder(m: Multisegment) -> bool:
    s = m.segments
    return all(s[i].a > s[i + 1].a and s[i].b > s[i + 1].b for i in range(len(s) - 1))


def is_speh(m: Multisegment) -> bool:
    s = m.segments
    return all(s[i + 1] == s[i].shift() for i in range(len(s) - 1))


def is_regular(m: Multisegment) -> bool:
    s = m.segments
    return len({x.a for x in s}) == len(s) and len({x.b for x in s}) == len(s)


@dataclass(frozen=True)
class PatternWitness:
    kind: str  # "4231" or "3412"
    ordered_segments: tuple[Segment, ...]

    def holds(self) -> bool:
        return pattern_holds(self.kind, self.ordered_segments)


def pattern_holds(kind: str, d: tuple[Segment, ...]) -> bool:
    """Check the three defining conditions of a 4231 / 3412 ordering (1-based in comments)."""
    k = len(d)
    if k < 4:
        return False
    a = [None] + [s.a for s in d]
    b = [None] + [s.b for s in d]
    D = (None,) + tuple(d)
    if kind == "4231":
        chain = all(precedes(D[i], D[i - 1]) for i in range(3, k + 1))
        return chain and a[k] < a[1] < a[k - 1] and b[3] < b[1] < b[2]
    if kind == "3412":
        chain = all(precedes(D[i], D[i - 1]) for i in range(4, k + 1)) and precedes(D[2], D[1])
        # ends: D2 sits between the top two chain members, D1 ends last
        return chain and a[2] < a[k] < a[1] < a[k - 1] and b[4] < b[2] < b[3] < b[1]
    raise ValueError(f"unknown pattern kind {kind!r}")


def _descending_chains(segs: tuple[Segment, ...], min_len: int, exclude=()):
    """All index chains (i1, i2, ...) with segs[i_{t+1}] ≺ segs[i_t], of length >= min_len."""
    n = len(segs)
    below = [[j for j in range(n) if precedes(segs[j], segs[i])] for i in range(n)]

    def extend(chain):
        if len(chain) >= min_len:
            yield tuple(chain)
        for j in below[chain[-1]]:
            if j not in exclude:
                chain.append(j)
                yield from extend(chain)
                chain.pop()

    for start in range(n):
        if start not in exclude:
            yield from extend([start])


def find_pattern(m: Multisegment) -> PatternWitness | None:
    """Exhaustive search for a 4231 or 3412 sub-multisegment; returns the first witness."""
    segs = m.segments
    n = len(segs)
    if n < 4:
        return None
    for first in range(n):
        # 4231: (D1; D2 ≻ D3 ≻ ... ≻ Dk)
        for chain in _descending_chains(segs, 3, exclude=(first,)):
            cand = (segs[first],) + tuple(segs[j] for j in chain)
            if pattern_holds("4231", cand):
                return PatternWitness("4231", cand)
    for first in range(n):
        for second in range(n):
            if second == first or not precedes(segs[second], segs[first]):
                continue
            # 3412: D2 ≺ D1 and D3 ≻ D4 ≻ ... ≻ Dk
            for chain in _descending_chains(segs, 2, exclude=(first, second)):
                cand = (segs[first], segs[second]) + tuple(segs[j] for j in chain)
                if pattern_holds("3412", cand):
                    return PatternWitness("3412", cand)
    return None


def is_balanced(m: Multisegment) -> tuple[bool, PatternWitness | None]:
    """``(True, None)`` if m is balanced, else ``(False, witness)``.

    Only defined for regular multisegments.
    """
    if not is_regular(m):
        raise MultisegmentError(f"balanced is only defined for regular multisegments: {m}")
    w = find_pattern(m)
    return (w is None, w)


def balanced_flag(m: Multisegment) -> bool:
    """True iff m is regular and balanced (non-regular inputs read as not balanced)."""
    return is_regular(m) and find_pattern(m) is None


LECLERC = parse_multisegment("[4,5]+[2,4]+[3,3]+[1,2]")
LECLERC_M1 = parse_multisegment("[1,4]+[2,5]")
LECLERC_M2 = parse_multisegment("[1,2]+[2,3]+[3,4]+[4,5]")

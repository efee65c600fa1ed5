"""Aubert-Zelevinsky involution on multisegments (Moeglin-Waldspurger chains)."""

from __future__ import annotations

from functools import lru_cache

from .core import Multisegment, Segment, is_speh


def _extract_chain(segs: list[Segment]) -> list[int]:
    """Indices of one MW chain: ends e, e-1, ..., each linked to the previous.

    Every choice takes the shortest admissible segment (largest a).
    """
    e = max(s.b for s in segs)
    top = max((i for i, s in enumerate(segs) if s.b == e), key=lambda i: (segs[i].a, -i))
    chain = [top]
    while True:
        cur = segs[chain[-1]]
        # next link ends one step lower and starts strictly lower, i.e. it precedes cur
        cands = [i for i, s in enumerate(segs) if s.b == cur.b - 1 and s.a < cur.a and i not in chain]
        if not cands:
            return chain
        chain.append(max(cands, key=lambda i: (segs[i].a, -i)))


@lru_cache(maxsize=4096)
def az_involution(m: Multisegment) -> Multisegment:
    segs = list(m.segments)
    out = []
    while segs:
        chain = _extract_chain(segs)
        e = segs[chain[0]].b
        out.append(Segment(e - len(chain) + 1, e))
        rest = []
        for i, s in enumerate(segs):
            if i in chain:
                if s.b - 1 >= s.a:
                    rest.append(Segment(s.a, s.b - 1))
            else:
                rest.append(s)
        segs = rest
    return Multisegment(out)


def az_is_involution_check(m: Multisegment) -> bool:
    return az_involution(az_involution(m)) == m


def speh_dual(m: Multisegment) -> Multisegment:
    """Closed form of the involution on a Speh multisegment: [b_k, b_1] + ... + [a_k, a_1]."""
    if not is_speh(m):
        raise ValueError(f"not a Speh multisegment: {m}")
    if not m:
        return m
    first, last = m[0], m[-1]
    return Multisegment(Segment(x, y) for x, y in zip(range(last.a, last.b + 1), range(first.a, first.b + 1)))

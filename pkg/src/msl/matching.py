"""Best matching functions between segment pairs, and the ladder formulas they feed.

Index convention: an instance built from ``(first, second)`` takes its Δ's from
``first`` and its Γ's from ``second``:

    X = {(i, j) : Δ_i ≺ Γ_j},   Y = {(i, j) : shift(Δ_i) ≺ Γ_j}.

The pair used for hom_Pi(C(m), C(n)) is ``build_instance(n, m)``: then #Y is
dim Hom_{Q+}(mu_+(m), mu_+(n)) and #X is dim Ext^1_{Q+}(mu_+(n), mu_+(m)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .core import Multisegment, Segment, arranged_form, is_ladder, precedes

Pair = tuple[int, int]


class LadderHypothesisError(ValueError):
    """Neither argument is a ladder, so the matching formulas do not apply."""


@dataclass(frozen=True)
class MatchingInstance:
    m_segs: tuple[Segment, ...]  # the Δ's
    n_segs: tuple[Segment, ...]  # the Γ's
    X: tuple[Pair, ...]
    Y: tuple[Pair, ...]
    arrows: tuple[tuple[Pair, Pair], ...]  # (y, x) with y ⇝ x

    def leads_to(self, y: Pair, x: Pair) -> bool:
        (r, s), (r2, s2) = y, x
        D, G = self.m_segs, self.n_segs
        return (r == r2 and precedes(G[s], G[s2])) or (s == s2 and precedes(D[r2], D[r]))

    def describe(self, matching: "BestMatching | None" = None) -> str:
        """Diagnostic text form; indices are 1-based as in the usual notation."""

        def fmt(pairs):
            return "{" + ", ".join(f"({i + 1},{j + 1})" for i, j in pairs) + "}"

        lines = [
            "Delta: " + " ".join(str(s) for s in self.m_segs),
            "Gamma: " + " ".join(str(s) for s in self.n_segs),
            f"X = {fmt(self.X)}",
            f"Y = {fmt(self.Y)}",
            "arrows: " + ", ".join(f"({y[0] + 1},{y[1] + 1})~>({x[0] + 1},{x[1] + 1})" for y, x in self.arrows),
        ]
        if matching is not None:
            pairs = sorted(matching.f.items())
            lines.append(
                f"|I| = {len(matching.I)}: "
                + ", ".join(f"({x[0] + 1},{x[1] + 1})<-({y[0] + 1},{y[1] + 1})" for x, y in pairs)
            )
        return "\n".join(lines)


@dataclass(frozen=True)
class BestMatching:
    I: frozenset[Pair]
    f: dict[Pair, Pair]  # I -> Y

    def is_valid_for(self, inst: MatchingInstance) -> bool:
        ys = list(self.f.values())
        return (
            set(self.f) == set(self.I)
            and self.I <= set(inst.X)
            and set(ys) <= set(inst.Y)
            and len(set(ys)) == len(ys)
            and all(inst.leads_to(y, x) for x, y in self.f.items())
        )


@lru_cache(maxsize=16384)
def build_instance(first: Multisegment, second: Multisegment) -> MatchingInstance:
    D = arranged_form(first)
    G = arranged_form(second)
    X = tuple((i, j) for i in range(len(D)) for j in range(len(G)) if precedes(D[i], G[j]))
    Y = tuple((i, j) for i in range(len(D)) for j in range(len(G)) if precedes(D[i].shift(), G[j]))
    inst = MatchingInstance(D, G, X, Y, ())
    arrows = tuple((y, x) for y in Y for x in X if inst.leads_to(y, x))
    return MatchingInstance(D, G, X, Y, arrows)


@lru_cache(maxsize=16384)
def best_matching(inst: MatchingInstance) -> BestMatching:
    """Maximum matching of X into Y along ⇝ (Hopcroft-Karp)."""
    if not inst.arrows:
        return BestMatching(frozenset(), {})
    G = nx.Graph()
    xs = [("X",) + x for x in inst.X]
    G.add_nodes_from(xs, bipartite=0)
    G.add_nodes_from((("Y",) + y for y in inst.Y), bipartite=1)
    G.add_edges_from((("X",) + x, ("Y",) + y) for y, x in inst.arrows)
    mate = nx.bipartite.hopcroft_karp_matching(G, top_nodes=xs)
    f = {node[1:]: mate[node][1:] for node in xs if node in mate}
    return BestMatching(frozenset(f), f)


def ladder_instance(m: Multisegment, n: Multisegment) -> tuple[MatchingInstance, BestMatching]:
    if not (is_ladder(m) or is_ladder(n)):
        raise LadderHypothesisError(f"neither {m} nor {n} is a ladder")
    inst = build_instance(n, m)
    return inst, best_matching(inst)


def hom_via_matching(m: Multisegment, n: Multisegment) -> int:
    """hom_Pi(C(m), C(n)) = #Y - |I| when m or n is a ladder."""
    inst, bm = ladder_instance(m, n)
    return len(inst.Y) - len(bm.I)


def coker_via_matching(m: Multisegment, n: Multisegment) -> int:
    """Dimension of the Coxeter cokernel = #X - |I| when m or n is a ladder."""
    inst, bm = ladder_instance(m, n)
    return len(inst.X) - len(bm.I)

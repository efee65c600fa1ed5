"""Pole orders of intertwining operators between Zelevinsky / Langlands representations.

Conventions (single cuspidal line, m and n multisegments):

    lambda_L(m, n) = Λ(L(m), L(n)) = hom_Pi(C(m), C(n))
    lambda_Z(m, n) = Λ(Z(m), Z(n)) = hom_Pi(C(n), C(m))
    lambda_nr(m, n) = Λ^nr(L(m), L(n)) = lambda_L(m, n) - alpha_plus(m, n)
    frak_d(m, n)   = lambda_Z(m, n) + lambda_Z(n, m) + alpha(m, n)

The identification of the pole order with hom_Pi is a theorem when one of
m, n, m*, n* is balanced and conjectural otherwise; the report flags which.
Three backends compute hom_Pi: the Speh closed form, best matchings (one side a
ladder) and the randomized Pi-module oracle.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Mapping

from .az import az_involution
from .core import (
    LECLERC,
    LECLERC_M1,
    LECLERC_M2,
    Multisegment,
    balanced_flag,
    dual,
    grdim,
    is_ladder,
    is_speh,
    precedes,
    serialize,
    sym_form,
)
from .matching import coker_via_matching, hom_via_matching
from .pi_oracle import (
    DEFAULT_CONFIG,
    SampleConfig,
    generic_ext1,
    generic_hom,
    is_rigid_component,
    strongly_commute,
)
from .qrep import alpha, alpha_plus

METHODS = ("auto", "speh", "matching", "oracle")
_RANK = {"speh": 0, "matching": 1, "oracle": 2}


class MethodUnavailable(ValueError):
    """The requested backend's hypothesis does not hold for this pair."""


class BackendDisagreement(RuntimeError):
    """Two routes to the same quantity returned different values."""

    def __init__(self, message: str, report: "PoleReport | None" = None):
        super().__init__(message)
        self.report = report


# -- Speh closed form -------------------------------------------------------------------


def _require_speh(m, n):
    if not (is_speh(m) and is_speh(n)):
        raise MethodUnavailable(f"Speh formula needs two Speh multisegments, got {m} and {n}")


def speh_lambda(m: Multisegment, n: Multisegment) -> int:
    """min(#{j : shift(G_j) ≺ D_1}, #{i : shift(G_l) ≺ D_i}) for Speh m = sum D_i, n = sum G_j."""
    _require_speh(m, n)
    if not m or not n:
        return 0
    D, G = m.segments, n.segments
    left = sum(precedes(g.shift(), D[0]) for g in G)
    right = sum(precedes(G[-1].shift(), d) for d in D)
    return min(left, right)


def speh_lambda_nr(m: Multisegment, n: Multisegment) -> int:
    """min(#{j : G_j ≺ D_k}, #{i : G_1 ≺ D_i})."""
    _require_speh(m, n)
    if not m or not n:
        return 0
    D, G = m.segments, n.segments
    left = sum(precedes(g, D[-1]) for g in G)
    right = sum(precedes(G[0], d) for d in D)
    return min(left, right)


# -- dispatch -----------------------------------------------------------------------------


def applicable_methods(m: Multisegment, n: Multisegment) -> list[str]:
    out = []
    if is_speh(m) and is_speh(n):
        out.append("speh")
    if is_ladder(m) or is_ladder(n):
        out.append("matching")
    out.append("oracle")
    return out


def choose_method(m: Multisegment, n: Multisegment, method: str = "auto") -> str:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    avail = applicable_methods(m, n)
    if method == "auto":
        return avail[0]
    if method not in avail:
        raise MethodUnavailable(f"method {method!r} does not apply to ({m}, {n})")
    return method


def theorem_applies(m: Multisegment, n: Multisegment) -> bool:
    """At least one of m, n, m*, n* is balanced."""
    return any(balanced_flag(x) for x in (m, n, az_involution(m), az_involution(n)))


def _hom_by(method, m, n, cfg):
    if method == "speh":
        return speh_lambda(m, n)
    if method == "matching":
        return hom_via_matching(m, n)
    return generic_hom(m, n, cfg)


def _coker_by(method, m, n, cfg):
    if method == "speh":
        return speh_lambda_nr(m, n)
    if method == "matching":
        return coker_via_matching(m, n)
    return generic_hom(m, n, cfg) - alpha_plus(m, n)


def _agree(name: str, values: dict[str, int]) -> int:
    if len(set(values.values())) > 1:
        raise BackendDisagreement(f"{name}: backends disagree {values}")
    return next(iter(values.values()))


def lambda_L(m: Multisegment, n: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG, method: str = "auto", check: bool = False) -> int:
    chosen = choose_method(m, n, method)
    if not check:
        return _hom_by(chosen, m, n, cfg)
    vals = {b: _hom_by(b, m, n, cfg) for b in applicable_methods(m, n)}
    return _agree(f"lambda_L({m}; {n})", vals)


def lambda_Z(m: Multisegment, n: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG, method: str = "auto", check: bool = False) -> int:
    direct = lambda_L(n, m, cfg, method, check)
    if check:
        via_az = lambda_L(az_involution(m), az_involution(n), cfg, "auto", check)
        _agree(f"lambda_Z({m}; {n})", {"direct": direct, "az_route": via_az})
    return direct


def lambda_nr(m: Multisegment, n: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG, method: str = "auto", check: bool = False) -> int:
    chosen = choose_method(m, n, method)
    if not check:
        if chosen == "oracle":
            return lambda_L(m, n, cfg, chosen) - alpha_plus(m, n)
        return _coker_by(chosen, m, n, cfg)
    base = lambda_L(m, n, cfg, method, check) - alpha_plus(m, n)
    vals = {"difference": base}
    vals.update({b: _coker_by(b, m, n, cfg) for b in applicable_methods(m, n)})
    return _agree(f"lambda_nr({m}; {n})", vals)


def frak_d(m: Multisegment, n: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG, method: str = "auto", check: bool = False) -> int:
    d = lambda_Z(m, n, cfg, method, check) + lambda_Z(n, m, cfg, method, check) + alpha(m, n)
    if check:
        _agree(f"frak_d({m}; {n})", {"poles": d, "ext1_oracle": generic_ext1(n, m, cfg)})
    return d


# -- reports ------------------------------------------------------------------------------


@dataclass
class PoleReport:
    m: str
    n: str
    lambda_Z: int
    lambda_L: int
    lambda_nr: int
    alpha: int
    alpha_plus: int
    frak_d: int
    method: str
    conjectural: bool
    crosschecks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.crosschecks)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["crosschecks"] = [[name, ok] for name, ok in self.crosschecks]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _crosschecks(m, n, rep: PoleReport, cfg) -> list[tuple[str, bool]]:
    checks = []

    def record(name, values):
        checks.append((name, len(set(values)) == 1))

    for b in applicable_methods(m, n):
        record(f"lambda_L:{b}", [rep.lambda_L, _hom_by(b, m, n, cfg)])
        record(f"lambda_Z:{b}", [rep.lambda_Z, _hom_by(b, n, m, cfg)])
        record(f"lambda_nr:{b}", [rep.lambda_nr, _coker_by(b, m, n, cfg)])
    record("lambda_Z:az_route", [rep.lambda_Z, lambda_L(az_involution(m), az_involution(n), cfg)])
    record("lambda_L:dual_route", [rep.lambda_L, lambda_L(dual(n), dual(m), cfg)])
    record("frak_d:ext1_oracle", [rep.frak_d, generic_ext1(n, m, cfg)])
    checks.append(("frak_d:nonnegative", rep.frak_d >= 0))
    checks.append(("lambda_nr:nonnegative", rep.lambda_nr >= 0))
    return checks


def pole_report(m: Multisegment, n: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG, method: str = "auto", check: bool = False) -> PoleReport:
    """All pole quantities for the ordered pair (m, n).

    With ``check=True`` every applicable backend and transport route is run; any
    disagreement raises BackendDisagreement carrying the report.
    """
    chosen = choose_method(m, n, method)
    lz = _hom_by(chosen, n, m, cfg)
    lz_rev = _hom_by(chosen, m, n, cfg)
    ap = alpha_plus(m, n)
    al = alpha(m, n)
    rep = PoleReport(
        m=serialize(m),
        n=serialize(n),
        lambda_Z=lz,
        lambda_L=lz_rev,
        lambda_nr=lz_rev - ap if chosen == "oracle" else _coker_by(chosen, m, n, cfg),
        alpha=al,
        alpha_plus=ap,
        frak_d=lz + lz_rev + al,
        method=chosen,
        conjectural=not theorem_applies(m, n),
    )
    if check:
        rep.crosschecks = _crosschecks(m, n, rep, cfg)
        if not rep.passed:
            failed = [name for name, ok in rep.crosschecks if not ok]
            raise BackendDisagreement(f"cross-checks failed for ({m}; {n}): {failed}", rep)
    return rep


def block_report(
    m_lines: Mapping[str, Multisegment],
    n_lines: Mapping[str, Multisegment],
    cfg: SampleConfig = DEFAULT_CONFIG,
    method: str = "auto",
    check: bool = False,
) -> PoleReport:
    """Pole quantities for inputs spread over several cuspidal lines: sums over lines.

    Lines absent from one side contribute their pairing with the zero multisegment.
    """
    empty = Multisegment()
    parts = []
    for line in sorted(set(m_lines) | set(n_lines)):
        parts.append((line, pole_report(m_lines.get(line, empty), n_lines.get(line, empty), cfg, method, check)))
    if not parts:
        return pole_report(empty, empty, cfg, method, check)
    total = PoleReport(
        m=" ; ".join(f"{line}:{r.m}" for line, r in parts),
        n=" ; ".join(f"{line}:{r.n}" for line, r in parts),
        lambda_Z=sum(r.lambda_Z for _, r in parts),
        lambda_L=sum(r.lambda_L for _, r in parts),
        lambda_nr=sum(r.lambda_nr for _, r in parts),
        alpha=sum(r.alpha for _, r in parts),
        alpha_plus=sum(r.alpha_plus for _, r in parts),
        frak_d=sum(r.frak_d for _, r in parts),
        method=max((r.method for _, r in parts), key=_RANK.__getitem__),
        conjectural=any(r.conjectural for _, r in parts),
        crosschecks=[(f"{line}/{name}", ok) for line, r in parts for name, ok in r.crosschecks],
    )
    return total


# -- Leclerc's example --------------------------------------------------------------------


class BatteryFailure(AssertionError):
    pass


def leclerc_suite(cfg: SampleConfig = DEFAULT_CONFIG, count: int = 50, seed: int | None = None, strict: bool = True) -> list[PoleReport]:
    """Golden battery on m_Lec = [4,5]+[2,4]+[3,3]+[1,2].

    Returns the checked report for (m_Lec, m_Lec) with the battery verdicts appended
    to its crosschecks. Hom additivity over m1 + m2 is tested on ``count`` random n
    (at most 4 segments, coordinates in [0, 6]).
    """
    import random

    from .sampling import random_multisegment

    rep = pole_report(LECLERC, LECLERC, cfg, check=True)
    battery = [
        ("lambda_Z(m_Lec,m_Lec)=2", rep.lambda_Z == 2),
        ("frak_d(m_Lec,m_Lec)=0", rep.frak_d == 0),
        ("lambda_Z=(d,d)/2", 2 * rep.lambda_Z == sym_form(grdim(LECLERC), grdim(LECLERC))),
        ("strongly_commute(m_Lec,m_Lec)", strongly_commute(LECLERC, LECLERC, cfg)),
        ("not is_rigid_component(m_Lec)", not is_rigid_component(LECLERC, cfg)),
    ]
    rng = random.Random(cfg.seed if seed is None else seed)
    bad = []
    for _ in range(count):
        n = random_multisegment(rng, 4, 0, 6)
        whole = generic_hom(n, LECLERC_M1 + LECLERC_M2, cfg)
        parts = generic_hom(n, LECLERC_M1, cfg) + generic_hom(n, LECLERC_M2, cfg)
        if whole != parts:
            bad.append(serialize(n))
    battery.append((f"hom additivity over m1+m2 ({count} random n)", not bad))
    rep.crosschecks = rep.crosschecks + battery
    if strict and not rep.passed:
        failed = [name for name, ok in battery if not ok]
        raise BatteryFailure(f"Leclerc battery failed: {failed}" + (f"; additivity fails for n in {bad}" if bad else ""))
    return [rep]

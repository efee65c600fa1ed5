"""Seeded property batteries, one suite per module, driven by ``msl check``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from . import modp
from .az import az_involution, speh_dual
from .core import (
    LECLERC,
    Multisegment,
    arranged_form,
    balanced_flag,
    dual,
    euler_plus,
    grdim,
    is_balanced,
    is_regular,
    parse_multisegment,
    precedes,
    serialize,
    sym_form,
)
from .matching import best_matching, build_instance, coker_via_matching, hom_via_matching
from .pi_oracle import (
    SampleConfig,
    generic_ext1,
    generic_hom,
    generic_point,
    generic_qminus_multisegment,
    hom_pi,
    hom_pi_coxeter,
    is_rigid_component,
)
from .poles import BatteryFailure, BackendDisagreement, lambda_L, leclerc_suite, pole_report
from .qrep import (
    alpha_plus,
    alpha_plus_by_rule,
    ext1_dim_explicit,
    ext1_qplus_segments,
    hom_dim_explicit,
    hom_qplus_segments,
    mu_plus,
)
from .sampling import random_ladder, random_multisegment, random_regular, random_segment, random_speh

SUITES = ("core", "az", "qrep", "oracle", "matching", "poles", "leclerc")


@dataclass(frozen=True)
class CheckConfig:
    seed: int = 0
    cases: int = 100
    max_segments: int = 4
    coord_range: tuple[int, int] = (0, 6)
    sample: SampleConfig = field(default_factory=SampleConfig)


@dataclass
class PropertyResult:
    suite: str
    name: str
    passed: int = 0
    failed: int = 0
    minimal_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        tail = f"  minimal failing case: {self.minimal_failure}" if self.minimal_failure else ""
        return f"[{verdict}] {self.suite}/{self.name}: {self.passed} passed, {self.failed} failed{tail}"


@dataclass(frozen=True)
class Property:
    name: str
    draw: Callable[[random.Random, CheckConfig], tuple]
    holds: Callable[..., bool]
    cases: int | None = None  # None: use the config's count


def _size(args) -> tuple:
    total = 0
    for a in args:
        if isinstance(a, Multisegment):
            total += len(a) * 100 + sum(s.length for s in a)
    return (total, repr(args))


def _fmt(args) -> str:
    return "(" + ", ".join(f"'{serialize(a)}'" if isinstance(a, Multisegment) else str(a) for a in args) + ")"


def run_property(suite: str, prop: Property, cfg: CheckConfig) -> PropertyResult:
    rng = random.Random(f"{cfg.seed}/{suite}/{prop.name}")
    res = PropertyResult(suite, prop.name)
    worst = None
    for _ in range(prop.cases if prop.cases is not None else cfg.cases):
        args = prop.draw(rng, cfg)
        try:
            ok = bool(prop.holds(*args, cfg=cfg))
        except (BackendDisagreement, BatteryFailure, ValueError, AssertionError):
            ok = False
        if ok:
            res.passed += 1
        else:
            res.failed += 1
            if worst is None or _size(args) < _size(worst):
                worst = args
    if worst is not None:
        res.minimal_failure = _fmt(worst)
    return res


# -- generators ---------------------------------------------------------------------------


def _any(rng, cfg):
    return (random_multisegment(rng, cfg.max_segments, *cfg.coord_range),)


def _pair(rng, cfg):
    return _any(rng, cfg) + _any(rng, cfg)


def _ladder_pair(rng, cfg):
    lo, hi = cfg.coord_range
    lad = random_ladder(rng, cfg.max_segments, lo, hi)
    other = random_multisegment(rng, cfg.max_segments, lo, hi)
    return (lad, other) if rng.random() < 0.5 else (other, lad)


def _speh_pair(rng, cfg):
    lo, hi = cfg.coord_range
    return random_speh(rng, cfg.max_segments, lo, hi), random_speh(rng, cfg.max_segments, lo, hi)


def _regular(rng, cfg):
    return (random_regular(rng, cfg.max_segments + 1, *cfg.coord_range),)


def _segment_pair(rng, cfg):
    return random_segment(rng, 0, 5), random_segment(rng, 0, 5)


# -- properties ---------------------------------------------------------------------------


def _roundtrip(m, cfg):
    return parse_multisegment(serialize(m)) == m


def _arranged_is_linear_extension(m, cfg):
    segs = arranged_form(m)
    return all(not precedes(segs[i], segs[j]) for i in range(len(segs)) for j in range(i + 1, len(segs)))


def _dual_involutive(m, cfg):
    return dual(dual(m)) == m and grdim(dual(m)).total == grdim(m).total


def _sym_even(m, n, cfg):
    d, e = grdim(m), grdim(n)
    return sym_form(d, d) % 2 == 0 and sym_form(d, e) == sym_form(e, d)


def _balanced_regular(m, cfg):
    return not balanced_flag(m) or is_regular(m)


def _az_involutive(m, cfg):
    return az_involution(az_involution(m)) == m and grdim(az_involution(m)) == grdim(m)


def _az_geometric(m, cfg):
    return az_involution(m) == generic_qminus_multisegment(m, cfg.sample)


def _az_speh(m, n, cfg):
    return az_involution(m) == speh_dual(m)


def _qplus_hom(d, g, cfg):
    return hom_qplus_segments(d, g) == hom_dim_explicit(mu_plus(Multisegment([d])), mu_plus(Multisegment([g])))


def _qplus_ext(d, g, cfg):
    return ext1_qplus_segments(d, g) == ext1_dim_explicit(mu_plus(Multisegment([d])), mu_plus(Multisegment([g])))


def _qplus_euler(m, n, cfg):
    x, y = mu_plus(m), mu_plus(n)
    return hom_dim_explicit(x, y) - ext1_dim_explicit(x, y) == euler_plus(grdim(m), grdim(n))


def _alpha_plus_rule(m, n, cfg):
    return alpha_plus(m, n) == alpha_plus_by_rule(m, n)


def _moment(m, cfg):
    return generic_point(m, cfg.sample).moment_residual() == 0


def _coxeter_fast_path(m, n, cfg):
    x, y = generic_point(m, cfg.sample, 0), generic_point(n, cfg.sample, 1)
    return hom_pi(x, y) == hom_pi_coxeter(x, y)


def _base_change(m, n, cfg):
    x, y = generic_point(m, cfg.sample, 0), generic_point(n, cfg.sample, 1)
    rng = np.random.default_rng(cfg.seed)
    g = {i: modp.random_invertible(d, cfg.sample.prime, rng) for i, d in x.dims.items() if d}
    return hom_pi(x, y) == hom_pi(x.base_change(g), y)


def _ext_symmetric(m, n, cfg):
    e = generic_ext1(m, n, cfg.sample)
    return e == generic_ext1(n, m, cfg.sample) and e >= 0


def _hom_floor(m, n, cfg):
    return generic_hom(m, n, cfg.sample) >= max(0, alpha_plus(m, n))


def _matching_hom(m, n, cfg):
    return hom_via_matching(m, n) == generic_hom(m, n, cfg.sample)


def _matching_coker(m, n, cfg):
    return coker_via_matching(m, n) == generic_hom(m, n, cfg.sample) - alpha_plus(m, n)


def _matching_certified(m, n, cfg):
    inst = build_instance(n, m)
    return best_matching(inst).is_valid_for(inst)


def _duality(m, n, cfg):
    return lambda_L(m, n, cfg.sample) == lambda_L(dual(n), dual(m), cfg.sample)


def _az_transport(m, n, cfg):
    return generic_hom(m, n, cfg.sample) == generic_hom(az_involution(n), az_involution(m), cfg.sample)


def _report_checks(m, n, cfg):
    return pole_report(m, n, cfg.sample, check=True).passed


def _speh_report(m, n, cfg):
    return pole_report(m, n, cfg.sample, check=True).method == "speh"


def _block_additivity(m, n, cfg):
    # second block lives 20 units higher, far beyond linkage range
    def lift(x):
        return Multisegment(type(s)(s.a + 20, s.b + 20) for s in x)

    r1, r2 = pole_report(m, n, cfg.sample), pole_report(n, m, cfg.sample)
    whole = pole_report(m + lift(n), n + lift(m), cfg.sample)
    return (
        whole.lambda_L == r1.lambda_L + r2.lambda_L
        and whole.lambda_Z == r1.lambda_Z + r2.lambda_Z
        and whole.alpha == r1.alpha + r2.alpha
    )


def _balanced_rigid(m, cfg):
    return is_balanced(m)[0] == is_rigid_component(m, cfg.sample)


def _leclerc(seed, cfg):
    leclerc_suite(replace(cfg.sample, seed=seed), count=50)
    return True


def _leclerc_samples(samples, cfg):
    rep = pole_report(LECLERC, LECLERC, replace(cfg.sample, samples=samples), check=True)
    return rep.lambda_Z == 2 and rep.frak_d == 0


BATTERIES: dict[str, list[Property]] = {
    "core": [
        Property("parse-serialize roundtrip", _any, _roundtrip),
        Property("arranged form is a linear extension", _any, _arranged_is_linear_extension),
        Property("dual is an involution", _any, _dual_involutive),
        Property("symmetric form is even and symmetric", _pair, _sym_even),
        Property("balanced implies regular", _regular, _balanced_regular),
    ],
    "az": [
        Property("az is an involution preserving grdim", _any, _az_involutive),
        Property("az equals generic T orbit type", _any, _az_geometric),
        Property("az on Speh equals closed form", lambda r, c: _speh_pair(r, c), _az_speh),
    ],
    "qrep": [
        Property("hom closed form vs kernel", _segment_pair, _qplus_hom),
        Property("ext closed form vs cokernel", _segment_pair, _qplus_ext),
        Property("Euler identity", _pair, _qplus_euler),
        Property("alpha_plus pair rule", _pair, _alpha_plus_rule),
    ],
    "oracle": [
        Property("moment relation holds", _any, _moment),
        Property("Coxeter fast path equals full Hom", _pair, _coxeter_fast_path),
        Property("Hom invariant under base change", _pair, _base_change),
        Property("ext1 symmetric and nonnegative", _pair, _ext_symmetric),
        Property("generic hom above alpha_plus floor", _pair, _hom_floor),
    ],
    "matching": [
        Property("hom via matching equals oracle", _ladder_pair, _matching_hom),
        Property("coker via matching equals oracle", _ladder_pair, _matching_coker),
        Property("matching is certified", _ladder_pair, _matching_certified),
    ],
    "poles": [
        Property("duality", _pair, _duality),
        Property("AZ transport", _pair, _az_transport),
        Property("all cross-checks pass", _pair, _report_checks),
        Property("Speh pairs dispatch to closed form and agree", _speh_pair, _speh_report),
        Property("block additivity", _pair, _block_additivity),
        Property("balanced iff rigid", _regular, _balanced_rigid),
    ],
    "leclerc": [
        Property("golden battery across seeds", lambda r, c: (r.randrange(2**32),), _leclerc, cases=3),
        Property("samples 1 vs 16", lambda r, c: (r.choice([1, 16]),), _leclerc_samples, cases=4),
    ],
}


def run_suites(names, cfg: CheckConfig) -> list[PropertyResult]:
    if "all" in names:
        names = SUITES
    out = []
    for suite in names:
        if suite not in BATTERIES:
            raise ValueError(f"unknown suite {suite!r}")
        out.extend(run_property(suite, prop, cfg) for prop in BATTERIES[suite])
    return out

import random

import pytest

from msl.checks import BATTERIES, CheckConfig, Property, run_property, run_suites
from msl.core import is_ladder, is_regular, is_speh
from msl.sampling import SweepConfig, random_ladder, random_regular, random_speh, sweep_pairs


def test_generators_meet_their_class():
    rng = random.Random(0)
    for _ in range(200):
        assert is_ladder(random_ladder(rng, 5, 0, 8))
        assert is_speh(random_speh(rng, 5, 0, 8))
        assert is_regular(random_regular(rng, 6, 0, 8))


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(count=0)
    with pytest.raises(ValueError):
        SweepConfig(coord_range=(3, 1))
    with pytest.raises(ValueError):
        SweepConfig(filters=frozenset({"tall"}))


def test_sweep_pairs_deterministic_and_filtered():
    cfg = SweepConfig(seed=9, count=20, filters=frozenset({"regular"}))
    a, b = list(sweep_pairs(cfg)), list(sweep_pairs(cfg))
    assert a == b and len(a) == 20
    assert all(is_regular(m) and is_regular(n) for m, n in a)


def test_every_battery_passes_small():
    cfg = CheckConfig(seed=3, cases=10)
    failures = [r.line() for r in run_suites(["all"], cfg) if not r.ok]
    assert not failures


def test_minimal_failing_case_is_reported():
    prop = Property("always false on two segments", lambda r, c: (random_ladder(r, 3, 0, 5),), lambda m, cfg: len(m) != 2)
    res = run_property("demo", prop, CheckConfig(cases=50))
    assert res.failed > 0 and res.minimal_failure is not None
    assert "FAIL" in res.line()


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites(["nope"], CheckConfig())


def test_suite_names():
    assert set(BATTERIES) == {"core", "az", "qrep", "oracle", "matching", "poles", "leclerc"}

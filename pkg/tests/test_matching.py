import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multisegments
from msl.core import Multisegment, is_ladder, parse_multisegment as P
from msl.matching import (
    LadderHypothesisError,
    best_matching,
    build_instance,
    coker_via_matching,
    hom_via_matching,
)
from msl.pi_oracle import generic_hom
from msl.qrep import alpha_plus, ext1_qplus, hom_qplus
from msl.sampling import random_ladder


def brute_force_matching_size(inst) -> int:
    """Largest injective X -> Y along arrows, by exhaustive search."""
    succ = {x: [y for y, x2 in inst.arrows if x2 == x] for x in inst.X}
    xs = [x for x in inst.X if succ[x]]
    for size in range(len(xs), 0, -1):
        for subset in itertools.combinations(xs, size):
            for ys in itertools.product(*(succ[x] for x in subset)):
                if len(set(ys)) == size:
                    return size
    return 0


@st.composite
def ladder_pairs(draw):
    lad = random_ladder(random.Random(draw(st.integers(0, 2**32))), 4, 0, 6)
    other = draw(multisegments(4))
    return (lad, other) if draw(st.booleans()) else (other, lad)


def test_speh_instance():
    m = P("[2,3]+[1,2]")
    inst = build_instance(m, m)
    assert inst.X == ((1, 0),)
    assert inst.Y == ((0, 0), (1, 0), (1, 1))
    assert len(best_matching(inst).I) == 1
    assert hom_via_matching(m, m) == 2
    assert coker_via_matching(m, m) == 0


def test_single_segment_instance():
    inst = build_instance(P("[0,1]"), P("[0,1]"))
    assert inst.X == () and inst.Y == ((0, 0),)
    assert hom_via_matching(P("[0,1]"), P("[0,1]")) == 1


def test_empty_side():
    inst = build_instance(P("[0,1]"), Multisegment())
    assert inst.X == inst.Y == ()
    assert best_matching(inst).I == frozenset()


def test_base_case_binding():
    m, n = P("[1,1]"), P("[0,0]")
    assert hom_via_matching(m, n) == 0
    assert coker_via_matching(m, n) == 1


def test_no_ladder_raises(leclerc):
    with pytest.raises(LadderHypothesisError):
        hom_via_matching(leclerc, leclerc)


def test_describe_lists_sets():
    m = P("[2,3]+[1,2]")
    inst = build_instance(m, m)
    text = inst.describe(best_matching(inst))
    assert "X = {(2,1)}" in text and "Y = {(1,1), (2,1), (2,2)}" in text and "|I| = 1" in text


@given(multisegments(4), multisegments(4))
def test_hopcroft_karp_is_maximum(m, n):
    inst = build_instance(m, n)
    bm = best_matching(inst)
    assert bm.is_valid_for(inst)
    assert len(bm.I) == brute_force_matching_size(inst)


@given(multisegments(4), multisegments(4))
def test_counts_are_qplus_dimensions(m, n):
    inst = build_instance(n, m)
    assert len(inst.Y) == hom_qplus(m, n)
    assert len(inst.X) == ext1_qplus(n, m)


@given(ladder_pairs())
def test_ladder_formulas_match_oracle(pair):
    m, n = pair
    assert is_ladder(m) or is_ladder(n)
    h = generic_hom(m, n)
    assert hom_via_matching(m, n) == h
    assert coker_via_matching(m, n) == h - alpha_plus(m, n)

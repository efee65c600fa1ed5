import pytest
from hypothesis import given

from conftest import multisegments, segments
from msl.core import (
    LECLERC_M1,
    DimVector,
    Multisegment,
    MultisegmentError,
    Segment,
    arranged_form,
    dual,
    find_pattern,
    grdim,
    is_balanced,
    is_ladder,
    is_regular,
    is_speh,
    parse_multisegment,
    precedes,
    serialize,
    shift,
    sym_form,
    unlinked,
)

P = parse_multisegment
S = Segment


def test_parse_leclerc(leclerc):
    assert sorted(leclerc.segments, key=lambda s: (s.a, s.b)) == [S(1, 2), S(2, 4), S(3, 3), S(4, 5)]
    assert serialize(leclerc) == "[4,5]+[2,4]+[3,3]+[1,2]"


def test_parse_empty_and_whitespace():
    assert P("") == Multisegment()
    assert P("  ") == Multisegment()
    assert P(" [ -2 , 1 ] + [0,0]") == Multisegment([S(-2, 1), S(0, 0)])


@pytest.mark.parametrize("text", ["[3,1]", "[0,1", "[0,1]+", "0,1", "[a,b]", "[0,1][2,3]"])
def test_parse_rejects(text):
    with pytest.raises(MultisegmentError):
        P(text)


def test_precedes_examples():
    assert precedes(S(1, 3), S(2, 5))
    assert not precedes(S(0, 1), S(0, 1))
    assert precedes(S(0, 0), S(1, 1))


def test_unlinked_examples():
    assert unlinked(S(0, 3), S(1, 2))
    assert not unlinked(S(1, 3), S(2, 5))
    assert unlinked(S(0, 0), S(2, 2))


def test_shift_and_dual():
    assert shift(S(2, 4)) == S(1, 3)
    assert dual(S(1, 2)) == S(-2, -1)
    assert dual(dual(S(3, 7))) == S(3, 7)


def test_grdim_examples(leclerc):
    assert dict(grdim(leclerc)) == {1: 1, 2: 2, 3: 2, 4: 2, 5: 1}
    assert dict(grdim(P("[0,0]"))) == {0: 1}
    assert grdim(Multisegment()).total == 0


def test_sym_form_examples(leclerc):
    assert sym_form(DimVector({0: 1}), DimVector({0: 1})) == 2
    assert sym_form(DimVector({0: 1}), DimVector({1: 1})) == -1
    assert sym_form(grdim(leclerc), grdim(leclerc)) == 4


def test_arranged_examples():
    assert arranged_form(P("[1,2]+[2,3]")) == (S(2, 3), S(1, 2))
    assert arranged_form(LECLERC_M1) == (S(2, 5), S(1, 4))
    assert arranged_form(Multisegment()) == ()


def test_classification(leclerc):
    assert is_ladder(P("[2,5]+[1,4]"))
    assert is_speh(P("[2,3]+[1,2]"))
    assert is_regular(leclerc)
    assert not is_ladder(leclerc)


def test_leclerc_witness(leclerc):
    ok, w = is_balanced(leclerc)
    assert not ok
    assert w.kind == "4231"
    assert w.ordered_segments == (S(2, 4), S(4, 5), S(3, 3), S(1, 2))
    assert w.holds()


def test_small_inputs_balanced():
    assert is_balanced(P("[0,1]")) == (True, None)


def test_is_balanced_rejects_nonregular():
    with pytest.raises(MultisegmentError):
        is_balanced(P("[0,1]+[0,2]"))


def test_3412_witness():
    # smallest non-rigid multisegment of the other pattern type
    m = P("[3,7]+[4,6]+[0,4]+[2,3]")
    w = find_pattern(m)
    assert w is not None and w.kind == "3412" and w.holds()


@given(multisegments())
def test_roundtrip(m):
    assert P(serialize(m)) == m


@given(multisegments())
def test_arranged_is_linear_extension(m):
    segs = arranged_form(m)
    assert not any(precedes(segs[i], segs[j]) for i in range(len(segs)) for j in range(i + 1, len(segs)))


@given(segments(), segments())
def test_precedes_raises_end(d1, d2):
    if precedes(d1, d2):
        assert d2.b > d1.b and not precedes(d2, d1)


@given(multisegments(), multisegments())
def test_grdim_additive_and_form_symmetric(m, n):
    assert grdim(m + n) == grdim(m) + grdim(n)
    assert sym_form(grdim(m), grdim(n)) == sym_form(grdim(n), grdim(m))
    assert sym_form(grdim(m), grdim(m)) % 2 == 0


@given(multisegments(max_size=5))
def test_ladders_are_balanced(m):
    if is_ladder(m):
        assert is_balanced(m) == (True, None)


@given(multisegments())
def test_dual_involution(m):
    assert dual(dual(m)) == m

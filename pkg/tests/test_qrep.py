import numpy as np
import pytest
from hypothesis import given

from conftest import multisegments, segments
from msl.core import Multisegment, Segment, euler_plus, grdim, parse_multisegment as P
from msl.qrep import (
    alpha,
    alpha_plus,
    alpha_plus_by_rule,
    ext1_dim_explicit,
    ext1_qplus,
    ext1_qplus_segments,
    hom_dim_explicit,
    hom_qplus,
    hom_qplus_segments,
    mu_minus,
    mu_plus,
)


def test_mu_plus_examples(leclerc):
    r = mu_plus(P("[0,1]"))
    assert dict(r.dims) == {0: 1, 1: 1}
    assert np.array_equal(r.map_at(0), [[1]])
    assert not np.any(r.map_at(1))
    assert mu_plus(Multisegment()).dims.total == 0
    assert dict(mu_plus(leclerc).dims) == {1: 1, 2: 2, 3: 2, 4: 2, 5: 1}


def test_mu_minus_direction():
    r = mu_minus(P("[0,1]"))
    assert np.array_equal(r.map_at(1), [[1]])
    assert not np.any(r.map_at(0))


def test_closed_form_examples():
    assert hom_qplus_segments(Segment(1, 4), Segment(0, 2)) == 1
    assert hom_qplus_segments(Segment(1, 3), Segment(2, 5)) == 0
    assert ext1_qplus_segments(Segment(1, 2), Segment(2, 4)) == 1
    assert hom_qplus(P("[0,1]"), P("[0,1]")) == 1
    assert hom_qplus(P("[0,1]"), Multisegment()) == 0


def test_alpha_examples(leclerc):
    assert alpha_plus(P("[1,1]"), P("[0,0]")) == -1
    assert alpha_plus(P("[0,1]"), P("[0,1]")) == 1
    assert alpha(P("[0,0]"), P("[0,0]")) == -2
    assert alpha(P("[0,0]"), P("[1,1]")) == 1
    assert alpha(leclerc, leclerc) == -4


@given(segments(0, 5), segments(0, 5))
def test_segment_closed_forms_vs_linear_algebra(d, g):
    x, y = mu_plus(Multisegment([d])), mu_plus(Multisegment([g]))
    assert hom_qplus_segments(d, g) == hom_dim_explicit(x, y)
    assert ext1_qplus_segments(d, g) == ext1_dim_explicit(x, y)


@given(multisegments(3), multisegments(3))
def test_sum_closed_forms_and_euler(m, n):
    x, y = mu_plus(m), mu_plus(n)
    h, e = hom_dim_explicit(x, y), ext1_dim_explicit(x, y)
    assert (h, e) == (hom_qplus(m, n), ext1_qplus(m, n))
    assert h - e == euler_plus(grdim(m), grdim(n))


@given(multisegments(), multisegments())
def test_pair_rule_reproduces_alpha_plus(m, n):
    assert alpha_plus_by_rule(m, n) == alpha_plus(m, n)


@given(multisegments(), multisegments())
def test_alpha_plus_sum_is_alpha(m, n):
    # alpha_plus(m, n) + alpha_plus(n, m) = hom + hom - ext - ext = -alpha
    assert alpha_plus(m, n) + alpha_plus(n, m) == -alpha(m, n)


def test_mismatched_quivers():
    with pytest.raises(ValueError):
        hom_dim_explicit(mu_plus(P("[0,1]")), mu_minus(P("[0,1]")))

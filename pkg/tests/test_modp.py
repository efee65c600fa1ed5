import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from msl import modp

P = modp.DEFAULT_PRIME


@st.composite
def small_matrices(draw):
    r, c = draw(st.integers(0, 6)), draw(st.integers(0, 6))
    vals = draw(st.lists(st.integers(-3, 3), min_size=r * c, max_size=r * c))
    return np.array(vals, dtype=np.int64).reshape(r, c)


@given(small_matrices())
def test_rank_matches_sympy(A):
    expected = sympy.Matrix(A.tolist()).rank() if A.size else 0
    assert modp.rank(A, P) == expected


@given(small_matrices())
def test_nullspace_is_kernel(A):
    N = modp.nullspace(A, P)
    assert N.shape == (A.shape[1], A.shape[1] - modp.rank(A, P))
    if N.size and A.size:
        assert not np.any(modp.matmul(modp.as_field(A, P), N, P))


def test_small_prime_rank_differs():
    A = np.array([[1, 1], [1, 4]])
    assert modp.rank(A, 3) == 1
    assert modp.rank(A, P) == 2


def test_matmul_no_overflow():
    A = np.full((3, 3), P - 1, dtype=np.int64)
    assert np.all(modp.matmul(A, A, P) == 3)


def test_random_invertible():
    rng = np.random.default_rng(0)
    assert modp.rank(modp.random_invertible(5, P, rng), P) == 5


def test_rejects_bad_prime():
    with pytest.raises(ValueError):
        modp.rank(np.eye(2, dtype=np.int64), 1)

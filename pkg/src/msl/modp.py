"""Exact linear algebra over a prime field F_p, p < 2**31.

Matrices are int64 numpy arrays with entries in [0, p). Products of two reduced
entries stay below 2**62, so one elimination step never overflows.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 2147483647  # 2**31 - 1


def _check_prime(p: int):
    if not 2 < p < 2**31:
        raise ValueError(f"modulus must lie in (2, 2**31), got {p}")


def as_field(A, p: int) -> np.ndarray:
    return np.asarray(A, dtype=np.int64) % p


def echelon(A, p: int, reduced: bool = True) -> tuple[np.ndarray, list[int]]:
    """Row echelon form of A over F_p and its pivot columns.

    With ``reduced=True`` the result is the reduced row echelon form.
    """
    _check_prime(p)
    M = as_field(A, p).copy()
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        if not reduced:
            col[:r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            M[hit] = (M[hit] - np.outer(col[hit], M[r])) % p
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A, p: int = DEFAULT_PRIME) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(echelon(A, p, reduced=False)[1])


def nullspace(A, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Basis of {x : A x = 0} over F_p as the columns of an (n, k) matrix."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = echelon(A, p, reduced=True)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = (-R[row, f]) % p
    return basis


def matmul(A, B, p: int) -> np.ndarray:
    """A @ B over F_p without int64 overflow (accumulates in Python ints when needed)."""
    A = np.asarray(A, dtype=np.int64) % p
    B = np.asarray(B, dtype=np.int64) % p
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    # each product < 2**62; summing more than one could overflow, so reduce per term
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = (out + np.outer(A[:, k], B[k]) % p) % p
    return out


def random_invertible(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        M = rng.integers(0, p, size=(n, n), dtype=np.int64)
        if rank(M, p) == n:
            return M

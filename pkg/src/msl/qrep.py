"""Representations of the linearly oriented quivers Q+ (i -> i+1) and Q- (i -> i-1).

Closed forms for Hom/Ext between interval modules, plus an explicit
linear-algebra route used to check them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import modp
from .core import DimVector, Multisegment, Segment, grdim, precedes, sym_form


@dataclass(frozen=True)
class QuiverRep:
    """Graded space with one map of degree ``direction`` (+1 for Q+, -1 for Q-).

    ``maps[i]`` has shape ``(dims[i + direction], dims[i])``; missing keys are zero maps.
    ``basis[i]`` lists, for a direct sum of interval modules, which summand each
    basis vector at degree i belongs to.
    """

    dims: DimVector
    direction: int
    maps: dict[int, np.ndarray] = field(default_factory=dict)
    basis: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def map_at(self, i: int) -> np.ndarray:
        tgt = self.dims[i + self.direction]
        src = self.dims[i]
        M = self.maps.get(i)
        if M is None:
            return np.zeros((tgt, src), dtype=np.int64)
        return M


def _interval_sum(m: Multisegment, direction: int) -> QuiverRep:
    dims = grdim(m)
    basis = {i: tuple(k for k, s in enumerate(m) if s.a <= i <= s.b) for i in dims}
    maps = {}
    for i in dims:
        j = i + direction
        if j not in dims:
            continue
        M = np.zeros((dims[j], dims[i]), dtype=np.int64)
        for col, k in enumerate(basis[i]):
            s = m[k]
            # mu_+ : nonzero in degrees a..b-1 ; mu_- : nonzero in degrees a+1..b
            if s.a <= j <= s.b:
                M[basis[j].index(k), col] = 1
        maps[i] = M
    return QuiverRep(dims, direction, maps, basis)


def mu_plus(m: Multisegment) -> QuiverRep:
    return _interval_sum(m, +1)


def mu_minus(m: Multisegment) -> QuiverRep:
    return _interval_sum(m, -1)


# -- closed forms -------------------------------------------------------------------


def hom_qplus_segments(d: Segment, g: Segment) -> int:
    """dim Hom_{Q+}(mu_+(d), mu_+(g)) = 1 iff shift(g) ≺ d."""
    return int(precedes(g.shift(), d))


def ext1_qplus_segments(d: Segment, g: Segment) -> int:
    """dim Ext^1_{Q+}(mu_+(d), mu_+(g)) = 1 iff d ≺ g."""
    return int(precedes(d, g))


def hom_qplus(x: Multisegment, y: Multisegment) -> int:
    return sum(hom_qplus_segments(d, g) for d in x for g in y)


def ext1_qplus(x: Multisegment, y: Multisegment) -> int:
    return sum(ext1_qplus_segments(d, g) for d in x for g in y)


def alpha_plus(m: Multisegment, n: Multisegment) -> int:
    """Order of the Rankin-Selberg normalizing factor: hom_{Q+}(m, n) - ext1_{Q+}(n, m)."""
    return hom_qplus(m, n) - ext1_qplus(n, m)


def alpha_plus_segment_rule(d: Segment, d2: Segment) -> int:
    """Per-pair sign rule for the normalizing factor of two segments.

    The two cases are read as mutually exclusive: +1 when only shift(d2) ≺ d
    holds, -1 when only d2 ≺ d holds.
    """
    up = precedes(d2.shift(), d)
    down = precedes(d2, d)
    if up and not down:
        return 1
    if down and not up:
        return -1
    return 0


def alpha_plus_by_rule(m: Multisegment, n: Multisegment) -> int:
    return sum(alpha_plus_segment_rule(d, g) for d in m for g in n)


def alpha(m: Multisegment, n: Multisegment) -> int:
    """Vanishing order of the composed intertwining operator: -(grdim m, grdim n)."""
    return -sym_form(grdim(m), grdim(n))


# -- explicit linear algebra ---------------------------------------------------------


def intertwiner_matrix(dx, xmaps, dy, ymaps, s: int, p: int) -> tuple[np.ndarray, int]:
    """Linear map phi -> (Y_i phi_i - phi_{i+s} X_i)_i on graded families phi_i : V_i -> W_i.

    ``xmaps[i]`` is ``dx[i+s] x dx[i]``, likewise for y. Unknowns are the entries of
    the phi_i, row-major, in increasing degree. Returns the matrix (reduced mod p)
    and the number of unknowns.
    """
    offset, n_unknowns = {}, 0
    for i in sorted(set(dx) & set(dy)):
        offset[i] = n_unknowns
        n_unknowns += dy[i] * dx[i]
    blocks = []
    for i in sorted(dx):
        j = i + s
        di, ej = dx[i], dy[j]
        if not (di and ej):
            continue
        B = np.zeros((ej * di, n_unknowns), dtype=np.int64)
        if i in offset:
            Y = ymaps.get(i)
            if Y is not None:
                B[:, offset[i] : offset[i] + dy[i] * di] += np.kron(Y, np.eye(di, dtype=np.int64))
        if j in offset:
            X = xmaps.get(i)
            if X is not None:
                B[:, offset[j] : offset[j] + ej * dx[j]] -= np.kron(np.eye(ej, dtype=np.int64), X.T)
        blocks.append(B % p)
    if not blocks:
        return np.zeros((0, n_unknowns), dtype=np.int64), n_unknowns
    return np.vstack(blocks), n_unknowns


def _homotopy_map(x: QuiverRep, y: QuiverRep, p: int) -> tuple[np.ndarray, int]:
    if x.direction != y.direction:
        raise ValueError("representations of different quivers")
    return intertwiner_matrix(x.dims, x.maps, y.dims, y.maps, x.direction, p)


def hom_dim_explicit(x: QuiverRep, y: QuiverRep, p: int = modp.DEFAULT_PRIME) -> int:
    A, n_unknowns = _homotopy_map(x, y, p)
    return n_unknowns - modp.rank(A, p)


def ext1_dim_explicit(x: QuiverRep, y: QuiverRep, p: int = modp.DEFAULT_PRIME) -> int:
    """Cokernel of the standard two-term complex computing Hom and Ext^1 over a path algebra."""
    A, _ = _homotopy_map(x, y, p)
    return A.shape[0] - modp.rank(A, p)

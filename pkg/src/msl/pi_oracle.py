"""Randomized exact oracle for generic Hom/Ext between components C(m) of Lusztig's variety.

A point of Lambda(d) is a pair (S, T), S of degree +1 and T of degree -1, with
T_{i+1} S_i = S_{i-1} T_i at every coordinate. The component C(m) is the closure
of the conormal bundle to the orbit of mu_+(m); a generic point keeps S = mu_+(m)
and draws T uniformly from the linear fibre over it. All arithmetic is in F_p.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import modp
from .core import DimVector, Multisegment, Segment, grdim, serialize, sym_form
from .qrep import alpha_plus, intertwiner_matrix, mu_plus


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class SampleConfig:
    prime: int = modp.DEFAULT_PRIME
    samples: int = 8
    seed: int = 0

    def __post_init__(self):
        if self.prime <= 10**6 or self.prime >= 2**31 or not _is_prime(self.prime):
            raise ValueError(f"prime must be a prime in (10**6, 2**31), got {self.prime}")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")


DEFAULT_CONFIG = SampleConfig()


@dataclass(frozen=True, eq=False)
class PiModule:
    """A module over the preprojective algebra of type A_infinity, entries in F_p.

    ``S[i]`` : V_i -> V_{i+1} and ``T[i]`` : V_i -> V_{i-1}; missing keys are zero.
    ``source`` records the multisegment whose orbit S lies in, when known.
    """

    dims: DimVector
    S: dict[int, np.ndarray]
    T: dict[int, np.ndarray]
    prime: int
    source: Multisegment | None = field(default=None)

    def _get(self, maps, i, rows):
        M = maps.get(i)
        if M is None:
            return np.zeros((rows, self.dims[i]), dtype=np.int64)
        return M

    def s_map(self, i):
        return self._get(self.S, i, self.dims[i + 1])

    def t_map(self, i):
        return self._get(self.T, i, self.dims[i - 1])

    def moment_residual(self) -> int:
        """Number of nonzero entries of T_{i+1} S_i - S_{i-1} T_i over all i."""
        p = self.prime
        bad = 0
        for i in self.dims:
            lhs = modp.matmul(self.t_map(i + 1), self.s_map(i), p)
            rhs = modp.matmul(self.s_map(i - 1), self.t_map(i), p)
            bad += int(np.count_nonzero((lhs - rhs) % p))
        return bad

    def base_change(self, g: dict[int, np.ndarray]) -> "PiModule":
        """Conjugate by an invertible graded matrix family g (missing degrees: identity)."""
        p = self.prime
        inv = {i: _inverse_mod(M, p) for i, M in g.items()}

        def conj(maps, s):
            out = {}
            for i, M in maps.items():
                left = g.get(i + s)
                right = inv.get(i)
                X = M
                if right is not None:
                    X = modp.matmul(X, right, p)
                if left is not None:
                    X = modp.matmul(left, X, p)
                out[i] = X
            return out

        return PiModule(self.dims, conj(self.S, 1), conj(self.T, -1), p, self.source)


def _inverse_mod(M: np.ndarray, p: int) -> np.ndarray:
    n = M.shape[0]
    R, piv = modp.echelon(np.hstack([M % p, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular mod p")
    return R[:, n:]


# -- generic points ------------------------------------------------------------------


def _stable_hash(m: Multisegment) -> int:
    return int.from_bytes(hashlib.sha256(serialize(m).encode()).digest()[:8], "little")


@lru_cache(maxsize=4096)
def _fibre(m: Multisegment, p: int):
    """Basis of the T-fibre over S = mu_+(m): all T with T_{i+1} S_i = S_{i-1} T_i."""
    rep = mu_plus(m)
    d = rep.dims
    slots, n = {}, 0
    for i in sorted(d):
        if d[i - 1]:
            slots[i] = n
            n += d[i - 1] * d[i]
    blocks = []
    for i in sorted(d):
        di = d[i]
        B = np.zeros((di * di, n), dtype=np.int64)
        # T_{i+1} S_i : T_{i+1} is d_i x d_{i+1}
        if i + 1 in slots:
            S = rep.maps[i]
            B[:, slots[i + 1] : slots[i + 1] + di * d[i + 1]] += np.kron(np.eye(di, dtype=np.int64), S.T)
        # - S_{i-1} T_i : T_i is d_{i-1} x d_i
        if i in slots:
            S = rep.maps[i - 1]
            B[:, slots[i] : slots[i] + d[i - 1] * di] -= np.kron(S, np.eye(di, dtype=np.int64))
        blocks.append(B % p)
    A = np.vstack(blocks) if blocks else np.zeros((0, n), dtype=np.int64)
    basis = modp.nullspace(A, p) if n else np.zeros((0, 0), dtype=np.int64)
    return rep, slots, basis


def fibre_dimension(m: Multisegment, p: int = modp.DEFAULT_PRIME) -> int:
    return _fibre(m, p)[2].shape[1]


@lru_cache(maxsize=16384)
def generic_point(m: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG, draw_index: int = 0) -> PiModule:
    p = cfg.prime
    rep, slots, basis = _fibre(m, p)
    d = rep.dims
    rng = np.random.default_rng([cfg.seed % 2**64, _stable_hash(m), draw_index])
    k = basis.shape[1]
    if k:
        coeffs = rng.integers(0, p, size=k, dtype=np.int64)
        vec = modp.matmul(basis, coeffs[:, None], p)[:, 0]
    else:
        vec = np.zeros(basis.shape[0], dtype=np.int64)
    T = {}
    for i, off in slots.items():
        T[i] = vec[off : off + d[i - 1] * d[i]].reshape(d[i - 1], d[i])
    return PiModule(d, dict(rep.maps), T, p, m)


# -- Hom between points ------------------------------------------------------------


def hom_pi(x: PiModule, y: PiModule) -> int:
    """dim Hom_Pi(x, y): graded phi commuting with both S and T, by exact elimination."""
    if x.prime != y.prime:
        raise ValueError("modules over different fields")
    p = x.prime
    A_s, n = intertwiner_matrix(x.dims, x.S, y.dims, y.S, +1, p)
    A_t, _ = intertwiner_matrix(x.dims, x.T, y.dims, y.T, -1, p)
    if n == 0:
        return 0
    return n - modp.rank(np.vstack([A_s, A_t]), p)


@lru_cache(maxsize=4096)
def _qplus_hom_basis(m: Multisegment, n: Multisegment):
    """Explicit basis of Hom_{Q+}(mu_+(m), mu_+(n)).

    For segments [a,b] of m and [c,d] of n with c <= a <= d <= b, one basis map is the
    identity on the overlap degrees a..d between the two summands.
    Each element is a list of (degree, row, col) unit entries.
    """
    bm = mu_plus(m).basis
    bn = mu_plus(n).basis
    out = []
    for k, s in enumerate(m):
        for l, g in enumerate(n):
            if g.a <= s.a <= g.b <= s.b:
                out.append([(i, bn[i].index(l), bm[i].index(k)) for i in range(s.a, g.b + 1)])
    return out


def hom_pi_coxeter(x: PiModule, y: PiModule) -> int:
    """dim Hom_Pi(x, y) as the kernel of phi -> phi T - T' phi on Hom_{Q+}(x, y).

    Requires both modules to come from ``generic_point`` (S in mu_+ normal form).
    """
    if x.source is None or y.source is None:
        raise ValueError("hom_pi_coxeter needs modules with S = mu_+(m)")
    p = x.prime
    basis = _qplus_hom_basis(x.source, y.source)
    h = len(basis)
    if h == 0:
        return 0
    dx, dy = x.dims, y.dims
    rows = []
    for i in dx:
        j = i - 1
        if not dy[j]:
            continue
        # (phi_{i-1} T_i - T'_i phi_i) is e_{i-1} x d_i
        Tx = x.t_map(i)
        Ty = y.t_map(i) if dy[i] else None
        cols = np.zeros((dy[j] * dx[i], h), dtype=np.int64)
        for c, elem in enumerate(basis):
            M = np.zeros((dy[j], dx[i]), dtype=np.int64)
            for deg, r, q in elem:
                if deg == j:
                    M[r] += Tx[q]
                elif deg == i and Ty is not None:
                    M[:, q] -= Ty[:, r]
            cols[:, c] = (M % p).ravel()
        rows.append(cols)
    if not rows:
        return h
    return h - modp.rank(np.vstack(rows), p)


# -- generic dimensions over components -----------------------------------------------


@lru_cache(maxsize=65536)
def generic_hom(m: Multisegment, n: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG) -> int:
    """hom_Pi(C(m), C(n)): minimum of dim Hom over cfg.samples independent generic pairs."""
    if not m or not n:
        return 0
    floor = max(0, alpha_plus(m, n))  # the Coxeter cokernel has dimension >= 0
    best = None
    for k in range(cfg.samples):
        x = generic_point(m, cfg, 2 * k)
        y = generic_point(n, cfg, 2 * k + 1)
        h = hom_pi_coxeter(x, y)
        best = h if best is None else min(best, h)
        if best == floor:
            break
    return best


def generic_ext1(m: Multisegment, n: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG) -> int:
    """ext^1_Pi(C(m), C(n)) via the Crawley-Boevey identity."""
    return generic_hom(m, n, cfg) + generic_hom(n, m, cfg) - sym_form(grdim(m), grdim(n))


@lru_cache(maxsize=16384)
def ext1_diagonal(m: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG) -> int:
    """min over single generic points x of C(m) of dim Ext^1(x, x)."""
    if not m:
        return 0
    dd = sym_form(grdim(m), grdim(m))
    best = None
    for k in range(cfg.samples):
        x = generic_point(m, cfg, 2 * k)
        e = 2 * hom_pi_coxeter(x, x) - dd
        best = e if best is None else min(best, e)
        if best == 0:
            break
    return best


def coker_coxeter(m: Multisegment, n: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG) -> int:
    return generic_hom(m, n, cfg) - alpha_plus(m, n)


def is_rigid_component(m: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG) -> bool:
    return ext1_diagonal(m, cfg) == 0


def strongly_commute(m: Multisegment, n: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG) -> bool:
    return generic_ext1(m, n, cfg) == 0


def generic_qminus_multisegment(m: Multisegment, cfg: SampleConfig = DEFAULT_CONFIG, draw_index: int = 0) -> Multisegment:
    """Orbit type of the T-part of a generic point of C(m), read off from composite ranks.

    For a Q- representation, the number of interval summands [i, j] equals
    r(j,i) - r(j,i-1) - r(j+1,i) + r(j+1,i-1), where r(j,i) is the rank of the
    composite V_j -> V_i (r(j,j) = dim V_j).
    """
    x = generic_point(m, cfg, draw_index)
    p = cfg.prime
    d = x.dims
    if not d:
        return Multisegment()
    lo, hi = min(d), max(d)

    @lru_cache(maxsize=None)
    def composite(j, i):
        M = np.eye(d[j], dtype=np.int64)
        for t in range(j, i, -1):
            M = modp.matmul(x.t_map(t), M, p)
        return M

    def r(j, i):
        if i > j or not d[j] or not d[i]:
            return 0
        return modp.rank(composite(j, i), p) if i < j else d[j]

    segs = []
    for i in range(lo, hi + 1):
        for j in range(i, hi + 1):
            mult = r(j, i) - r(j, i - 1) - r(j + 1, i) + r(j + 1, i - 1)
            segs.extend([Segment(i, j)] * mult)
    return Multisegment(segs)

"""Rank-metric codes in vector representation over F_{q^m}.

A vector over the extension field expands, coordinate by coordinate, into an
m x n matrix of base-field digits; its rank weight is the rank of that
matrix.  The expansion basis defaults to the polynomial basis and is an
explicit argument so basis invariance can be tested rather than assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InconsistentInstanceError
from .field import FieldCtx
from .kernels import DEFAULT_BUDGET
from .matrixops import Matrix


class RankCode:
    """A k x n generator of full row rank over F_{q^m}, rank metric."""

    __slots__ = ("ctx", "G")

    def __init__(self, ctx: FieldCtx, G):
        Gm = G if isinstance(G, Matrix) else Matrix(ctx, G)
        if Gm.rows and Gm.rank() != Gm.rows:
            raise ValueError("generator matrix must have full row rank over F_{q^m}")
        self.ctx = ctx
        self.G = Gm

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    def __repr__(self):
        return f"RankCode(q={self.ctx.q}, m={self.ctx.m}, n={self.n}, k={self.k})"

    def parity_check(self) -> Matrix:
        return self.G.kernel_basis()

    def contains(self, x) -> bool:
        if self.k == 0:
            return not np.asarray(x).any()
        sol = self.G.transpose().solve(np.asarray(x, dtype=np.int64))
        return sol is not None


@dataclass
class RankSDPInstance:
    """Rank syndrome decoding instance over F_{q^m}."""

    H: Matrix
    s: np.ndarray
    w: int | None = None

    def __post_init__(self):
        self.s = np.asarray(self.s, dtype=np.int64)
        if self.s.shape != (self.H.rows,):
            raise ValueError("syndrome length must match the number of parity checks")

    @property
    def n(self) -> int:
        return self.H.cols


def polynomial_basis(ctx: FieldCtx) -> np.ndarray:
    """The canonical basis 1, g, ..., g^(m-1) as encoded elements."""
    return np.array([ctx.q**i for i in range(ctx.m)], dtype=np.int64)


def basis_change_matrix(ctx: FieldCtx, basis) -> Matrix:
    """m x m base-field matrix whose column i is the digit expansion of basis[i]."""
    basis = np.asarray(basis, dtype=np.int64)
    if basis.shape != (ctx.m,):
        raise ValueError(f"a basis of F_{ctx.q}^{ctx.m} needs exactly {ctx.m} elements")
    base = FieldCtx(ctx.q, 1)
    cols = np.column_stack([ctx.expand(int(b)) for b in basis])
    M = Matrix(base, cols)
    if M.rank() != ctx.m:
        raise ValueError("basis elements are not linearly independent over F_q")
    return M


def to_matrix(ctx: FieldCtx, x, basis=None) -> np.ndarray:
    """m x n digit matrix of x: column i holds the coordinates of x_i in the basis."""
    x = np.asarray(x, dtype=np.int64)
    digits = np.column_stack([ctx.expand(int(v)) for v in x]) if len(x) else np.zeros(
        (ctx.m, 0), dtype=np.int64
    )
    if basis is None:
        return digits
    B = basis_change_matrix(ctx, basis)
    out = np.zeros_like(digits)
    for i in range(digits.shape[1]):
        sol = B.solve(digits[:, i])
        assert sol is not None  # B is invertible
        out[:, i] = sol[0]
    return out


def rank_weight(ctx: FieldCtx, x, basis=None) -> int:
    """Rank over F_q of the expansion matrix of x; basis-independent in value."""
    if basis is None:
        return kernels.rank_of_values(ctx, np.asarray(x, dtype=np.int64))
    mat = to_matrix(ctx, x, basis)
    base = FieldCtx(ctx.q, 1)
    return Matrix(base, mat).rank()


def rank_distance(ctx: FieldCtx, x, y, basis=None) -> int:
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != y.shape:
        raise ValueError("vectors must have equal length")
    diff = np.array([ctx.sub(int(a), int(b)) for a, b in zip(x, y)], dtype=np.int64)
    return rank_weight(ctx, diff, basis)


def hamming_weight_ext(x) -> int:
    """Number of nonzero coordinates of a vector over the extension field."""
    return int(np.count_nonzero(np.asarray(x)))


def min_rank_distance(C: RankCode, budget: int = DEFAULT_BUDGET) -> tuple[int, np.ndarray]:
    """Exact minimum rank weight over nonzero codewords, with a witness.

    Enumerates one representative per projective class over F_{q^m}; rank
    weight is invariant under nonzero extension-field scalars.
    """
    if C.k < 1:
        raise ValueError("minimum rank distance of a zero-dimensional code is undefined")
    return kernels.min_rank_distance_enum(C.ctx, C.G.a, budget)


def min_rank_weight_coset(
    inst: RankSDPInstance, budget: int = DEFAULT_BUDGET
) -> tuple[int, np.ndarray]:
    """Minimum rank weight over {x : H x^T = s} plus one minimizer."""
    sol = inst.H.solve(inst.s)
    if sol is None:
        raise InconsistentInstanceError("syndrome is not in the column space of H")
    x0, K = sol
    return kernels.coset_min_rank_enum(inst.H.ctx, x0, K.a, budget)


def rank_weight_le(
    C: RankCode, w: int, budget: int = DEFAULT_BUDGET
) -> tuple[bool, np.ndarray | None]:
    """Exact decision: does C contain a nonzero codeword of rank weight <= w?

    Cost grows with the number of (n-w)-dimensional coordinate subspaces, not
    with q^m, so this stays feasible at extension degrees where projective
    enumeration cannot run.
    """
    if C.k == 0:
        return False, None
    return kernels.rank_le_decision(C.ctx, C.G.a, w, budget)


def coset_rank_weight_le(
    inst: RankSDPInstance, w: int, budget: int = DEFAULT_BUDGET
) -> tuple[bool, np.ndarray | None]:
    """Exact decision: does some x with H x^T = s have rank weight <= w?

    Returns (False, None) when the system is inconsistent.
    """
    sol = inst.H.solve(inst.s)
    if sol is None:
        return False, None
    x0, K = sol
    return kernels.coset_rank_le_decision(inst.H.ctx, x0, K.a, w, budget)


def min_hamming_distance_ext(C: RankCode) -> tuple[int, np.ndarray]:
    """Exact minimum Hamming distance of a code over F_{q^m}, with a witness.

    Scans coordinate supports in increasing size: a nonzero codeword with
    support inside S exists iff the generator columns outside S drop rank.
    Independent of any projective enumeration, and polynomial in 2^n.
    """
    if C.k < 1:
        raise ValueError("minimum distance of a zero-dimensional code is undefined")
    n = C.n
    for w in range(1, n + 1):
        for S in itertools.combinations(range(n), w):
            rest = [j for j in range(n) if j not in S]
            outside = C.G.take_cols(rest)
            if outside.cols == 0 or outside.rank() < C.k:
                # pull an explicit codeword supported inside S
                ker = outside.transpose().kernel_basis() if rest else Matrix.identity(
                    C.ctx, C.k
                )
                u = ker.a[0]
                word = np.array(
                    [_dot(C.ctx, u, C.G.a[:, j]) for j in range(n)], dtype=np.int64
                )
                assert hamming_weight_ext(word) == w
                return w, word
    raise AssertionError("unreachable: a nonzero code has a nonzero codeword")


def _dot(ctx: FieldCtx, u, col) -> int:
    acc = 0
    for a, b in zip(u, col):
        a, b = int(a), int(b)
        if a and b:
            acc = ctx.add(acc, ctx.mul(a, b))
    return acc

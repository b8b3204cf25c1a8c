"""F_q-linear codes with exact Hamming-metric oracles.

Minimum distance enumerates one representative per projective class (Hamming
weight is constant under nonzero scalar multiples); syndrome decoding
enumerates the full solution coset.  Both are exact and budgeted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, InconsistentInstanceError
from .field import FieldCtx
from .kernels import DEFAULT_BUDGET, projective_class_count
from .matrixops import Matrix


class LinearCode:
    """A k x n generator of full row rank over a prime field (ctx with m = 1)."""

    __slots__ = ("ctx", "G", "_H")

    def __init__(self, ctx: FieldCtx, G):
        if ctx.m != 1:
            raise ValueError("LinearCode lives over a prime field; use RankCode for m > 1")
        Gm = G if isinstance(G, Matrix) else Matrix(ctx, G)
        if Gm.rows and Gm.rank() != Gm.rows:
            raise ValueError("generator matrix must have full row rank")
        self.ctx = ctx
        self.G = Gm
        self._H: Matrix | None = None

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    def __repr__(self):
        return f"LinearCode(q={self.ctx.q}, n={self.n}, k={self.k})"

    def parity_check(self) -> Matrix:
        """An (n-k) x n matrix H with G @ H^T = 0 and rank n-k."""
        if self._H is None:
            self._H = self.G.kernel_basis()
        return self._H

    def dual(self) -> "LinearCode":
        return LinearCode(self.ctx, self.parity_check())

    def contains(self, x) -> bool:
        return not self.parity_check().mul_vec(x).any()

    def codewords(self) -> np.ndarray:
        """All q^k codewords, one per row (small k only)."""
        q, k = self.ctx.q, self.k
        msgs = _mixed_radix(q**k, k, q)
        return _mat_mod_mul(msgs, self.G.a, q, self.ctx)


@dataclass
class HammingSDPInstance:
    """Syndrome decoding instance: parity-check H, syndrome s, weight bound w."""

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

    @property
    def r(self) -> int:
        return self.H.rows


def _mixed_radix(count: int, width: int, q: int) -> np.ndarray:
    """Rows 0..count-1 written little-endian in base q, width digits."""
    idx = np.arange(count, dtype=np.int64)
    out = np.zeros((count, width), dtype=np.int64)
    for j in range(width):
        out[:, j] = (idx // q**j) % q
    return out


def _mat_mod_mul(A: np.ndarray, B: np.ndarray, q: int, ctx: FieldCtx) -> np.ndarray:
    # prime fields embed in the integers, so a plain matmul mod q is exact
    assert ctx.m == 1
    return (A @ B) % q


def min_hamming_distance_witness(
    C: LinearCode, budget: int = DEFAULT_BUDGET
) -> tuple[int, np.ndarray]:
    """Exact minimum distance and a minimum-weight codeword.

    Enumerates the (q^k - 1)/(q - 1) projective classes; among minimum-weight
    words the lexicographically smallest enumerated representative is returned.
    """
    if C.k < 1:
        raise ValueError("minimum distance of a zero-dimensional code is undefined")
    q, k = C.ctx.q, C.k
    classes = projective_class_count(q, k)
    if classes > budget:
        raise BudgetExceededError(classes, budget, "projective enumeration")
    best = C.n + 1
    wit = None
    for lead in range(k):
        t = k - lead - 1
        reps = np.zeros((q**t, k), dtype=np.int64)
        reps[:, lead] = 1
        if t:
            reps[:, lead + 1 :] = _mixed_radix(q**t, t, q)
        words = _mat_mod_mul(reps, C.G.a, q, C.ctx)
        weights = np.count_nonzero(words, axis=1)
        lo = int(weights.min())
        if lo <= best:
            cand = words[weights == lo]
            cand = cand[np.lexsort(cand.T[::-1])][0]
            if lo < best or tuple(cand) < tuple(wit):
                best, wit = lo, cand
    return best, np.array(wit, dtype=np.int64)


def min_hamming_distance(C: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    return min_hamming_distance_witness(C, budget)[0]


def min_weight_coset(
    inst: HammingSDPInstance, budget: int = DEFAULT_BUDGET
) -> tuple[int, np.ndarray]:
    """Minimum Hamming weight over {x : H x^T = s} plus one minimizer.

    Enumerates the full coset x0 + ker(H) of q^(n - rank H) candidates.
    Raises InconsistentInstanceError when the system has no solution.
    """
    ctx = inst.H.ctx
    sol = inst.H.solve(inst.s)
    if sol is None:
        raise InconsistentInstanceError("syndrome is not in the column space of H")
    x0, K = sol
    q = ctx.q
    count = q**K.rows
    if count > budget:
        raise BudgetExceededError(count, budget, "coset enumeration")
    coeffs = _mixed_radix(count, K.rows, q)
    X = (coeffs @ K.a + x0) % q
    weights = np.count_nonzero(X, axis=1)
    lo = int(weights.min())
    cand = X[weights == lo]
    cand = cand[np.lexsort(cand.T[::-1])][0]
    return lo, cand.astype(np.int64)


def shorten(C: LinearCode, j: int) -> LinearCode:
    """Code of words with x_j = 0, coordinate j dropped (0-based index).

    Realised by deleting column j of the parity-check matrix and taking the
    kernel of what remains, so it composes with column-removal searches.
    """
    if not 0 <= j < C.n:
        raise IndexError(f"column {j} out of range for length {C.n}")
    H = C.parity_check().delete_col(j)
    return code_from_parity(H)


def code_from_parity(H: Matrix) -> LinearCode:
    """The code {x : H x^T = 0} presented by a kernel-basis generator."""
    return LinearCode(H.ctx, H.kernel_basis())


def griesmer_holds(n: int, k: int, d: int, q: int) -> bool:
    """Check n >= sum_{i<k} ceil(d / q^i)."""
    if k < 1 or d < 1:
        raise ValueError("griesmer bound needs k >= 1 and d >= 1")
    return n >= sum(-(-d // q**i) for i in range(k))


def random_code(n: int, k: int, q: int, rng: np.random.Generator) -> LinearCode:
    """Uniform k x n generator, resampled until it has full row rank."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    ctx = FieldCtx(q, 1)
    while True:
        G = rng.integers(0, q, size=(k, n), dtype=np.int64)
        M = Matrix(ctx, G)
        if M.rank() == k:
            return LinearCode(ctx, M)


def random_consistent_instance(
    n: int, r: int, q: int, rng: np.random.Generator
) -> HammingSDPInstance:
    """Random r x n parity-check with a syndrome known to be attainable."""
    ctx = FieldCtx(q, 1)
    H = Matrix(ctx, rng.integers(0, q, size=(r, n), dtype=np.int64))
    x = rng.integers(0, q, size=n, dtype=np.int64)
    return HammingSDPInstance(H, H.mul_vec(x))

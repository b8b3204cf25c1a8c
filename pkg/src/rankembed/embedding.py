"""Coordinatewise-scaling embeddings of Hamming codes into rank codes.

A base-field vector x maps to (x_1 a_1, ..., x_n a_n) over F_{q^m} for a
scaling tuple a of nonzero extension-field elements; a Hamming code maps to
the F_{q^m}-row space of its generator with column j scaled by a_j.  The
embedded code keeps the dimension and the Hamming distance of the source,
never increases distances, and its dual is the embedding of the dual code
under the coordinatewise inverse tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError
from .field import FieldCtx
from .hamming import HammingSDPInstance, LinearCode, min_hamming_distance
from .kernels import DEFAULT_BUDGET, projective_class_count, rank_of_values
from .matrixops import Matrix
from .rank import RankCode, RankSDPInstance, hamming_weight_ext


def validate_alpha(ctx: FieldCtx, alpha) -> np.ndarray:
    """A scaling tuple must be coordinatewise nonzero so it can be inverted."""
    a = np.asarray(alpha, dtype=np.int64)
    if a.ndim != 1:
        raise ValueError("alpha must be a vector")
    if np.any(a <= 0) or np.any(a >= ctx.order):
        raise ValueError("alpha coordinates must be nonzero elements of F_{q^m}")
    return a


def sample_alpha(n: int, ctx: FieldCtx, rng: np.random.Generator) -> np.ndarray:
    """Scaling tuple with coordinates uniform over the nonzero elements."""
    return ctx.sample_vector(n, rng, nonzero=True)


def alpha_rank(ctx: FieldCtx, alpha) -> int:
    """Rank weight of the scaling tuple itself (its coordinate span dimension)."""
    return rank_of_values(ctx, np.asarray(alpha, dtype=np.int64))


def invert_alpha(ctx: FieldCtx, alpha) -> np.ndarray:
    a = validate_alpha(ctx, alpha)
    return np.array([ctx.inv(int(v)) for v in a], dtype=np.int64)


def scale_embed(ctx: FieldCtx, x, alpha) -> np.ndarray:
    """Map a base-field vector x to (x_1 a_1, ..., x_n a_n) over F_{q^m}."""
    x = np.asarray(x, dtype=np.int64)
    a = np.asarray(alpha, dtype=np.int64)
    if x.shape != a.shape:
        raise ValueError("vector and alpha must have equal length")
    return np.array([ctx.mul(int(xi), int(ai)) for xi, ai in zip(x, a)], dtype=np.int64)


@dataclass
class EmbeddedCode:
    source: LinearCode
    alpha: np.ndarray
    result: RankCode


def embed_code(C: LinearCode, ctx_ext: FieldCtx, alpha) -> EmbeddedCode:
    """The F_{q^m}-linear code generated by the scaled embedding of C.

    Its generator is C's generator with column j multiplied by alpha_j; since
    the embedding is F_q-linear, the row space over F_{q^m} of the scaled
    generator equals the span of the embedded codewords.
    """
    if ctx_ext.q != C.ctx.q:
        raise ValueError("extension field must share the base prime")
    a = validate_alpha(ctx_ext, alpha)
    if len(a) != C.n:
        raise ValueError("alpha length must equal the code length")
    G = np.zeros((C.k, C.n), dtype=np.int64)
    for i in range(C.k):
        for j in range(C.n):
            G[i, j] = ctx_ext.mul(int(C.G.a[i, j]), int(a[j]))
    return EmbeddedCode(C, a, RankCode(ctx_ext, G))


def dual_pair(
    C: LinearCode, ctx_ext: FieldCtx, alpha
) -> tuple[EmbeddedCode, EmbeddedCode]:
    """Embed C under alpha and its dual under the coordinatewise inverse.

    The two resulting generators are orthogonal over F_{q^m} and their
    dimensions add up to n, so the second embedding is the dual of the first.
    """
    primal = embed_code(C, ctx_ext, alpha)
    dual = embed_code(C.dual(), ctx_ext, invert_alpha(ctx_ext, alpha))
    return primal, dual


def transform_sdp(
    inst: HammingSDPInstance, ctx_ext: FieldCtx, beta
) -> RankSDPInstance:
    """Scale column j of the parity-check by beta_j; the syndrome lifts unchanged.

    If x solves the Hamming instance with weight w, then x scaled by the
    coordinatewise inverse of beta solves the rank instance with rank weight
    at most w.
    """
    if ctx_ext.q != inst.H.ctx.q:
        raise ValueError("extension field must share the base prime")
    b = validate_alpha(ctx_ext, beta)
    if len(b) != inst.n:
        raise ValueError("beta length must equal the instance length")
    H = np.zeros((inst.r, inst.n), dtype=np.int64)
    for i in range(inst.r):
        for j in range(inst.n):
            H[i, j] = ctx_ext.mul(int(inst.H.a[i, j]), int(b[j]))
    return RankSDPInstance(Matrix(ctx_ext, H), inst.s.astype(np.int64), inst.w)


def low_weight_structure_check(
    C: LinearCode,
    ctx_ext: FieldCtx,
    alpha,
    w: int,
    budget: int = DEFAULT_BUDGET,
    d_h: int | None = None,
) -> tuple[bool, np.ndarray | None]:
    """Verify that every embedded codeword of Hamming weight exactly w is a
    scalar multiple of an embedded source codeword.

    Holds whenever w < (q+1)/q * d_H(C).  Works support by support: the
    embedded words supported inside a w-set form a subspace found by linear
    algebra, and each projective representative of exact weight w is divided
    through by alpha and tested for membership in C up to a scalar.  Returns
    (True, None) or (False, counterexample word).
    """
    emb = embed_code(C, ctx_ext, alpha)
    q = C.ctx.q
    if d_h is None:
        d_h = min_hamming_distance(C)
    if not w * q < (q + 1) * d_h:
        raise ValueError(f"w={w} is not below (q+1)/q * d_H = {(q + 1) * d_h / q}")
    if w == 0:
        return True, None
    n = emb.result.n
    G = emb.result.G
    for S in itertools.combinations(range(n), w):
        rest = [j for j in range(n) if j not in S]
        outside = G.take_cols(rest) if rest else None
        if outside is None:
            sub = Matrix.identity(ctx_ext, C.k).mat_mul(G)
        else:
            ker = outside.transpose().kernel_basis()
            if ker.rows == 0:
                continue
            sub = ker.mat_mul(G)
        # sub rows generate the embedded words supported inside S
        dim = sub.rank()
        if dim == 0:
            continue
        sub = _row_space_basis(sub, dim)
        classes = projective_class_count(ctx_ext.order, dim)
        if classes > budget:
            raise BudgetExceededError(classes, budget, "subcode enumeration")
        for word in _projective_words(ctx_ext, sub):
            if hamming_weight_ext(word) != w:
                continue
            if not _is_scaled_source_word(C, ctx_ext, alpha, word):
                return False, word
    return True, None


def _row_space_basis(M: Matrix, dim: int) -> Matrix:
    R, rank, _ = M.rref()
    return Matrix(M.ctx, R.a[:rank])


def _projective_words(ctx: FieldCtx, G: Matrix):
    """One representative per projective class of the row space of G."""
    k, n = G.rows, G.cols
    Q = ctx.order
    for lead in range(k):
        t = k - lead - 1
        for coeffs in itertools.product(range(Q), repeat=t):
            word = G.a[lead].copy()
            for i, c in enumerate(coeffs):
                if c:
                    row = G.a[lead + 1 + i]
                    word = np.array(
                        [ctx.add(int(x), ctx.mul(c, int(y))) for x, y in zip(word, row)],
                        dtype=np.int64,
                    )
            yield word


def _is_scaled_source_word(C: LinearCode, ctx: FieldCtx, alpha, word) -> bool:
    """Is word = lambda * (x_1 a_1, ..., x_n a_n) for some x in C, lambda in F_Q?"""
    u = [ctx.mul(int(wj), ctx.inv(int(aj))) if wj else 0 for wj, aj in zip(word, alpha)]
    j0 = next((j for j, v in enumerate(u) if v), None)
    if j0 is None:
        return True  # the zero word is trivially scaled
    inv0 = ctx.inv(u[j0])
    x = np.zeros(len(u), dtype=np.int64)
    for j, v in enumerate(u):
        if v:
            ratio = ctx.mul(v, inv0)
            if not ctx.in_base_field(ratio):
                return False
            x[j] = ratio
    return C.contains(x % C.ctx.q)

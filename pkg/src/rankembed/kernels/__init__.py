"""Backend dispatch for the enumeration kernels.

Two interchangeable backends exist: a numba-compiled one specialised to
binary base fields (q = 2), and a pure-Python one that handles every prime
base and doubles as the reference implementation.  Selection:

    RANKEMBED_BACKEND=auto    numba for q = 2 when importable, else pure (default)
    RANKEMBED_BACKEND=numba   force numba for q = 2 (pure still serves q > 2)
    RANKEMBED_BACKEND=pure    pure everywhere

Every public function checks the candidate count against an explicit budget
first, so oracle calls fail loudly instead of hanging.
"""

from __future__ import annotations

import os

import numpy as np

from ..errors import BudgetExceededError
from ..field import FieldCtx
from . import _pure

DEFAULT_BUDGET = 1 << 22

_BACKEND = os.environ.get("RANKEMBED_BACKEND", "auto").lower()
if _BACKEND not in ("auto", "numba", "pure"):
    raise RuntimeError(f"RANKEMBED_BACKEND must be auto, numba or pure, not {_BACKEND!r}")

_numba_mod = None
if _BACKEND in ("auto", "numba"):
    try:
        from . import _numba as _numba_mod
    except ImportError:
        if _BACKEND == "numba":
            raise
        _numba_mod = None

rank_of_values = _pure.rank_of_values


def active_backend(q: int = 2) -> str:
    """Name of the backend that will run kernels for base field size q."""
    if q == 2 and _numba_mod is not None:
        return "numba"
    return "pure"


def _use_numba(ctx: FieldCtx) -> bool:
    return ctx.q == 2 and _numba_mod is not None


def projective_class_count(order: int, k: int) -> int:
    return (order**k - 1) // (order - 1)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _as_matrix(a) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=np.int64)
    if out.ndim != 2:
        raise ValueError("expected a 2-d array")
    return out


def min_rank_distance_enum(
    ctx: FieldCtx, G, budget: int = DEFAULT_BUDGET
) -> tuple[int, np.ndarray]:
    """Exact minimum rank weight over nonzero words of the row space of G.

    G must have full row rank over F_{q^m}.  Enumerates one representative per
    projective class; returns the minimum and the lexicographically smallest
    minimizing representative.
    """
    G = _as_matrix(G)
    k = G.shape[0]
    if k < 1:
        raise ValueError("zero-dimensional code has no nonzero codeword")
    classes = projective_class_count(ctx.order, k)
    if classes > budget:
        raise BudgetExceededError(classes, budget, "projective enumeration")
    if _use_numba(ctx):
        best, wit = _numba_mod.mrd_enum(G, ctx.m, ctx.modulus)
        return int(best), wit.copy()
    return _pure.min_rank_distance_enum(ctx, G)


def coset_min_rank_enum(
    ctx: FieldCtx, x0, basis, budget: int = DEFAULT_BUDGET
) -> tuple[int, np.ndarray]:
    """Exact minimum rank weight over x0 + F_Q-span(basis rows); includes x0 itself."""
    x0 = np.ascontiguousarray(x0, dtype=np.int64)
    basis = _as_matrix(basis) if len(basis) else np.zeros((0, len(x0)), dtype=np.int64)
    count = ctx.order ** basis.shape[0]
    if count > budget:
        raise BudgetExceededError(count, budget, "coset enumeration")
    if _use_numba(ctx):
        best, wit = _numba_mod.coset_enum(x0, basis, ctx.m, ctx.modulus)
        return int(best), wit.copy()
    return _pure.coset_min_rank_enum(ctx, x0, basis)


def rank_le_decision(
    ctx: FieldCtx, G, w: int, budget: int = DEFAULT_BUDGET
) -> tuple[bool, np.ndarray | None]:
    """Decide whether the row space of G holds a nonzero word of rank weight <= w.

    Exact for any extension degree: the search runs over coordinate-space
    subspaces, so its cost depends on (n, w, q) but not on q^m.  G must have
    full row rank.  Returns (answer, witness or None).
    """
    G = _as_matrix(G)
    k, n = G.shape
    if k == 0 or w <= 0:
        return False, None
    if w >= n:
        return True, G[0].copy()
    leaves = gaussian_binomial(n, n - w, ctx.q)
    if leaves > budget:
        raise BudgetExceededError(leaves, budget, "subspace enumeration")
    if _use_numba(ctx):
        found, wit = _numba_mod.rank_le_dfs(G, ctx.m, ctx.modulus, w)
        return (True, wit.copy()) if found else (False, None)
    return _pure.rank_le_decision(ctx, G, w)


def coset_rank_le_decision(
    ctx: FieldCtx, x0, basis, w: int, budget: int = DEFAULT_BUDGET
) -> tuple[bool, np.ndarray | None]:
    """Decide whether x0 + F_Q-span(basis rows) holds a vector of rank weight <= w."""
    x0 = np.ascontiguousarray(x0, dtype=np.int64)
    n = len(x0)
    basis = _as_matrix(basis) if len(basis) else np.zeros((0, n), dtype=np.int64)
    if w < 0:
        return False, None
    if w >= n:
        return True, x0.copy()
    leaves = gaussian_binomial(n, n - w, ctx.q)
    if leaves > budget:
        raise BudgetExceededError(leaves, budget, "subspace enumeration")
    if _use_numba(ctx):
        found, wit = _numba_mod.coset_rank_le_dfs(x0, basis, ctx.m, ctx.modulus, w)
        return (True, wit.copy()) if found else (False, None)
    return _pure.coset_rank_le_decision(ctx, x0, basis, w)


def warmup() -> None:
    """Precompile the numba kernels (no-op on the pure backend)."""
    if _numba_mod is not None:
        _numba_mod.warmup()

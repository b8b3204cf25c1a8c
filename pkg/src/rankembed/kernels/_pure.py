"""Pure-Python reference implementations of the enumeration kernels.

These handle any prime base field and mirror the numba kernels bit for bit
on q = 2: same enumeration order, same pivot choices, same lexicographic
tie-breaks, so the two backends are interchangeable and cross-checkable.
Hot paths should go through the numba backend; this one is the correctness
reference and the fallback selected by RANKEMBED_BACKEND=pure.
"""

from __future__ import annotations

import numpy as np

from ..field import FieldCtx, _decode_digits


def rank_of_values(ctx: FieldCtx, vals) -> int:
    """Rank over F_q of the m x n digit-expansion matrix of the given values."""
    q, m = ctx.q, ctx.m
    if q == 2:
        piv = [0] * m
        r = 0
        for v in vals:
            v = int(v)
            while v:
                b = v.bit_length() - 1
                if piv[b] == 0:
                    piv[b] = v
                    r += 1
                    break
                v ^= piv[b]
        return r
    pivots: dict[int, list[int]] = {}
    r = 0
    for v in vals:
        d = _decode_digits(int(v), q, m)
        i = m - 1
        while i >= 0:
            if d[i]:
                if i in pivots:
                    c = d[i]
                    pv = pivots[i]
                    d = [(x - c * y) % q for x, y in zip(d, pv)]
                else:
                    ci = pow(d[i], q - 2, q)
                    pivots[i] = [(x * ci) % q for x in d]
                    r += 1
                    break
            i -= 1
    return r


def _scale_row(ctx, c, row):
    if c == 0:
        return [0] * len(row)
    if c == 1:
        return list(row)
    return [ctx.mul(c, x) for x in row]


def _add_rows(ctx, a, b):
    return [ctx.add(x, y) for x, y in zip(a, b)]


def min_rank_distance_enum(ctx: FieldCtx, G: np.ndarray) -> tuple[int, np.ndarray]:
    """Minimum rank weight over nonzero codewords of the row space of G.

    Enumerates one representative per projective class: leading coefficient 1,
    free coefficients running through F_Q in integer order.
    """
    k, n = G.shape
    Q = ctx.order
    best = ctx.m + n + 1
    wit: list[int] | None = None
    for lead in range(k):
        t = k - lead - 1
        base = [int(x) for x in G[lead]]
        coeffs = [0] * t
        while True:
            cur = list(base)
            for i in range(t):
                c = coeffs[i]
                if c:
                    cur = _add_rows(ctx, cur, _scale_row(ctx, c, [int(x) for x in G[lead + 1 + i]]))
            r = rank_of_values(ctx, cur)
            if r < best or (r == best and cur < wit):
                best = r
                wit = cur
            pos = 0
            while pos < t and coeffs[pos] == Q - 1:
                coeffs[pos] = 0
                pos += 1
            if pos == t:
                break
            coeffs[pos] += 1
    assert wit is not None
    return best, np.array(wit, dtype=np.int64)


def coset_min_rank_enum(ctx: FieldCtx, x0, basis: np.ndarray) -> tuple[int, np.ndarray]:
    """Minimum rank weight over the affine space x0 + F_Q-span of basis rows."""
    ell, n = basis.shape
    Q = ctx.order
    base = [int(x) for x in x0]
    best = ctx.m + n + 1
    wit: list[int] | None = None
    coeffs = [0] * ell
    while True:
        cur = list(base)
        for i in range(ell):
            c = coeffs[i]
            if c:
                cur = _add_rows(ctx, cur, _scale_row(ctx, c, [int(x) for x in basis[i]]))
        r = rank_of_values(ctx, cur)
        if r < best or (r == best and cur < wit):
            best = r
            wit = cur
        pos = 0
        while pos < ell and coeffs[pos] == Q - 1:
            coeffs[pos] = 0
            pos += 1
        if pos == ell:
            break
        coeffs[pos] += 1
    assert wit is not None
    return best, np.array(wit, dtype=np.int64)


def _dot(ctx, row, v, n):
    acc = 0
    for j in range(n):
        if v[j]:
            acc = ctx.add(acc, row[j] if v[j] == 1 else ctx.mul(v[j], row[j]))
    return acc


def rank_le_decision(ctx: FieldCtx, G: np.ndarray, w: int) -> tuple[bool, np.ndarray | None]:
    """Does the row space of G contain a nonzero word of rank weight <= w?

    Searches over the (n-w)-dimensional F_q-subspaces K of coordinate space,
    in canonical echelon form with pivots chosen in decreasing position, for
    one annihilated by some nonzero codeword.  A codeword orthogonal to such
    a K has an expansion kernel of dimension >= n-w, hence rank <= w.  Dead
    branches (empty subcode) are pruned as soon as they appear.
    """
    k0, n = G.shape
    q = ctx.q
    t = n - w
    S0 = [[int(x) for x in row] for row in G]
    if t <= 0:
        return True, np.array(S0[0], dtype=np.int64)
    found: list[int] | None = None

    def constrain(S, v):
        c = [_dot(ctx, row, v, n) for row in S]
        rsel = -1
        for i, ci in enumerate(c):
            if ci:
                rsel = i
                break
        if rsel < 0:
            return S
        out = []
        cr = c[rsel]
        prow = S[rsel]
        for i, row in enumerate(S):
            if i == rsel:
                continue
            if c[i] == 0:
                out.append(row)
            else:
                ci = c[i]
                out.append([ctx.sub(ctx.mul(cr, x), ctx.mul(ci, y)) for x, y in zip(row, prow)])
        return out

    def dfs(S, depth, prev_pivot, used):
        nonlocal found
        lo = t - depth - 1
        for p in range(prev_pivot - 1, lo - 1, -1):
            free = [pos for pos in range(p + 1, n) if pos not in used]
            for fval in range(q ** len(free)):
                v = [0] * n
                v[p] = 1
                x = fval
                for pos in free:
                    x, d = divmod(x, q)
                    v[pos] = d
                S2 = constrain(S, v)
                if not S2:
                    continue
                if depth + 1 == t:
                    found = S2[0]
                    return True
                used.add(p)
                if dfs(S2, depth + 1, p, used):
                    return True
                used.discard(p)
        return False

    ok = dfs(S0, 0, n, set())
    return ok, (np.array(found, dtype=np.int64) if ok else None)


def coset_rank_le_decision(
    ctx: FieldCtx, x0, basis: np.ndarray, w: int
) -> tuple[bool, np.ndarray | None]:
    """Does x0 + F_Q-span(basis rows) contain a vector of rank weight <= w?

    Same subspace search as rank_le_decision, but against an affine solution
    space: the state per branch is a particular point plus a direction space.
    """
    ell, n = basis.shape
    q = ctx.q
    t = n - w
    P0 = [int(x) for x in x0]
    D0 = [[int(x) for x in row] for row in basis]
    found: list[int] | None = None

    def constrain(P, D, v):
        cp = _dot(ctx, P, v, n)
        c = [_dot(ctx, row, v, n) for row in D]
        rsel = -1
        for i, ci in enumerate(c):
            if ci:
                rsel = i
                break
        if rsel < 0:
            if cp != 0:
                return None
            return P, D
        cr = c[rsel]
        prow = D[rsel]
        coefp = ctx.div(cp, cr)
        P2 = [ctx.sub(x, ctx.mul(coefp, y)) for x, y in zip(P, prow)]
        D2 = []
        for i, row in enumerate(D):
            if i == rsel:
                continue
            if c[i] == 0:
                D2.append(row)
            else:
                ci = c[i]
                D2.append([ctx.sub(ctx.mul(cr, x), ctx.mul(ci, y)) for x, y in zip(row, prow)])
        return P2, D2

    def dfs(P, D, depth, prev_pivot, used):
        nonlocal found
        if depth == t:
            found = P
            return True
        lo = t - depth - 1
        for p in range(prev_pivot - 1, lo - 1, -1):
            free = [pos for pos in range(p + 1, n) if pos not in used]
            for fval in range(q ** len(free)):
                v = [0] * n
                v[p] = 1
                x = fval
                for pos in free:
                    x, d = divmod(x, q)
                    v[pos] = d
                nxt = constrain(P, D, v)
                if nxt is None:
                    continue
                used.add(p)
                if dfs(nxt[0], nxt[1], depth + 1, p, used):
                    return True
                used.discard(p)
        return False

    if t == 0:
        return True, np.array(P0, dtype=np.int64)
    ok = dfs(P0, D0, 0, n, set())
    return ok, (np.array(found, dtype=np.int64) if ok else None)

"""Numba-compiled kernels for extension fields with binary base (q = 2).

Field elements are int64 bit vectors: bit i is the coefficient of g^i in the
polynomial basis, so F_2-expansion is free and vector ranks reduce to bit
elimination.  Enumeration walks a plain binary counter; the bits that flip
between consecutive counter values tell exactly which precomputed row
multiples to XOR into the running codeword, so the inner loop does no field
multiplication at all.

Mirrors kernels._pure on q = 2: identical orders, pivots and tie-breaks.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _mul(a, b, m, mod):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> m) & 1:
            a ^= mod
    return r


@njit(cache=True)
def _inv(a, m, mod):
    # Fermat: a^(2^m - 2); a must be nonzero.
    e = (np.int64(1) << m) - 2
    r = np.int64(1)
    base = a
    while e:
        if e & 1:
            r = _mul(r, base, m, mod)
        base = _mul(base, base, m, mod)
        e >>= 1
    return r


@njit(cache=True)
def _rank_vals(vals, n, m):
    # rank over F_2 of the m x n matrix whose column i is the bits of vals[i]
    piv = np.zeros(m, np.int64)
    r = 0
    for i in range(n):
        v = vals[i]
        if v == 0:
            continue
        b = m - 1
        while True:
            while ((v >> b) & 1) == 0:
                b -= 1
            if piv[b] == 0:
                piv[b] = v
                r += 1
                break
            v ^= piv[b]
            if v == 0:
                break
    return r


@njit(cache=True)
def mrd_enum(G, m, mod):
    """(min rank weight, lexicographically smallest minimizing codeword)."""
    k, n = G.shape
    Q = np.int64(1) << m
    best = m + n + 1
    wit = np.zeros(n, np.int64)
    acc = np.zeros(n, np.int64)
    cur = np.zeros(n, np.int64)
    for lead in range(k):
        t = k - lead - 1
        B = np.zeros((t * m, n), np.int64)
        for i in range(t):
            for col in range(n):
                v = G[lead + 1 + i, col]
                for p in range(m):
                    B[i * m + p, col] = v
                    v <<= 1
                    if (v >> m) & 1:
                        v ^= mod
        total = np.int64(1)
        for _ in range(t):
            total *= Q
        for col in range(n):
            acc[col] = 0
        j = np.int64(0)
        while True:
            for col in range(n):
                cur[col] = G[lead, col] ^ acc[col]
            r = _rank_vals(cur, n, m)
            better = False
            if r < best:
                better = True
            elif r == best:
                for col in range(n):
                    if cur[col] != wit[col]:
                        better = cur[col] < wit[col]
                        break
            if better:
                best = r
                for col in range(n):
                    wit[col] = cur[col]
            j += 1
            if j >= total:
                break
            flips = j ^ (j - 1)
            b = 0
            while flips:
                if flips & 1:
                    for col in range(n):
                        acc[col] ^= B[b, col]
                flips >>= 1
                b += 1
    return best, wit


@njit(cache=True)
def coset_enum(x0, basis, m, mod):
    """(min rank weight, lex smallest minimizer) over x0 + F_Q-span of basis rows."""
    ell, n = basis.shape
    Q = np.int64(1) << m
    best = m + n + 1
    wit = np.zeros(n, np.int64)
    cur = np.zeros(n, np.int64)
    B = np.zeros((ell * m, n), np.int64)
    for i in range(ell):
        for col in range(n):
            v = basis[i, col]
            for p in range(m):
                B[i * m + p, col] = v
                v <<= 1
                if (v >> m) & 1:
                    v ^= mod
    total = np.int64(1)
    for _ in range(ell):
        total *= Q
    for col in range(n):
        cur[col] = x0[col]
    j = np.int64(0)
    while True:
        r = _rank_vals(cur, n, m)
        better = False
        if r < best:
            better = True
        elif r == best:
            for col in range(n):
                if cur[col] != wit[col]:
                    better = cur[col] < wit[col]
                    break
        if better:
            best = r
            for col in range(n):
                wit[col] = cur[col]
        j += 1
        if j >= total:
            break
        flips = j ^ (j - 1)
        b = 0
        while flips:
            if flips & 1:
                for col in range(n):
                    cur[col] ^= B[b, col]
            flips >>= 1
            b += 1
    return best, wit


@njit(cache=True)
def rank_le_dfs(G, m, mod, w):
    """1 if the row space of G holds a nonzero word of rank weight <= w, else 0.

    Depth-first search over echelon bases (pivots strictly decreasing) of the
    (n-w)-dimensional coordinate subspaces, carrying the subcode of codewords
    orthogonal to the partial basis and pruning branches whose subcode dies.
    """
    k0, n = G.shape
    t = n - w
    S = np.zeros((t + 1, k0, n), np.int64)
    dims = np.zeros(t + 1, np.int64)
    for i in range(k0):
        for col in range(n):
            S[0, i, col] = G[i, col]
    dims[0] = k0
    pivs = np.zeros(t, np.int64)
    pvals = np.zeros(t, np.int64)
    fvals = np.zeros(t, np.int64)
    fcnts = np.zeros(t, np.int64)
    c = np.zeros(k0, np.int64)
    wit = np.zeros(n, np.int64)
    d = 0
    pvals[0] = n - 1
    fvals[0] = -1
    fcnts[0] = 0
    while True:
        # next candidate (pivot, free assignment) at this depth
        advanced = False
        while pvals[d] >= t - d - 1:
            fvals[d] += 1
            if fvals[d] < (np.int64(1) << fcnts[d]):
                advanced = True
                break
            pvals[d] -= 1
            fvals[d] = -1
            if pvals[d] >= t - d - 1:
                fcnts[d] = n - 1 - pvals[d] - d
        if not advanced:
            d -= 1
            if d < 0:
                return 0, wit
            continue
        p = pvals[d]
        v = np.int64(1) << p
        fb = 0
        fval = fvals[d]
        for pos in range(p + 1, n):
            used = False
            for i in range(d):
                if pivs[i] == pos:
                    used = True
                    break
            if not used:
                if (fval >> fb) & 1:
                    v |= np.int64(1) << pos
                fb += 1
        dim = dims[d]
        rsel = -1
        for i in range(dim):
            acc = np.int64(0)
            for col in range(n):
                if (v >> col) & 1:
                    acc ^= S[d, i, col]
            c[i] = acc
            if acc != 0 and rsel < 0:
                rsel = i
        if rsel < 0:
            for i in range(dim):
                for col in range(n):
                    S[d + 1, i, col] = S[d, i, col]
            dims[d + 1] = dim
        else:
            out = 0
            cr = c[rsel]
            for i in range(dim):
                if i == rsel:
                    continue
                if c[i] == 0:
                    for col in range(n):
                        S[d + 1, out, col] = S[d, i, col]
                else:
                    ci = c[i]
                    for col in range(n):
                        S[d + 1, out, col] = _mul(cr, S[d, i, col], m, mod) ^ _mul(
                            ci, S[d, rsel, col], m, mod
                        )
                out += 1
            dims[d + 1] = dim - 1
        if dims[d + 1] == 0:
            continue
        if d + 1 == t:
            for col in range(n):
                wit[col] = S[d + 1, 0, col]
            return 1, wit
        pivs[d] = p
        d += 1
        pvals[d] = pivs[d - 1] - 1
        fvals[d] = -1
        fcnts[d] = n - 1 - pvals[d] - d


@njit(cache=True)
def coset_rank_le_dfs(x0, basis, m, mod, w):
    """1 if x0 + F_Q-span(basis rows) holds a vector of rank weight <= w, else 0.

    Affine twin of rank_le_dfs: the branch state is a particular point plus a
    direction space; a branch dies when a constraint is unsatisfiable.
    """
    ell, n = basis.shape
    t = n - w
    P = np.zeros((t + 1, n), np.int64)
    D = np.zeros((t + 1, ell, n), np.int64)
    dims = np.zeros(t + 1, np.int64)
    for col in range(n):
        P[0, col] = x0[col]
    for i in range(ell):
        for col in range(n):
            D[0, i, col] = basis[i, col]
    dims[0] = ell
    pivs = np.zeros(t + 1, np.int64)
    pvals = np.zeros(t + 1, np.int64)
    fvals = np.zeros(t + 1, np.int64)
    fcnts = np.zeros(t + 1, np.int64)
    c = np.zeros(ell + 1, np.int64)
    wit = np.zeros(n, np.int64)
    if t == 0:
        for col in range(n):
            wit[col] = x0[col]
        return 1, wit
    d = 0
    pvals[0] = n - 1
    fvals[0] = -1
    fcnts[0] = 0
    while True:
        advanced = False
        while pvals[d] >= t - d - 1:
            fvals[d] += 1
            if fvals[d] < (np.int64(1) << fcnts[d]):
                advanced = True
                break
            pvals[d] -= 1
            fvals[d] = -1
            if pvals[d] >= t - d - 1:
                fcnts[d] = n - 1 - pvals[d] - d
        if not advanced:
            d -= 1
            if d < 0:
                return 0, wit
            continue
        p = pvals[d]
        v = np.int64(1) << p
        fb = 0
        fval = fvals[d]
        for pos in range(p + 1, n):
            used = False
            for i in range(d):
                if pivs[i] == pos:
                    used = True
                    break
            if not used:
                if (fval >> fb) & 1:
                    v |= np.int64(1) << pos
                fb += 1
        dim = dims[d]
        cp = np.int64(0)
        for col in range(n):
            if (v >> col) & 1:
                cp ^= P[d, col]
        rsel = -1
        for i in range(dim):
            acc = np.int64(0)
            for col in range(n):
                if (v >> col) & 1:
                    acc ^= D[d, i, col]
            c[i] = acc
            if acc != 0 and rsel < 0:
                rsel = i
        if rsel < 0:
            if cp != 0:
                continue
            for col in range(n):
                P[d + 1, col] = P[d, col]
            for i in range(dim):
                for col in range(n):
                    D[d + 1, i, col] = D[d, i, col]
            dims[d + 1] = dim
        else:
            cr = c[rsel]
            inv_cr = _inv(cr, m, mod)
            coefp = _mul(cp, inv_cr, m, mod)
            for col in range(n):
                P[d + 1, col] = P[d, col] ^ _mul(coefp, D[d, rsel, col], m, mod)
            out = 0
            for i in range(dim):
                if i == rsel:
                    continue
                if c[i] == 0:
                    for col in range(n):
                        D[d + 1, out, col] = D[d, i, col]
                else:
                    ci = c[i]
                    for col in range(n):
                        D[d + 1, out, col] = _mul(cr, D[d, i, col], m, mod) ^ _mul(
                            ci, D[d, rsel, col], m, mod
                        )
                out += 1
            dims[d + 1] = dim - 1
        if d + 1 == t:
            for col in range(n):
                wit[col] = P[d + 1, col]
            return 1, wit
        pivs[d] = p
        d += 1
        pvals[d] = pivs[d - 1] - 1
        fvals[d] = -1
        fcnts[d] = n - 1 - pvals[d] - d


def warmup():
    """Trigger JIT compilation of every kernel on micro inputs."""
    G = np.array([[1, 2], [2, 3]], dtype=np.int64)
    mrd_enum(G, 3, 11, )
    coset_enum(np.array([1, 0], dtype=np.int64), G, 3, 11)
    rank_le_dfs(G, 3, 11, 1)
    coset_rank_le_dfs(np.array([1, 0], dtype=np.int64), G, 3, 11, 1)

"""Dense matrix arithmetic and Gaussian elimination over any FieldCtx.

Matrices are immutable in spirit: every operation allocates a fresh result.
Entries are integer-encoded field elements stored in an int64 numpy array.
Sizes here are desk scale, so elimination is plain and deterministic: the
pivot is always the first nonzero entry scanning top to bottom.
"""

from __future__ import annotations

import numpy as np

from .field import FieldCtx


class Matrix:
    __slots__ = ("ctx", "a")

    def __init__(self, ctx: FieldCtx, entries):
        self.ctx = ctx
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {a.shape}")
        self.a = a

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "Matrix":
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "Matrix":
        return cls(ctx, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ctx == other.ctx
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self):
        return f"Matrix({self.ctx!r}, {self.a.tolist()!r})"

    def copy(self) -> "Matrix":
        return Matrix(self.ctx, self.a.copy())

    def transpose(self) -> "Matrix":
        return Matrix(self.ctx, self.a.T.copy())

    def hstack(self, other: "Matrix") -> "Matrix":
        if other.rows != self.rows:
            raise ValueError("row counts differ")
        return Matrix(self.ctx, np.hstack([self.a, other.a]))

    def delete_col(self, j: int) -> "Matrix":
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range for {self.cols} columns")
        return Matrix(self.ctx, np.delete(self.a, j, axis=1))

    def take_cols(self, idx) -> "Matrix":
        return Matrix(self.ctx, self.a[:, list(idx)].copy())

    def mat_mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.cols} vs {other.rows}")
        ctx = self.ctx
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        for i in range(self.rows):
            for j in range(other.cols):
                acc = 0
                for t in range(self.cols):
                    x = int(self.a[i, t])
                    y = int(other.a[t, j])
                    if x and y:
                        acc = ctx.add(acc, ctx.mul(x, y))
                out[i, j] = acc
        return Matrix(ctx, out)

    def mul_vec(self, v) -> np.ndarray:
        """Matrix times column vector, returned as a 1-d array."""
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.cols,):
            raise ValueError(f"expected vector of length {self.cols}")
        ctx = self.ctx
        out = np.zeros(self.rows, dtype=np.int64)
        for i in range(self.rows):
            acc = 0
            for t in range(self.cols):
                x = int(self.a[i, t])
                y = int(v[t])
                if x and y:
                    acc = ctx.add(acc, ctx.mul(x, y))
            out[i] = acc
        return out

    def is_zero(self) -> bool:
        return not self.a.any()

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["Matrix", int, tuple[int, ...]]:
        """Reduced row-echelon form; returns (matrix, rank, pivot columns)."""
        ctx = self.ctx
        M = [[int(x) for x in row] for row in self.a]
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            sel = -1
            for i in range(r, rows):
                if M[i][c] != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            M[r], M[sel] = M[sel], M[r]
            inv = ctx.inv(M[r][c])
            if inv != 1:
                M[r] = [ctx.mul(inv, x) for x in M[r]]
            for i in range(rows):
                if i != r and M[i][c] != 0:
                    f = M[i][c]
                    M[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(M[i], M[r])]
            pivots.append(c)
            r += 1
        out = Matrix(ctx, np.array(M, dtype=np.int64).reshape(rows, cols))
        return out, r, tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def kernel_basis(self) -> "Matrix":
        """Rows form a basis of {v : self @ v^T = 0}; shape (cols - rank) x cols."""
        ctx = self.ctx
        R, rank, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in set(pivots)]
        basis = np.zeros((len(free), self.cols), dtype=np.int64)
        for bi, f in enumerate(free):
            basis[bi, f] = 1
            for ri, p in enumerate(pivots):
                basis[bi, p] = ctx.neg(int(R.a[ri, f]))
        return Matrix(ctx, basis)

    def solve(self, b) -> tuple[np.ndarray, "Matrix"] | None:
        """Solve self @ x^T = b.

        Returns (particular solution, kernel basis matrix) when the system is
        consistent, None otherwise.
        """
        b = np.asarray(b, dtype=np.int64)
        if b.shape != (self.rows,):
            raise ValueError(f"expected right-hand side of length {self.rows}")
        aug = Matrix(self.ctx, np.hstack([self.a, b.reshape(-1, 1)]))
        R, rank, pivots = aug.rref()
        if pivots and pivots[-1] == self.cols:
            return None
        x0 = np.zeros(self.cols, dtype=np.int64)
        for ri, p in enumerate(pivots):
            x0[p] = R.a[ri, self.cols]
        return x0, self.kernel_basis()

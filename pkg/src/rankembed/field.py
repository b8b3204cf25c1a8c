"""Exact arithmetic in F_q (q prime) and its degree-m extension F_{q^m}.

An element of F_{q^m} is encoded as a single integer in [0, q^m) whose
little-endian base-q digits are the coefficients of its residue polynomial
in the polynomial basis {1, g, ..., g^(m-1)}, where g is the class of x
modulo the field's irreducible modulus.  The modulus itself uses the same
encoding with the leading coefficient included, so it lies in [q^m, 2*q^m).
"""

from __future__ import annotations

import functools

import numpy as np

# Keep q^m strictly below 2^62 so every encoded value (and every intermediate
# in the bit-level binary multiply) fits comfortably in int64.
MAX_ORDER = 1 << 62


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_2, polynomials encoded as ints (bit i = coeff i)


def _bin_mulmod(a: int, b: int, mod: int, m: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> m) & 1:
            a ^= mod
    return r


def _bin_polymod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _bin_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _bin_polymod(a, b)
    return a


def _bin_irreducible(f: int, m: int) -> bool:
    if m == 1:
        return True
    # Rabin's test: x^(2^m) == x mod f and gcd(x^(2^(m/p)) - x, f) == 1
    # for every prime p dividing m.
    checkpoints = {m // p for p in _prime_factors(m)}
    t = 2
    found = {}
    for i in range(1, m + 1):
        t = _bin_mulmod(t, t, f, m)
        if i in checkpoints:
            found[i] = t
    if t != 2:
        return False
    for ti in found.values():
        if _bin_gcd(f, ti ^ 2) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_q, polynomials as little-endian digit tuples


def _poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mulmod(a: list[int], b: list[int], f: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % q
    return _poly_rem(prod, f, q)


def _poly_rem(a: list[int], f: list[int], q: int) -> list[int]:
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], q - 2, q)
    for t in range(len(a) - 1, df - 1, -1):
        c = a[t]
        if c:
            c = (c * inv_lead) % q
            for j in range(df + 1):
                a[t - df + j] = (a[t - df + j] - c * f[j]) % q
    del a[df:]
    return _poly_trim(a)


def _poly_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = list(a), list(b)
    while _poly_trim(b):
        a, b = b, _poly_rem(a, b, q)
    return _poly_trim(a)


def _poly_irreducible(f: list[int], q: int, m: int) -> bool:
    if m == 1:
        return True
    checkpoints = {m // p for p in _prime_factors(m)}
    x = [0, 1]
    t = x
    found = {}
    for i in range(1, m + 1):
        # t <- t^q mod f by square and multiply
        acc = [1]
        base = t
        e = q
        while e:
            if e & 1:
                acc = _poly_mulmod(acc, base, f, q)
            base = _poly_mulmod(base, base, f, q)
            e >>= 1
        t = acc
        if i in checkpoints:
            found[i] = t
    if _poly_trim(list(t)) != x:
        return False
    for ti in found.values():
        diff = list(ti) + [0] * (2 - len(ti))
        diff[1] = (diff[1] - 1) % q
        if len(_poly_gcd(f, diff, q)) != 1:
            return False
    return True


def _encode_digits(digits: list[int], q: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * q + d
    return v


def _decode_digits(v: int, q: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        v, d = divmod(v, q)
        out.append(d)
    return out


@functools.lru_cache(maxsize=None)
def find_modulus(q: int, m: int) -> int:
    """Smallest (by integer encoding) monic irreducible degree-m polynomial over F_q."""
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    qm = q**m
    if qm >= MAX_ORDER:
        raise ValueError(f"field order q^m = {qm} exceeds the supported limit 2^62")
    for c in range(qm):
        enc = qm + c
        if q == 2:
            if _bin_irreducible(enc, m):
                return enc
        else:
            if _poly_irreducible(_decode_digits(enc, q, m + 1), q, m):
                return enc
    raise AssertionError("no irreducible polynomial found (unreachable)")


class FieldCtx:
    """Arithmetic context for F_{q^m}, immutable after construction.

    All scalar operations take and return plain integer encodings.  The
    context is safe to share across threads; it holds no mutable state.
    """

    __slots__ = ("q", "m", "modulus", "order", "_mod_digits")

    def __init__(self, q: int, m: int, modulus: int | None = None):
        if not is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        order = q**m
        if order >= MAX_ORDER:
            raise ValueError(f"field order q^m = {order} exceeds the supported limit 2^62")
        if modulus is None:
            modulus = find_modulus(q, m)
        else:
            if not (order <= modulus < 2 * order):
                raise ValueError("modulus is not monic of degree m")
            digits = _decode_digits(modulus, q, m + 1)
            ok = _bin_irreducible(modulus, m) if q == 2 else _poly_irreducible(digits, q, m)
            if not ok:
                raise ValueError(f"modulus {modulus} is reducible over F_{q}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_mod_digits", tuple(_decode_digits(modulus, q, m + 1)))

    def __setattr__(self, name, value):
        raise AttributeError("FieldCtx is immutable")

    def __repr__(self):
        return f"FieldCtx(q={self.q}, m={self.m}, modulus={self.modulus})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.q, self.m, self.modulus) == (other.q, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.q, self.m, self.modulus))

    # -- scalar operations --------------------------------------------------

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of F_{self.q}^{self.m}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return int(a) ^ int(b)
        q = self.q
        out = 0
        mul = 1
        a, b = int(a), int(b)
        for _ in range(self.m):
            a, da = divmod(a, q)
            b, db = divmod(b, q)
            out += ((da + db) % q) * mul
            mul *= q
        return out

    def neg(self, a: int) -> int:
        if self.q == 2:
            return int(a)
        q = self.q
        out = 0
        mul = 1
        a = int(a)
        for _ in range(self.m):
            a, da = divmod(a, q)
            out += ((-da) % q) * mul
            mul *= q
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        a, b = int(a), int(b)
        if self.q == 2:
            return _bin_mulmod(a, b, self.modulus, self.m)
        q, m = self.q, self.m
        da = _decode_digits(a, q, m)
        db = _decode_digits(b, q, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % q
        # reduce by the monic modulus
        md = self._mod_digits
        for t in range(2 * m - 2, m - 1, -1):
            c = prod[t]
            if c:
                for j in range(m + 1):
                    prod[t - m + j] = (prod[t - m + j] - c * md[j]) % q
        return _encode_digits(prod[:m], q)

    def pow(self, a: int, e: int) -> int:
        a = int(a)
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        base = a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        a = int(a)
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.q}^{self.m}")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- coefficient expansion ----------------------------------------------

    def expand(self, a: int) -> np.ndarray:
        """Little-endian base-q digit column of a, length m."""
        return np.array(_decode_digits(int(a), self.q, self.m), dtype=np.int64)

    def from_digits(self, digits) -> int:
        ds = [int(d) % self.q for d in digits]
        if len(ds) != self.m:
            raise ValueError(f"expected {self.m} digits, got {len(ds)}")
        return _encode_digits(ds, self.q)

    def in_base_field(self, a: int) -> bool:
        return 0 <= int(a) < self.q

    def elements(self):
        return range(self.order)

    # -- sampling -------------------------------------------------------------

    def sample_uniform(self, rng: np.random.Generator) -> int:
        return int(rng.integers(0, self.order))

    def sample_nonzero(self, rng: np.random.Generator) -> int:
        return int(rng.integers(1, self.order))

    def sample_vector(self, n: int, rng: np.random.Generator, nonzero: bool = False) -> np.ndarray:
        lo = 1 if nonzero else 0
        return rng.integers(lo, self.order, size=n, dtype=np.int64)

"""Exact and modular arithmetic on elements a + b*sqrt(R) of Z[sqrt(R)].

Representing sqrt(R) as the pair (0, 1) keeps every computation in integer
arithmetic; no irrational numbers ever appear.  A `RingCtx` fixes R and an
optional odd modulus N; with a modulus, both components of every result are
kept canonical in [0, N).

Reduction modulo numbers of the form 2^m + 1 (and 2^q - 1) has a dedicated
shift-and-fold path, cross-checked against plain division in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


@dataclass(frozen=True)
class QuadInt:
    """The element a + b*sqrt(R); R is carried by the RingCtx, not the value."""

    a: int
    b: int


ZERO = QuadInt(0, 0)
ONE = QuadInt(1, 0)
SQRT = QuadInt(0, 1)


def fermat_form_exponent(n: int) -> int | None:
    """Return m if n == 2^m + 1 with m >= 1, else None."""
    if n < 3:
        return None
    m = (n - 1).bit_length() - 1
    return m if (1 << m) + 1 == n else None


def fermat_mod(x: int, m: int) -> int:
    """x mod (2^m + 1) by folding: x1*2^m + x0 == x0 - x1 (mod 2^m + 1).

    Two or three folds suffice for any product of canonical residues; no
    division is performed.  Accepts negative x.
    """
    neg = x < 0
    if neg:
        x = -x
    mask = (1 << m) - 1
    while x.bit_length() > m:
        lo = x & mask
        hi = x >> m
        if lo >= hi:
            x = lo - hi
        else:
            x = hi - lo
            neg = not neg
    if neg and x:
        return ((1 << m) + 1) - x
    return x


def mersenne_mod(x: int, q: int) -> int:
    """x mod (2^q - 1) by folding: x1*2^q + x0 == x0 + x1 (mod 2^q - 1)."""
    M = (1 << q) - 1
    if x < 0:
        x %= M
    while x.bit_length() > q:
        x = (x & M) + (x >> q)
    return 0 if x == M else x


def make_reducer(N: int):
    """Scalar reduction mod N, taking the fold path when N = 2^m + 1."""
    m = fermat_form_exponent(N)
    if m is None:
        return lambda x: x % N
    return lambda x: fermat_mod(x, m)


def balanced_residue(r: int, N: int) -> int:
    """Map a canonical residue to its representative in (-N/2, N/2]."""
    return r - N if r > N // 2 else r


class RingCtx:
    """R plus an optional odd modulus N >= 3; all ring ops take a ctx."""

    __slots__ = ("R", "modulus", "_reduce")

    def __init__(self, R: int, modulus: int | None = None):
        if R <= 0 or is_perfect_square(R):
            raise ValueError(f"R must be a positive non-square, got {R}")
        if modulus is not None:
            if modulus < 3 or modulus % 2 == 0:
                raise ValueError(f"modulus must be an odd integer >= 3, got {modulus}")
        self.R = R
        self.modulus = modulus
        self._reduce = make_reducer(modulus) if modulus is not None else None

    def reduce_scalar(self, x: int) -> int:
        return self._reduce(x) if self._reduce is not None else x

    def reduce(self, x: QuadInt) -> QuadInt:
        if self._reduce is None:
            return x
        return QuadInt(self._reduce(x.a), self._reduce(x.b))

    def __repr__(self) -> str:
        if self.modulus is None:
            return f"RingCtx(R={self.R})"
        return f"RingCtx(R={self.R}, modulus={self.modulus})"


def qadd(ctx: RingCtx, x: QuadInt, y: QuadInt) -> QuadInt:
    return ctx.reduce(QuadInt(x.a + y.a, x.b + y.b))


def qsub(ctx: RingCtx, x: QuadInt, y: QuadInt) -> QuadInt:
    return ctx.reduce(QuadInt(x.a - y.a, x.b - y.b))


def qneg(ctx: RingCtx, x: QuadInt) -> QuadInt:
    return ctx.reduce(QuadInt(-x.a, -x.b))


def qmul(ctx: RingCtx, x: QuadInt, y: QuadInt) -> QuadInt:
    # (a + b*sqrt(R))(c + d*sqrt(R)) = (ac + bdR) + (ad + bc)*sqrt(R)
    return ctx.reduce(QuadInt(x.a * y.a + x.b * y.b * ctx.R, x.a * y.b + x.b * y.a))


def qscale(ctx: RingCtx, k: int, x: QuadInt) -> QuadInt:
    return ctx.reduce(QuadInt(k * x.a, k * x.b))


def qpow(ctx: RingCtx, x: QuadInt, e: int) -> QuadInt:
    if e < 0:
        raise ValueError("negative exponents are not supported")
    result = ONE
    base = ctx.reduce(x)
    while e:
        if e & 1:
            result = qmul(ctx, result, base)
        base = qmul(ctx, base, base)
        e >>= 1
    return result


def half_mod(N: int, x: QuadInt) -> QuadInt:
    """The y with 2y == x (mod N), componentwise; N must be odd."""
    if N % 2 == 0:
        raise ValueError(f"halving needs an odd modulus, got {N}")
    inv2 = (N + 1) // 2
    return QuadInt(x.a * inv2 % N, x.b * inv2 % N)

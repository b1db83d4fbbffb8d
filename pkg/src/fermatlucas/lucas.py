"""Lucas sequences for P = sqrt(R) and their integer Lehmer normalizations.

U and V obey X_{n+1} = P*X_n - Q*X_{n-1} with U_0 = 0, U_1 = 1, V_0 = 2,
V_1 = P.  With P = sqrt(R) the raw terms live in Z[sqrt(R)] and alternate
between pure integers and pure sqrt(R)-multiples; dividing the radical
component out gives the always-integer pair

    u_bar(n) = U_n / sqrt(R)  if n even, else U_n
    v_bar(n) = V_n            if n even, else V_n / sqrt(R)

Exact evaluation iterates the recurrence in the ring (bounded index);
modular evaluation works directly on the integer pair with fast doubling,
O(log n) multiplications, so indices like 2^16384 are routine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .quadratic import (
    ONE,
    SQRT,
    ZERO,
    QuadInt,
    RingCtx,
    is_perfect_square,
    make_reducer,
    qadd,
    qmul,
    qpow,
    qscale,
    qsub,
)

# Exact values grow geometrically (~1.13 bits per index for R=7); the cap
# keeps exact mode comfortably in memory.  Modular mode has no cap.
EXACT_INDEX_CAP = 10_000


class ParityMismatchError(ValueError):
    """A component that the index parity forces to zero was nonzero."""


@dataclass(frozen=True)
class LucasParams:
    """The pair (R, Q) defining a sequence; the discriminant is D = R - 4Q."""

    R: int
    Q: int

    def __post_init__(self):
        if self.R <= 0 or is_perfect_square(self.R):
            raise ValueError(f"R must be a positive non-square, got {self.R}")
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if math.gcd(self.R, self.Q) != 1:
            raise ValueError(f"R and Q must be coprime, got ({self.R}, {self.Q})")
        if self.R - 4 * self.Q == 0:
            raise ValueError("discriminant R - 4Q must be nonzero")

    @property
    def D(self) -> int:
        return self.R - 4 * self.Q


#: Parameters whose V-sequence at indices 2^(k+1) is the seed-5 squaring chain.
STANDARD_PARAMS = LucasParams(7, 1)
#: The companion parameter choice; related to the standard one by a parity swap.
ALTERNATE_PARAMS = LucasParams(3, -1)


@dataclass(frozen=True)
class LehmerPair:
    """The normalized integer pair (u_bar, v_bar) at one index."""

    index: int
    u_bar: int
    v_bar: int


def uv_exact(params: LucasParams, n: int) -> tuple[QuadInt, QuadInt]:
    """Exact (U_n, V_n) as ring elements; n is capped at EXACT_INDEX_CAP."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if n > EXACT_INDEX_CAP:
        raise ValueError(f"exact evaluation is capped at index {EXACT_INDEX_CAP}, got {n}")
    ctx = RingCtx(params.R)
    u, v = ZERO, QuadInt(2, 0)
    if n == 0:
        return u, v
    u1, v1 = ONE, SQRT
    for _ in range(n - 1):
        u, u1 = u1, qsub(ctx, qmul(ctx, SQRT, u1), qscale(ctx, params.Q, u))
        v, v1 = v1, qsub(ctx, qmul(ctx, SQRT, v1), qscale(ctx, params.Q, v))
    return u1, v1


def normalize(params: LucasParams, n: int, U: QuadInt, V: QuadInt) -> LehmerPair:
    """Strip the radical per index parity, yielding the integer pair.

    Raises ParityMismatchError when the component that must vanish does not;
    that signals (U, V) are not really the index-n terms.
    """
    if n % 2 == 0:
        # U_n is a pure sqrt(R) multiple, V_n a pure integer.
        if U.a != 0 or V.b != 0:
            raise ParityMismatchError(
                f"index {n} is even: U must be a sqrt({params.R}) multiple and V an integer"
            )
        return LehmerPair(n, U.b, V.a)
    if U.b != 0 or V.a != 0:
        raise ParityMismatchError(
            f"index {n} is odd: U must be an integer and V a sqrt({params.R}) multiple"
        )
    return LehmerPair(n, U.a, V.b)


def lehmer_pairs_exact(params: LucasParams, max_index: int) -> list[LehmerPair]:
    """Normalized exact pairs for indices 0..max_index in one pass."""
    if max_index < 0:
        raise ValueError(f"max_index must be >= 0, got {max_index}")
    if max_index > EXACT_INDEX_CAP:
        raise ValueError(f"exact evaluation is capped at index {EXACT_INDEX_CAP}")
    out = []
    for n, u, v in _iter_uv_exact(params, max_index):
        out.append(normalize(params, n, u, v))
    return out


def _iter_uv_exact(params: LucasParams, max_index: int) -> Iterator[tuple[int, QuadInt, QuadInt]]:
    ctx = RingCtx(params.R)
    u, v = ZERO, QuadInt(2, 0)
    yield 0, u, v
    if max_index == 0:
        return
    u1, v1 = ONE, SQRT
    yield 1, u1, v1
    for n in range(2, max_index + 1):
        u, u1 = u1, qsub(ctx, qmul(ctx, SQRT, u1), qscale(ctx, params.Q, u))
        v, v1 = v1, qsub(ctx, qmul(ctx, SQRT, v1), qscale(ctx, params.Q, v))
        yield n, u1, v1


def iter_pairs(params: LucasParams, modulus: int | None = None) -> Iterator[LehmerPair]:
    """Yield the normalized pair at 0, 1, 2, ... by first-order stepping.

    The radical never appears: stepping k -> k+1 multiplies by R on the side
    the parity of k dictates,

        u_bar(k+1) = (R if k even else 1) * u_bar(k) - Q * u_bar(k-1)
        v_bar(k+1) = (1 if k even else R) * v_bar(k) - Q * v_bar(k-1)

    Works for any modulus >= 2 (or exactly when modulus is None), two
    multiplications per step.
    """
    R, Q = params.R, params.Q
    if modulus is not None:
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        R %= modulus
        Q %= modulus
    up, vp = 0, 2  # index 0
    u, v = 1, 1    # index 1
    if modulus is not None:
        up, vp, u, v = up % modulus, vp % modulus, u % modulus, v % modulus
    yield LehmerPair(0, up, vp)
    k = 1
    while True:
        yield LehmerPair(k, u, v)
        if k % 2 == 0:
            un, vn = R * u - Q * up, v - Q * vp
        else:
            un, vn = u - Q * up, R * v - Q * vp
        if modulus is not None:
            un %= modulus
            vn %= modulus
        up, vp, u, v = u, v, un, vn
        k += 1


def uv_mod(params: LucasParams, n: int, N: int) -> LehmerPair:
    """(u_bar(n), v_bar(n)) mod N by binary fast doubling.

    N must be odd (halving uses the inverse of 2) and coprime to Q.  The
    doubling step is u(2k) = u(k)*v(k) and v(2k) = c*v(k)^2 - 2*Q^k with
    c = R for odd k, 1 for even k; the +1 step halves (R*u + v, D*u + v).
    """
    if N < 3 or N % 2 == 0:
        raise ValueError(f"modulus must be an odd integer >= 3, got {N}")
    if math.gcd(N, params.Q) != 1:
        raise ValueError(f"modulus {N} shares a factor with Q = {params.Q}")
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    red = make_reducer(N)
    if n == 0:
        return LehmerPair(0, 0, red(2))
    R, Q, D = params.R, params.Q, params.D
    half = (N + 1) >> 1
    unit_q = abs(Q) == 1  # Q^k is just a sign; skip the modular bookkeeping
    u, v = red(1), red(1)
    k_odd = True
    qk = Q if unit_q else red(Q)
    for bit in bin(n)[3:]:
        u, v = red(u * v), red((R * v * v if k_odd else v * v) - 2 * qk)
        qk = 1 if unit_q else red(qk * qk)
        k_odd = False
        if bit == "1":
            u, v = red((R * u + v) * half), red((D * u + v) * half)
            qk = qk * Q if unit_q else red(qk * Q)
            k_odd = True
    return LehmerPair(n, u, v)


def s_from_v(params: LucasParams, k: int, N: int) -> int:
    """v_bar at index 2^(k+1) mod N: term k of the seed-5 squaring chain.

    Requires the standard (7, 1) parameters.  Odd moduli go through fast
    doubling; an even modulus falls back to the exact value (so k is then
    limited by the exact-index cap).
    """
    if (params.R, params.Q) != (7, 1):
        raise ValueError("the squaring-chain bridge holds only for parameters (7, 1)")
    if k < 0:
        raise ValueError(f"chain index must be >= 0, got {k}")
    if N < 2:
        raise ValueError(f"modulus must be >= 2, got {N}")
    index = 1 << (k + 1)
    if N % 2 == 1:
        return uv_mod(params, index, N).v_bar
    U, V = uv_exact(params, index)
    return normalize(params, index, U, V).v_bar % N


def check_sum_identity_u(params: LucasParams, m: int, n: int) -> bool:
    """Exactly verify 2^(m-1) U_{mn} = sum_i C(m,2i+1) D^i U_n^(2i+1) V_n^(m-2i-1)."""
    return _check_sum_identity(params, m, n, odd_side=True)


def check_sum_identity_v(params: LucasParams, m: int, n: int) -> bool:
    """Exactly verify 2^(m-1) V_{mn} = sum_i C(m,2i) D^i U_n^(2i) V_n^(m-2i)."""
    return _check_sum_identity(params, m, n, odd_side=False)


def _check_sum_identity(params: LucasParams, m: int, n: int, odd_side: bool) -> bool:
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if m * n > EXACT_INDEX_CAP:
        raise ValueError(f"m*n exceeds the exact-index cap {EXACT_INDEX_CAP}")
    ctx = RingCtx(params.R)
    Un, Vn = uv_exact(params, n)
    Umn, Vmn = uv_exact(params, m * n)
    lhs = qscale(ctx, 1 << (m - 1), Umn if odd_side else Vmn)
    total = ZERO
    for i in range(m // 2 + 1):
        k = 2 * i + 1 if odd_side else 2 * i
        c = math.comb(m, k)
        if c == 0:
            continue  # C(m, m+1) term: present in the formal sum, zero here
        term = qmul(ctx, qpow(ctx, Un, k), qpow(ctx, Vn, m - k))
        total = qadd(ctx, total, qscale(ctx, c * params.D**i, term))
    return lhs == total


def gcd_uv(params: LucasParams, n: int) -> int:
    """gcd(u_bar(n), v_bar(n)); it divides 2*Q^n."""
    U, V = uv_exact(params, n)
    pair = normalize(params, n, U, V)
    return math.gcd(pair.u_bar, pair.v_bar)


def alternate_params_pair(n: int, pairs: Sequence[LehmerPair]) -> LehmerPair:
    """Pair at index n for the (3, -1) parameters, built from (7, 1) pairs.

    Even indices carry over unchanged; odd indices swap u_bar and v_bar.
    `pairs` must contain index n (any order, extras ignored).
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    for p in pairs:
        if p.index == n:
            if n % 2:
                return LehmerPair(n, p.v_bar, p.u_bar)
            return LehmerPair(n, p.u_bar, p.v_bar)
    raise ValueError(f"no pair with index {n} supplied")

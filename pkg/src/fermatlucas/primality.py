"""Primality tests for Fermat numbers and the rank-of-apparition machinery.

The headline test: F_n = 2^(2^n) + 1 (n >= 1) is prime exactly when it
divides the last term of the chain S_0 = 5, S_i = S_{i-1}^2 - 2, i.e. when
S_{2^n - 2} == 0 (mod F_n).  Everything else here either proves pieces of
that statement at small scale (congruence and rank checks on the Lehmer
pair) or serves as an independent oracle (Pepin, trial division, the
classical Mersenne squaring chain).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lucas import LucasParams, uv_mod
from .quadratic import fermat_mod, mersenne_mod
from .symbols import jacobi

# Full traces are only kept for small indices; 2^n - 1 residues of 2^n bits
# each get out of hand quickly.
TRACE_INDEX_LIMIT = 6

RANK_SEARCH_CAP = 10**6

PROVEN_SEED = 5


class InconclusiveError(Exception):
    """The rank certificate neither proved nor refuted primality."""


class FermatNumber:
    """F = 2^(2^n) + 1 for an index n >= 1."""

    __slots__ = ("n", "value")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"Fermat index must be >= 1, got {n}")
        self.n = n
        self.value = (1 << (1 << n)) + 1

    def __repr__(self) -> str:
        return f"FermatNumber(n={self.n})"


@dataclass(frozen=True)
class SSequenceTrace:
    """Squaring-chain residues mod F_n; `residues` is kept only when traced."""

    n: int
    seed: int
    final: int
    residues: tuple[int, ...] | None = None


@dataclass(frozen=True)
class RankResult:
    """omega = least k >= 1 with m | u_bar(k), or None if not found below cap."""

    m: int
    omega: int | None
    cap: int


@dataclass(frozen=True)
class Verdict:
    classification: str  # "prime" | "composite"
    method: str          # "llt-fermat" | "pepin" | "llt-mersenne" | "rank-certificate" | "trial-division"
    witness: int | None = None
    proven: bool = True

    @property
    def is_prime(self) -> bool:
        return self.classification == "prime"


@dataclass(frozen=True)
class ResidueCheck:
    name: str
    index: int
    expected: int
    actual: int
    passed: bool


@dataclass(frozen=True)
class CongruenceReport:
    p: int
    params: LucasParams
    epsilon: int
    sigma: int
    tau: int
    checks: tuple[ResidueCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def s_sequence(n: int, keep_trace: bool = False, seed: int = PROVEN_SEED) -> SSequenceTrace:
    """Run S_0 = seed, S_i = S_{i-1}^2 - 2 for 2^n - 2 steps mod F_n.

    Without `keep_trace` only the final residue is retained, so memory stays
    constant (one residue of 2^n bits) no matter how large n is.  Tracing is
    limited to n <= TRACE_INDEX_LIMIT.
    """
    if keep_trace and n > TRACE_INDEX_LIMIT:
        raise ValueError(f"tracing is limited to n <= {TRACE_INDEX_LIMIT}, got {n}")
    fermat = FermatNumber(n)
    e = 1 << n  # F_n = 2^e + 1
    s = seed % fermat.value
    trace = [s] if keep_trace else None
    for _ in range(e - 2):
        s = fermat_mod(s * s - 2, e)
        if trace is not None:
            trace.append(s)
    return SSequenceTrace(n, seed, s, tuple(trace) if trace is not None else None)


def fermat_llt(n: int, seed: int = PROVEN_SEED, experimental: bool = False) -> Verdict:
    """Classify F_n by the squaring chain: prime iff the final residue is 0.

    Only seed 5 carries a proof; any other seed (including the historical 6)
    needs experimental=True and yields an unproven verdict.
    """
    if seed != PROVEN_SEED and not experimental:
        raise ValueError(
            f"seed {seed} has no correctness proof; pass experimental=True to run it anyway"
        )
    proven = seed == PROVEN_SEED
    final = s_sequence(n, seed=seed).final
    if final == 0:
        return Verdict("prime", "llt-fermat", proven=proven)
    return Verdict("composite", "llt-fermat", witness=final, proven=proven)


def pepin(n: int) -> Verdict:
    """Independent oracle: F_n is prime iff 3^((F_n-1)/2) == -1 (mod F_n)."""
    F = FermatNumber(n).value
    r = pow(3, (F - 1) >> 1, F)
    if r == F - 1:
        return Verdict("prime", "pepin")
    return Verdict("composite", "pepin", witness=r)


def mersenne_llt(q: int) -> Verdict:
    """Classical squaring chain for M_q = 2^q - 1: seed 4, q - 2 steps."""
    if q < 3 or q % 2 == 0 or not is_prime(q):
        raise ValueError(f"exponent must be an odd prime, got {q}")
    s = 4
    for _ in range(q - 2):
        s = mersenne_mod(s * s - 2, q)
    if s == 0:
        return Verdict("prime", "llt-mersenne")
    return Verdict("composite", "llt-mersenne", witness=s)


def trial_division(N: int, bound: int | None = None) -> int | None:
    """Smallest prime factor of N that is <= bound, or None.

    The default bound is isqrt(N), which decides primality.  None only means
    no factor up to the bound; it is not a primality claim for other bounds.
    """
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    if bound is None:
        bound = math.isqrt(N)
    for d in (2, 3):
        if d > bound:
            return None
        if N % d == 0:
            return d
    d = 5
    while d <= bound and d * d <= N:
        if N % d == 0:
            return d
        if N % (d + 2) == 0 and d + 2 <= bound:
            return d + 2
        d += 6
    if d * d > N and N <= bound:
        return N  # N itself is prime and within the bound
    return None


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; intended for small n."""
    if n < 2:
        return False
    return trial_division(n) is None


def rank_of_apparition(params: LucasParams, m: int, cap: int = RANK_SEARCH_CAP) -> RankResult:
    """Least k >= 1 with m | u_bar(k), searched index by index up to cap.

    Requires gcd(m, Q) = 1, which guarantees the rank exists (the cap is a
    resource bound, not a theory bound).  Stepping needs every index, so a
    first-order recurrence beats fast doubling here.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if math.gcd(m, params.Q) != 1:
        raise ValueError(f"m = {m} shares a factor with Q = {params.Q}")
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    R, Q = params.R % m, params.Q % m
    u_prev, u = 0, 1 % m
    for k in range(1, cap + 1):
        if u == 0:
            return RankResult(m, k, cap)
        if k % 2 == 0:
            u_prev, u = u, (R * u - Q * u_prev) % m
        else:
            u_prev, u = u, (u - Q * u_prev) % m
    return RankResult(m, None, cap)


def certify_via_rank(
    params: LucasParams, N: int, factors: tuple[int, ...] | None = None
) -> Verdict:
    """Primality certificate from the rank of apparition, N - 1 branch.

    N is prime if u_bar(N-1) == 0 and u_bar((N-1)/q) != 0 mod N for every
    distinct prime q | N - 1: the rank is then exactly N - 1, which forces
    primality.  `factors` lists those primes; omitted, it is inferred only
    when N - 1 is a power of two (the Fermat case).

    A nonzero u_bar(N-1) refutes primality only when sigma*epsilon = +1
    (otherwise a prime N need not have rank dividing N - 1); failing that,
    or when some (N-1)/q check collapses, InconclusiveError is raised.
    """
    if N < 3:
        raise ValueError(f"N must be >= 3, got {N}")
    if math.gcd(N, 2 * params.Q * params.R * params.D) != 1:
        raise ValueError(f"N = {N} shares a factor with 2*Q*R*D")
    if factors is None:
        if (N - 1) & (N - 2) == 0:  # N - 1 is a power of two
            factors = (2,)
        else:
            raise ValueError("N - 1 is not a power of two; supply its distinct prime factors")
    remaining = N - 1
    for q in set(factors):
        if q < 2 or (N - 1) % q != 0:
            raise ValueError(f"{q} is not a divisor of N - 1")
        while remaining % q == 0:
            remaining //= q
    if remaining != 1:
        raise ValueError("supplied factors do not cover N - 1 completely")

    u_top = uv_mod(params, N - 1, N).u_bar
    if u_top != 0:
        if jacobi(params.R, N) * jacobi(params.D, N) == 1:
            return Verdict("composite", "rank-certificate", witness=u_top)
        raise InconclusiveError(
            f"u_bar(N-1) = {u_top} != 0 but sigma*epsilon != +1: no conclusion for N = {N}"
        )
    for q in sorted(set(factors)):
        if uv_mod(params, (N - 1) // q, N).u_bar == 0:
            raise InconclusiveError(
                f"u_bar((N-1)/{q}) == 0 mod {N}: rank is a proper divisor candidate, no conclusion"
            )
    return Verdict("prime", "rank-certificate")


def lehmer_congruence_checks(params: LucasParams, p: int) -> CongruenceReport:
    """The five classical congruences of the pair at an odd prime p.

    With e = (D/p), s = (R/p), t = (Q/p), all of +-1 since p does not divide
    QRD:

      1. u_bar(p)    == e     (mod p)
      2. v_bar(p)    == s     (mod p)
      3. u_bar(p-se) == 0     (mod p)
      4. v_bar(p-se) == 2*s*Q^((1-se)/2)  (mod p)   (the index p-se is even)
      5. p divides v_bar((p-se)/2) when s = -t, u_bar((p-se)/2) when s = t
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if (params.Q * params.R * params.D) % p == 0:
        raise ValueError(f"p = {p} divides QRD")
    eps = jacobi(params.D, p)
    sig = jacobi(params.R, p)
    tau = jacobi(params.Q, p)
    se = sig * eps

    at_p = uv_mod(params, p, p)
    idx = p - se
    at_idx = uv_mod(params, idx, p)
    at_half = uv_mod(params, idx // 2, p)
    v_expected = 2 * sig * params.Q ** ((1 - se) // 2)

    checks = [
        ResidueCheck("u_at_p", p, eps % p, at_p.u_bar, (at_p.u_bar - eps) % p == 0),
        ResidueCheck("v_at_p", p, sig % p, at_p.v_bar, (at_p.v_bar - sig) % p == 0),
        ResidueCheck("u_vanishes", idx, 0, at_idx.u_bar, at_idx.u_bar == 0),
        ResidueCheck(
            "v_at_even_index",
            idx,
            v_expected % p,
            at_idx.v_bar,
            (at_idx.v_bar - v_expected) % p == 0,
        ),
    ]
    if sig == -tau:
        checks.append(
            ResidueCheck("v_vanishes_at_half", idx // 2, 0, at_half.v_bar, at_half.v_bar == 0)
        )
    else:
        checks.append(
            ResidueCheck("u_vanishes_at_half", idx // 2, 0, at_half.u_bar, at_half.u_bar == 0)
        )
    return CongruenceReport(p, params, eps, sig, tau, tuple(checks))


# Observed residue pattern at the nine indices flanking F_n (offsets -5..+3),
# for the (7, 1) parameters.  Empirical for n in {2, 3, 4}; not a theorem.
FLANK_OFFSETS = tuple(range(-5, 4))
FLANK_U_RESIDUES = (5, 6, 1, 1, 0, -1, -1, -6, -5)
FLANK_V_RESIDUES = (-23, -4, -5, -1, -2, -1, -5, -4, -23)


def appendix_residues(params: LucasParams, n: int) -> tuple[ResidueCheck, ...]:
    """Check the 18 flanking congruences of the pair around F_n, n in {2,3,4}."""
    if (params.R, params.Q) != (7, 1):
        raise ValueError("the flanking pattern is stated only for parameters (7, 1)")
    if n not in (2, 3, 4):
        raise ValueError(f"the pattern is asserted only for n in {{2, 3, 4}}, got {n}")
    F = FermatNumber(n).value
    checks = []
    for off, eu, ev in zip(FLANK_OFFSETS, FLANK_U_RESIDUES, FLANK_V_RESIDUES):
        pair = uv_mod(params, F + off, F)
        checks.append(
            ResidueCheck(f"u_at_F{n}{off:+d}", F + off, eu % F, pair.u_bar,
                         (pair.u_bar - eu) % F == 0)
        )
        checks.append(
            ResidueCheck(f"v_at_F{n}{off:+d}", F + off, ev % F, pair.v_bar,
                         (pair.v_bar - ev) % F == 0)
        )
    return tuple(checks)

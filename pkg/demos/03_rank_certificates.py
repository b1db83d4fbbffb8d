"""Rank of apparition and the N-1 primality certificate.

omega(m) is the least k with m | u_bar(k).  If u_bar(N-1) == 0 mod N while
u_bar((N-1)/q) != 0 for every prime q | N-1, the rank is exactly N-1 and N
must be prime.  For Fermat numbers N-1 = 2^(2^n), so q = 2 is the only case.
"""

from fermatlucas import (
    STANDARD_PARAMS,
    certify_via_rank,
    rank_of_apparition,
    uv_mod,
)

for m in (5, 17, 31, 97, 257):
    print(f"omega({m}) = {rank_of_apparition(STANDARD_PARAMS, m).omega}")

print()
for N in (17, 257, 65537, (1 << 32) + 1):
    verdict = certify_via_rank(STANDARD_PARAMS, N)
    detail = ""
    if verdict.is_prime:
        half = uv_mod(STANDARD_PARAMS, (N - 1) // 2, N).u_bar
        detail = f"  [u_bar(N-1) = 0, u_bar((N-1)/2) = {half} != 0]"
    print(f"N = {N}: {verdict.classification}{detail}")

"""The Lehmer pair u_bar, v_bar for P = sqrt(7), Q = 1: exact and modular.

The raw Lucas terms live in Z[sqrt(7)] and alternate between integers and
sqrt(7)-multiples; the printed integer is the normalized value, with the
column that carries the radical tagged.  Modulo F_n, the v column vanishes
at index (F_n - 1)/2 when F_n is prime: that zero IS the primality test.
"""

from fermatlucas import STANDARD_PARAMS, lehmer_pairs_exact, uv_mod
from fermatlucas.quadratic import balanced_residue

print("exact values, indices 0..12:")
print(f"{'i':>3} | {'u_bar':>14} | {'v_bar':>14}")
for pair in lehmer_pairs_exact(STANDARD_PARAMS, 12):
    u_tag = " *sqrt7" if pair.index % 2 == 0 else ""
    v_tag = " *sqrt7" if pair.index % 2 == 1 else ""
    print(f"{pair.index:>3} | {str(pair.u_bar) + u_tag:>14} | {str(pair.v_bar) + v_tag:>14}")

for F, indices in ((17, range(0, 17)), (257, (4, 8, 16, 32, 64, 128, 256))):
    print(f"\nresidues mod {F}:")
    print(f"{'i':>4} | {'u_bar':>10} | {'v_bar':>10}")
    for i in indices:
        pair = uv_mod(STANDARD_PARAMS, i, F)
        cells = []
        for r in (pair.u_bar, pair.v_bar):
            b = balanced_residue(r, F)
            cells.append(f"{r} = {b}" if b != r and abs(b) < 100 else str(r))
        print(f"{i:>4} | {cells[0]:>10} | {cells[1]:>10}")

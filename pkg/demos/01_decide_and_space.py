# Deciding subset-sum with a prime sweep, and watching how little it stores.
# Run: python demos/01_decide_and_space.py

import math

from unarysum import Instance, capacity, decide
from unarysum.oracle import oracle_count
from unarysum.charsum import charsum_mod_p
from unarysum.decider import checked_primes
from unarysum.oracle import dp_table_bits

# %% A first instance: {1, 2, 3} with target 3 has two solutions, {1,2} and {3}.
inst = Instance([1, 2, 3], 3)
C = capacity(inst)
print("capacity", C, "solutions", oracle_count(inst))

# The character sum over (Z/p)^* is -A mod p for every prime above C.
for p in checked_primes(inst, 4):
    print(f"p={p:3d}  sum={charsum_mod_p(inst, p).value:3d}  -A mod p={-2 % p}")

# %% decide() stops at the first nonzero sum; a 'no' needs primes carrying > n bits.
for m, B in [([1, 2, 3], 3), ([1, 2], 4), ([2, 4, 6, 8], 7)]:
    result, report = decide(Instance(m, B))
    print(m, B, "->", result, "after", report.primes_checked, "prime(s)")

# %% Metered runs: peak live register bits versus the DP table an oracle would fill.
print(f"{'n':>4} {'C':>5} {'peak bits':>10} {'16 log2(nC+2)':>14} {'dp bits':>8}")
for n in (8, 16, 32, 64, 128):
    inst = Instance([1] * n, n)
    C = capacity(inst)
    _, report = decide(inst, metered=True)
    print(f"{n:4d} {C:5d} {report.peak_bits:10d} {16 * math.log2(n * C + 2):14.1f} "
          f"{dp_table_bits(inst):8d}")

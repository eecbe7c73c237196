# Counting solutions modulo primes, prime powers, and exactly.
# Run: python demos/02_counting_mod_prime_powers.py

import numpy as np

from unarysum import Instance, capacity
from unarysum.oracle import oracle_count
from unarysum.counting import (PrimePower, count_exact, count_mod_prime,
                               count_mod_prime_power, field_degree)

inst = Instance([1, 2, 3, 4, 5, 6, 7], 14)
A = oracle_count(inst)
C = capacity(inst)
print("A =", A, " C =", C)

# %% Small primes sit below C, so the sum runs over GF(p^l)^* with p^l > C.
for p in (2, 3, 5, 7, 11, 31, 61, 67):
    branch = "prime field" if p > C else f"GF({p}^{field_degree(inst, p)})"
    print(f"A mod {p:2d} = {count_mod_prime(inst, p).value:2d}  ({branch}, expect {A % p})")

# %% Prime powers: roots of unity in Z/p^k, extended by p-power roots when p <= C.
for p, k in [(3, 2), (3, 4), (5, 3), (7, 2), (67, 2)]:
    r = count_mod_prime_power(inst, PrimePower(p, k))
    print(f"A mod {p}^{k} = {r.value}  (expect {A % p ** k})")

# %% Exact counts via CRT over primes whose product passes 2^n.
rng = np.random.default_rng(0)
for _ in range(5):
    m = rng.integers(-5, 6, size=rng.integers(4, 14)).tolist()
    B = int(rng.integers(-6, 7))
    inst = Instance(m, B)
    print(f"m={m} B={B}: exact {count_exact(inst)}, oracle {oracle_count(inst)}")

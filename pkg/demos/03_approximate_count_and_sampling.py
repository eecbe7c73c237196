# Leading bits of a large count without reconstructing it, then uniform sampling.
# Run: python demos/03_approximate_count_and_sampling.py

from collections import Counter

from unarysum import Instance
from unarysum.oracle import oracle_count
from unarysum.counting import approx_count, find_bracketing_modulus
from unarysum.sampler import sample_solutions

inst = Instance([1, 1, 2, 2, 3, 3, 1, 2, 3, 0, 0, 1, 2, 3, 1, 1, 2, 2, 3, 3], 15)
A = oracle_count(inst)

# %% A bracketing modulus N has A < N < 2A, so A/N mod 1 = A/N reveals A's top bits.
basket = find_bracketing_modulus(inst)
print("A =", A, " N =", basket.N, " primes", basket.primes)

for t in (4, 6, 8, 12, 16):
    est = approx_count(inst, t)
    print(f"t={t:2d}: {est.mantissa} * 2^{est.exponent} = {float(est.value):.0f}"
          f"  relative error {abs(float(est.value) - A) / A:.1e}")

# %% Sampling: include item i with probability A_in / (A_in + A_out).
small = Instance([1, 2, 3, 4, 5, 6], 6)
freq = Counter(sample_solutions(small, seed=1, samples=6000))
for subset, hits in sorted(freq.items()):
    print(subset, hits)

# Approximate counts skew the draw slightly; 4 bits is coarse on purpose.
rough = Counter(sample_solutions(small, seed=1, samples=6000, approx_bits=4))
print("with 4-bit counts:", dict(sorted(rough.items())))

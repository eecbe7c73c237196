"""Counting solutions: residues of A, exact reconstruction, and approximation.

``approx_count`` never reconstructs A.  It looks for a product N of distinct
primes with A < N < 2A.  Then A/N mod 1 = A/N lies in (1/2, 1), and a
fixed-point estimate of that fraction times N gives the leading bits of A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .charsum import charsum_mod_p, charsum_mu, charsum_mu_r, charsum_over_fq
from .decider import decide
from .errors import DivisibilityViolation, DuplicatePrime, OddPrimeRequired, ZeroCount
from .model import Instance, capacity
from .numtheory import (Residue, check_modulus, find_irreducible, is_prime,
                        next_prime)


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("exponent k must be at least 1")
        check_modulus(self.p ** self.k)

    @property
    def modulus(self) -> int:
        return self.p ** self.k

    def __str__(self):
        return f"{self.p}^{self.k}"


@dataclass(frozen=True)
class ModulusBasket:
    primes: tuple[int, ...]

    def __post_init__(self):
        primes = tuple(self.primes)
        if len(set(primes)) != len(primes):
            raise DuplicatePrime(f"basket primes must be distinct: {primes}")
        object.__setattr__(self, "primes", primes)

    @property
    def N(self) -> int:
        return prod(self.primes)

    def cofactor(self, p: int) -> int:
        """N_i = N / p_i."""
        return self.N // p


@dataclass(frozen=True)
class FixedFraction:
    t: int
    numerator: int  # value is numerator / 2^t, in [0, 1)

    def __float__(self):
        return self.numerator / (1 << self.t)


@dataclass(frozen=True)
class ApproxCount:
    mantissa: int
    exponent: int
    bits: int
    zero: bool = False

    @property
    def value(self) -> Fraction:
        return Fraction(self.mantissa) * Fraction(2) ** self.exponent

    def to_dict(self) -> dict:
        return {"mantissa": self.mantissa, "exponent": self.exponent,
                "bits": self.bits, "zero": self.zero}


# -- residues ---------------------------------------------------------------

def field_degree(instance: Instance, p: int) -> int:
    """Smallest ell with p^ell > C."""
    C = capacity(instance)
    ell = 1
    while p ** ell <= C:
        ell += 1
    return ell


def count_mod_prime(instance: Instance, p: int) -> Residue:
    """A mod p for any prime p.

    Above the capacity the sum over (Z/p)^* suffices; otherwise it runs over
    GF(p^ell)^* with p^ell > C.  Both groups have order = -1 mod p, so A is
    minus the sum.
    """
    if p > capacity(instance):
        s = charsum_mod_p(instance, p)
    else:
        ell = field_degree(instance, p)
        check_modulus(p ** ell)
        s = charsum_over_fq(instance, find_irreducible(p, ell))
    return Residue(-s.value, p)


def count_mod_prime_power(instance: Instance, pp: PrimePower) -> Residue:
    """A mod p^k for odd p."""
    p, k = pp.p, pp.k
    if p == 2:
        raise OddPrimeRequired("prime-power counting needs an odd prime")
    if p > capacity(instance):
        s = charsum_mu(instance, p, k)
        return Residue(s.value * pow(p - 1, -1, s.modulus), s.modulus)
    s, ell = charsum_mu_r(instance, p, k)
    t = s.value * pow(p - 1, -1, s.modulus) % s.modulus
    if t % p ** ell:
        raise DivisibilityViolation(f"{t} is not divisible by {p}^{ell}")
    return Residue(t // p ** ell, pp.modulus)


def crt_combine(residues: dict[int, int]) -> tuple[int, int]:
    """x mod N from {p_i: x mod p_i} via sum_i N_i * a_i * (N_i^-1 mod p_i)."""
    N = prod(residues)
    x = 0
    for p, a in residues.items():
        Ni = N // p
        x += Ni * (a * pow(Ni % p, -1, p) % p)
    return x % N, N


def count_exact(instance: Instance) -> int:
    """Exact A from residues at primes above C whose product exceeds 2^n.

    Not a small-space routine: the reconstruction holds n-bit numbers.
    """
    bound = 1 << instance.n
    residues: dict[int, int] = {}
    N, p = 1, capacity(instance)
    while N <= bound:
        p = next_prime(p)
        residues[p] = count_mod_prime(instance, p).value
        N *= p
    return crt_combine(residues)[0]


# -- approximation ----------------------------------------------------------

class _ResidueCache:
    def __init__(self, instance):
        self.instance = instance
        self.values: dict[int, int] = {}

    def __call__(self, p):
        if p not in self.values:
            self.values[p] = count_mod_prime(self.instance, p).value
        return self.values[p]


def _fraction(residue_of, primes, t: int) -> FixedFraction:
    guard = t + max(1, (len(primes) - 1).bit_length()) + 2
    N = prod(primes)
    acc = 0
    for p in primes:
        Ni = N // p
        term = residue_of(p) * pow(Ni % p, -1, p) % p
        acc += (term << guard) // p  # truncation error < 1 unit per term
    acc %= 1 << guard
    shift = guard - t
    numerator = ((acc + (1 << (shift - 1))) >> shift) % (1 << t)
    return FixedFraction(t, numerator)


def approx_fraction(instance: Instance, basket: ModulusBasket, t: int) -> FixedFraction:
    """A/N mod 1 to t bits; absolute error below 2^(1-t)."""
    if t < 4:
        raise ValueError("need at least 4 fractional bits")
    return _fraction(_ResidueCache(instance), basket.primes, t)


def _compare_half(residue_of, primes, N) -> int:
    """Sign of A/N - 1/2, given N > A >= 1.

    Precision doubles until the error bar clears 1/2; once 2^t > 4N the
    fraction's granularity 1/N exceeds the bar, so an unresolved straddle
    means A/N is exactly 1/2.
    """
    t = 32
    while True:
        f = _fraction(residue_of, primes, t).numerator
        half, full = 1 << (t - 1), 1 << t
        lo, hi = f - 2, f + 2  # true value * 2^t lies strictly inside (lo, hi)
        if lo >= 0 and hi <= half:
            return -1
        if lo >= half and hi <= full:
            return 1
        if full > 4 * N:
            return 0
        t *= 2


def _largest_prime_at_least_half(q: int) -> int:
    c = q - 1
    while not is_prime(c):
        c -= 1
    if 2 * c < q:
        raise AssertionError(f"no prime in [{q}/2, {q})")  # Bertrand's postulate
    return c


def _swap_out_two(primes: list[int]) -> list[int]:
    """Replace {2, q} by one unused prime q' in (q, 2q): N' = N q'/(2q) lies in (N/2, N)."""
    for q in sorted(p for p in primes if p != 2):
        c = 2 * q - 1
        while c > q:
            if c not in primes and is_prime(c):
                return [p for p in primes if p not in (2, q)] + [c]
            c -= 1
    raise AssertionError(f"no replacement prime for basket {primes}")


def _initial_basket(instance: Instance) -> list[int]:
    bound = 1 << instance.n
    primes, N, p = [], 1, capacity(instance)
    while N <= bound:
        p = next_prime(p)
        primes.append(p)
        N *= p
    return primes


def _bracket(instance: Instance, residue_of) -> ModulusBasket:
    primes = _initial_basket(instance)
    while True:
        N = prod(primes)
        side = _compare_half(residue_of, primes, N)
        if side > 0:
            return ModulusBasket(tuple(sorted(primes)))
        if side == 0:
            # N = 2A, so 2 is in the basket and dropping it would give N = A.
            if primes == [2]:
                return ModulusBasket((2,))  # A = 1: no integer lies in (1, 2)
            primes = _swap_out_two(primes)
            continue
        if 2 in primes:
            primes.remove(2)
        else:
            q = min(primes)
            primes.remove(q)
            primes.append(_largest_prime_at_least_half(q))


def find_bracketing_modulus(instance: Instance) -> ModulusBasket:
    """Distinct primes with product N satisfying A < N < 2A (N = 2 when A = 1)."""
    if not decide(instance)[0]:
        raise ZeroCount("no subset hits the target")
    return _bracket(instance, _ResidueCache(instance))


def _round_significant(x: int, t: int) -> tuple[int, int]:
    """x ~ mantissa * 2^shift with a t-bit mantissa, rounding half up."""
    shift = x.bit_length() - t
    if shift <= 0:
        return x << -shift, shift
    mantissa = (x + (1 << (shift - 1))) >> shift
    if mantissa >> t:
        mantissa >>= 1
        shift += 1
    return mantissa, shift


def approx_count(instance: Instance, t: int) -> ApproxCount:
    """A to t significant bits; |estimate - A| <= A * 2^(3-t)."""
    if t < 4:
        raise ValueError("need at least 4 significant bits")
    if not decide(instance)[0]:
        return ApproxCount(0, 0, t, zero=True)
    residue_of = _ResidueCache(instance)
    basket = _bracket(instance, residue_of)
    s = t + 3
    f = _fraction(residue_of, basket.primes, s).numerator
    if f < 1 << (s - 2):
        f += 1 << s  # A/N >= 1/2, so a tiny value is a wrap-around from 1
    mantissa, shift = _round_significant(f * basket.N, t)
    return ApproxCount(mantissa, shift - s, t)

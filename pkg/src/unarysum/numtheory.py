"""Primes, modular arithmetic, roots of unity and small finite fields.

Everything is deterministic: whenever a generator or a polynomial has to be
chosen, the smallest candidate wins, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import (CapacityExceeded, ModulusTooLarge, NotInvertible,
                     OddPrimeRequired, OrderNotDividing, ZeroInverse)

MODULUS_LIMIT = 1 << 62


def check_modulus(modulus: int) -> int:
    if modulus >= MODULUS_LIMIT:
        raise ModulusTooLarge(f"modulus {modulus} is not below 2^62")
    return modulus


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self):
        return self.value


# -- primes -----------------------------------------------------------------

def is_prime(u: int) -> bool:
    """Trial division up to floor(sqrt(u))."""
    if u < 2:
        return False
    if u < 4:
        return True
    if u % 2 == 0:
        return False
    d = 3
    while d * d <= u:
        if u % d == 0:
            return False
        d += 2
    return True


def next_prime(u: int, bound: int = MODULUS_LIMIT) -> int:
    """Smallest prime strictly greater than ``u``."""
    c = max(u + 1, 2)
    while not is_prime(c):
        c += 1
    if c > bound:
        raise CapacityExceeded(f"next prime after {u} exceeds {bound}")
    return c


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# -- residues ---------------------------------------------------------------

def mod_inv(a: Residue) -> Residue:
    try:
        return Residue(pow(a.value, -1, a.modulus), a.modulus)
    except ValueError:
        raise NotInvertible(f"{a.value} is not a unit mod {a.modulus}") from None


def mod_pow(base: Residue, exp: int) -> Residue:
    """base**exp; a negative exponent inverts first."""
    if exp < 0:
        base = mod_inv(base)
        exp = -exp
    return Residue(pow(base.value, exp, base.modulus), base.modulus)


def _has_order(g: int, order: int, modulus: int, factors) -> bool:
    if pow(g, order, modulus) != 1:
        return False
    return all(pow(g, order // t, modulus) != 1 for t in factors)


def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if _has_order(g, p - 1, p, factors):
            return g
    raise ValueError(f"{p} is not prime")


def unit_group_generator(p: int, j: int) -> int:
    """Smallest generator of the (cyclic) unit group of Z/p^j, p odd."""
    if p == 2:
        raise OddPrimeRequired("unit groups of Z/2^j are not cyclic in general")
    modulus = check_modulus(p ** j)
    phi = (p - 1) * p ** (j - 1)
    factors = prime_factors(phi)
    for g in range(2, modulus):
        if g % p and _has_order(g, phi, modulus, factors):
            return g
    raise ValueError(f"no generator mod {p}^{j}")  # unreachable for prime p


@dataclass(frozen=True)
class UnityGroup:
    """The cyclic group of order-dividing-``order`` units in Z/modulus."""

    modulus: int
    order: int
    generator: int

    def elements(self) -> Iterator[int]:
        """Successive powers g^0, g^1, ..., g^(order-1)."""
        x = 1
        for _ in range(self.order):
            yield x
            x = x * self.generator % self.modulus


def teichmueller_generator(p: int, k: int) -> UnityGroup:
    """Generator of the (p-1)st roots of unity in Z/p^k, lifting the primitive root."""
    if p == 2:
        raise OddPrimeRequired("p = 2 is excluded from unity-group machinery")
    modulus = check_modulus(p ** k)
    g = pow(primitive_root(p), p ** (k - 1), modulus)
    return UnityGroup(modulus, p - 1, g)


def unity_group(p: int, j: int, r: int) -> UnityGroup:
    if p == 2:
        raise OddPrimeRequired("p = 2 is excluded from unity-group machinery")
    phi = (p - 1) * p ** (j - 1)
    if r < 1 or phi % r:
        raise OrderNotDividing(f"{r} does not divide {phi}")
    modulus = check_modulus(p ** j)
    return UnityGroup(modulus, r, pow(unit_group_generator(p, j), phi // r, modulus))


@dataclass(frozen=True)
class CyclotomicUnityGroup:
    """Roots of unity of order r = (p-1)*p^ell over Z/p^precision.

    Z/p^j has no p-power roots of unity that are far enough from 1 to make
    power sums over them vanish, so the p-part lives in the extension
    R = (Z/p^precision)[X] / Phi(X), Phi the p^ell-th cyclotomic polynomial,
    with zeta = X.  The (p-1)-part is the Teichmueller group tau in Z/p^precision.
    The generator tau*zeta has exact order r, and its powers are monomials
    tau^j X^(j mod p^ell), handed out as (coefficient, exponent) pairs.
    """

    p: int
    ell: int
    precision: int
    tau: int

    @classmethod
    def build(cls, p: int, ell: int, precision: int) -> "CyclotomicUnityGroup":
        return cls(p, ell, precision, teichmueller_generator(p, precision).generator)

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    @property
    def span(self) -> int:
        """p^ell: length of polynomials before cyclotomic reduction."""
        return self.p ** self.ell

    @property
    def order(self) -> int:
        return (self.p - 1) * self.span

    def points(self) -> Iterator[tuple[int, int]]:
        coef, shift, M, L = 1, 0, self.modulus, self.span
        for _ in range(self.order):
            yield coef, shift
            coef = coef * self.tau % M
            shift = (shift + 1) % L

    def reduce(self, coeffs: list[int]) -> list[int]:
        """Reduce a polynomial mod (Phi, p^precision); result has length phi(p^ell)."""
        M, L = self.modulus, self.span
        step = L // self.p
        deg = L - step  # degree of Phi
        c = [x % M for x in coeffs]
        c += [0] * (L - len(c))
        # X^deg = -(1 + X^step + ... + X^((p-2) step))
        for d in range(L - 1, deg - 1, -1):
            a = c[d]
            if a:
                c[d] = 0
                base = d - deg
                for t in range(self.p - 1):
                    c[base + t * step] = (c[base + t * step] - a) % M
        return c[:deg]


# -- finite fields GF(p^ell) ------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """GF(p^ell) as (Z/p)[X]/(f); ``f`` lists coefficients constant term first."""

    p: int
    ell: int
    f: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.ell


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]  # constant term first, length ell


def _poly_mod(a: list[int], f: tuple[int, ...], p: int) -> list[int]:
    """Remainder of a by monic f over Z/p."""
    a = [x % p for x in a]
    deg = len(f) - 1
    for top in range(len(a) - 1, deg - 1, -1):
        c = a[top]
        if c:
            shift = top - deg
            for i, fi in enumerate(f):
                a[shift + i] = (a[shift + i] - c * fi) % p
    return a[:deg] + [0] * max(0, deg - len(a))


def _is_zero(poly) -> bool:
    return not any(poly)


def _digits(code: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(code % p)
        code //= p
    return tuple(out)


def find_irreducible(p: int, ell: int) -> FieldSpec:
    """Smallest monic irreducible polynomial of degree ell over Z/p.

    Candidates are ordered by the integer sum(c_i * p^i), i.e. the constant
    term is the least significant digit, so GF(16) gets x^4 + x + 1.
    """
    if ell == 1:
        return FieldSpec(p, 1, (0, 1))
    divisors = [_digits(code, p, d) + (1,)
                for d in range(1, ell // 2 + 1)
                for code in range(p ** d)]
    for code in range(p ** ell):
        f = _digits(code, p, ell) + (1,)
        if all(not _is_zero(_poly_mod(list(f), g, p)) for g in divisors):
            return FieldSpec(p, ell, f)
    raise ValueError(f"no irreducible polynomial of degree {ell} over Z/{p}")


def gf_element(spec: FieldSpec, coeffs) -> FieldElement:
    c = [x % spec.p for x in coeffs]
    if len(c) > spec.ell:
        c = _poly_mod(c, spec.f, spec.p)
    return FieldElement(tuple(c + [0] * (spec.ell - len(c))))


def gf_one(spec: FieldSpec) -> FieldElement:
    return gf_element(spec, [1])


def gf_add(a: FieldElement, b: FieldElement, spec: FieldSpec) -> FieldElement:
    return FieldElement(tuple((x + y) % spec.p for x, y in zip(a.coeffs, b.coeffs)))


def gf_mul(a: FieldElement, b: FieldElement, spec: FieldSpec) -> FieldElement:
    prod = [0] * (2 * spec.ell - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] += x * y
    return FieldElement(tuple(_poly_mod(prod, spec.f, spec.p)))


def gf_inv(a: FieldElement, spec: FieldSpec) -> FieldElement:
    if _is_zero(a.coeffs):
        raise ZeroInverse("zero has no inverse")
    return gf_pow(a, spec.q - 2, spec)


def gf_pow(a: FieldElement, exp: int, spec: FieldSpec) -> FieldElement:
    """Square-and-multiply; negative exponents invert first."""
    if exp < 0:
        a = gf_inv(a, spec)
        exp = -exp
    result = gf_one(spec)
    while exp:
        if exp & 1:
            result = gf_mul(result, a, spec)
        a = gf_mul(a, a, spec)
        exp >>= 1
    return result


def gf_nonzero(spec: FieldSpec) -> Iterator[FieldElement]:
    for code in range(1, spec.q):
        yield FieldElement(_digits(code, spec.p, spec.ell))


def gf_encode(a: FieldElement, p: int) -> int:
    code = 0
    for c in reversed(a.coeffs):
        code = code * p + c
    return code


def gf_primitive_element(spec: FieldSpec) -> FieldElement:
    """Smallest (by encoding) element of multiplicative order q - 1."""
    order = spec.q - 1
    factors = prime_factors(order) if order > 1 else []
    one = gf_one(spec)
    for code in range(1, spec.q):
        g = FieldElement(_digits(code, spec.p, spec.ell))
        if all(gf_pow(g, order // t, spec) != one for t in factors):
            return g
    raise ValueError("field has no primitive element; is f irreducible?")


@dataclass(frozen=True)
class FieldTables:
    """Discrete-log tables for GF(q): antilog[j] = g^j, and Zech logs.

    ``zech[t]`` is the exponent z with 1 + g^t = g^z, or None when 1 + g^t = 0.
    """

    spec: FieldSpec
    antilog: tuple[FieldElement, ...]
    zech: tuple[int | None, ...]


def gf_tables(spec: FieldSpec) -> FieldTables:
    g = gf_primitive_element(spec)
    one = gf_one(spec)
    antilog, log = [], {}
    x = one
    for j in range(spec.q - 1):
        antilog.append(x)
        log[x] = j
        x = gf_mul(x, g, spec)
    zech = tuple(log.get(gf_add(a, one, spec)) for a in antilog)
    return FieldTables(spec, tuple(antilog), zech)

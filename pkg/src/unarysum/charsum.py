"""Character sums that pick out the coefficient of x^B in prod(1 + x^m_i).

For a cyclic group G whose order exceeds every |sum_S m_i - B|, summing
x^(sum_S m_i - B) over G gives |G| exactly when the exponent is zero and 0
otherwise, so

    sum_{x in G} x^(-B) * prod_i (1 + x^(m_i))  ==  |G| * A

where A counts the subsets hitting B.  The evaluators below differ only in
which group G they sum over and which ring holds the values:

* ``charsum_mod_p``        -- (Z/p)^*, p > C; |G| = p - 1 = -1 mod p
* ``charsum_over_fq``      -- GF(q)^*, q = p^ell > C; |G| = q - 1 = -1 mod p
* ``charsum_mu``           -- (p-1)st roots of unity in Z/p^k, p > C
* ``charsum_mu_r``         -- roots of unity of order (p-1) p^ell > C, any odd p
* ``charsum_multivariate`` -- ((Z/p)^*)^k for vector instances

The undivided sums are returned; dividing out |G| happens in ``counting``.
"""

from __future__ import annotations

import numpy as np

from .errors import FieldTooSmall, NonRationalSum, OddPrimeRequired, PrimeTooSmall
from .model import Instance, VectorInstance, capacity, scan, vector_capacity
from .numtheory import (CyclotomicUnityGroup, FieldSpec, Residue, check_modulus,
                        gf_tables, teichmueller_generator)

_INT64_SAFE = 1 << 31


def power_sum(p: int, k: int) -> Residue:
    """sum_{x=1}^{p-1} x^k mod p: -1 when (p-1) | k, else 0."""
    return Residue(p - 1 if k % (p - 1) == 0 else 0, p)


def charsum_mod_p(instance: Instance, p: int, meter=None) -> Residue:
    """Streaming evaluation of sum_{x=1}^{p-1} x^(-B) prod_i (1 + x^(m_i)) mod p.

    Live state is a handful of residues: the point x, the running total, the
    running product, one scratch value, and the tape position.  Each point
    makes one full pass over the input.  Pass a ``SpaceMeter`` to have every
    register write charged to it.
    """
    C = capacity(instance)
    if p <= C:
        raise PrimeTooSmall(f"p={p} must exceed the capacity C={C}")
    B = instance.B
    cursor = scan(instance, meter)
    total = 0
    if meter is None:
        for x in range(1, p):
            prod = pow(x, -B, p)
            cursor.rewind()
            for m in cursor:
                prod = prod * (1 + pow(x, m, p)) % p
            total = (total + prod) % p
        return Residue(total, p)

    meter.update("total", 0)
    for x in range(1, p):
        meter.update("x", x)
        meter.update("scratch", abs(B))
        prod = pow(x, -B, p)
        meter.update("product", prod)
        cursor.rewind()
        for i, m in enumerate(cursor, 1):
            meter.update("i", i)
            meter.update("scratch", abs(m))
            t = pow(x, m, p)
            meter.update("scratch", t)
            prod = prod * (1 + t) % p
            meter.update("product", prod)
        total = (total + prod) % p
        meter.update("total", total)
    for name in ("x", "i", "scratch", "product", "total", "cursor"):
        meter.release(name)
    return Residue(total, p)


def charsum_over_fq(instance: Instance, spec: FieldSpec, tables=None) -> Residue:
    """Sum over GF(q)^*; returns the (necessarily constant) result mod p.

    Points are enumerated as powers g^j of a primitive element, so
    x^e = g^(j e) and 1 + g^t = g^zech[t]; the product is accumulated as an
    exponent of g and only the outer sum is done in coefficient form.
    """
    C = capacity(instance)
    if spec.q <= C:
        raise FieldTooSmall(f"q={spec.q} must exceed the capacity C={C}")
    tables = tables or gf_tables(spec)
    order = spec.q - 1
    p = spec.p
    B = instance.B
    cursor = scan(instance)
    total = [0] * spec.ell
    for j in range(order):
        e = (-B * j) % order
        cursor.rewind()
        for m in cursor:
            z = tables.zech[(j * m) % order]
            if z is None:  # factor 1 + x^m vanishes
                break
            e += z
        else:
            for d, c in enumerate(tables.antilog[e % order].coeffs):
                total[d] = (total[d] + c) % p
    if any(total[1:]):
        raise NonRationalSum(f"sum over GF({spec.q}) left non-constant terms {total}")
    return Residue(total[0], p)


def _power_array(base: np.ndarray, e: int, modulus: int) -> np.ndarray:
    result = np.ones_like(base)
    while e:
        if e & 1:
            result = result * base % modulus
        base = base * base % modulus
        e >>= 1
    return result


def _ring_array(values, modulus: int) -> np.ndarray:
    # products of two residues must fit in int64
    dtype = np.int64 if modulus < _INT64_SAFE else object
    return np.array(values, dtype=dtype)


def charsum_mu(instance: Instance, p: int, k: int) -> Residue:
    """Sum over the (p-1)st roots of unity in Z/p^k; equals (p-1) A mod p^k."""
    if p == 2:
        raise OddPrimeRequired("p = 2 is excluded from unity-group machinery")
    C = capacity(instance)
    if p <= C:
        raise PrimeTooSmall(f"p={p} must exceed the capacity C={C}")
    group = teichmueller_generator(p, k)
    M, order = group.modulus, group.order
    xs = _ring_array(list(group.elements()), M)
    # every point satisfies x^order = 1, so exponents reduce mod order
    term = _power_array(xs, (-instance.B) % order, M)
    for m in scan(instance):
        term = term * (1 + _power_array(xs, m % order, M)) % M
    return Residue(int(term.sum() % M), M)


def rou_precision(instance: Instance, p: int) -> int:
    """Smallest ell >= 1 with (p-1) p^ell > C."""
    C = capacity(instance)
    ell = 1
    while (p - 1) * p ** ell <= C:
        ell += 1
    return ell


def charsum_mu_r(instance: Instance, p: int, k: int) -> tuple[Residue, int]:
    """Sum over roots of unity of order r = (p-1) p^ell, valid for any odd p.

    Returns ``(s, ell)`` with s = r A mod p^(k+ell).  Values live in
    (Z/p^(k+ell))[X] / Phi_{p^ell}(X); each point tau^j X^j is a monomial, so
    multiplying the running product by (1 + x^m) is a shift-and-add.  All r
    points are carried side by side as rows of an r x p^ell array (held
    modulo X^(p^ell) - 1), summed, and reduced by the cyclotomic polynomial
    at the end.
    """
    if p == 2:
        raise OddPrimeRequired("p = 2 is excluded from unity-group machinery")
    ell = rou_precision(instance, p)
    check_modulus(p ** (k + ell))
    group = CyclotomicUnityGroup.build(p, ell, k + ell)
    M, L, t_order = group.modulus, group.span, p - 1

    points = list(group.points())
    coefs = _ring_array([c for c, _ in points], M)
    shifts = np.array([s for _, s in points], dtype=np.int64)
    rows = np.arange(len(points))
    cols = np.arange(L)

    def monomial(e):
        return _power_array(coefs, e % t_order, M), shifts * e % L

    c0, s0 = monomial(-instance.B)
    poly = _ring_array(np.zeros((len(points), L), dtype=np.int64), M)
    poly[rows, s0] = c0
    for m in scan(instance):
        c, s = monomial(m)
        moved = np.take_along_axis(poly, (cols[None, :] - s[:, None]) % L, axis=1)
        poly = (poly + c[:, None] * moved) % M

    total = group.reduce([int(v) for v in poly.sum(axis=0) % M])
    if any(total[1:]):
        raise NonRationalSum(f"sum over mu_{group.order} left non-constant terms")
    return Residue(total[0], M), ell


def charsum_multivariate(vinstance: VectorInstance, p: int) -> Residue:
    """sum over x in ((Z/p)^*)^k of prod_j x_j^(-B_j) * prod_i (1 + prod_j x_j^(m_ij)).

    Streams over the first coordinate; for each x_1 the remaining k-1
    coordinates are evaluated as one grid.
    """
    C = vector_capacity(vinstance)
    if p <= C:
        raise PrimeTooSmall(f"p={p} must exceed the capacity C={C}")
    order = p - 1
    xs = np.arange(1, p, dtype=np.int64)
    powers: dict[int, np.ndarray] = {}

    def pw(e):
        e %= order
        if e not in powers:
            powers[e] = _power_array(xs, e, p)
        return powers[e]

    def grid(exps):
        g = np.ones((), dtype=np.int64)
        for e in exps:
            g = np.multiply.outer(g, pw(e)) % p
        return g

    target_rest = grid([-b for b in vinstance.B[1:]])
    rows_rest = [grid(row[1:]) for row in vinstance.m]
    first = [row[0] for row in vinstance.m]
    total = 0
    for a in range(order):
        term = target_rest * int(pw(-vinstance.B[0])[a]) % p
        for m1, rest in zip(first, rows_rest):
            term = term * (1 + int(pw(m1)[a]) * rest % p) % p
        total = (total + int(term.sum())) % p
    return Residue(total, p)

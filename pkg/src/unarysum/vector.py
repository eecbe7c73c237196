"""Vector-valued subset sum and unary 0-1 knapsack."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .charsum import _power_array, charsum_multivariate
from .decider import decide, floor_log2
from .errors import NoFeasibleSubset, Overflow
from .model import (Instance, KnapsackInstance, KnapsackResult, VectorInstance,
                    vector_capacity)
from .numtheory import MODULUS_LIMIT, Residue, next_prime

__all__ = ["KnapsackResult", "PairTable", "scalarize", "vector_decide",
           "vector_count_mod_p", "pair_feasibility", "knapsack_optimize"]


def scalarize(vinstance: VectorInstance) -> Instance:
    """Read each vector as base-C digits: m'_i = sum_j C^(j-1) m_ij.

    Every digit mismatch sum_S m_ij - B_j is below C in absolute value, so
    the scalar sums agree exactly when all components do.
    """
    C = vector_capacity(vinstance)
    if C ** vinstance.k >= MODULUS_LIMIT:
        raise Overflow(f"C^k = {C}^{vinstance.k} is too large to scalarize")
    weights = [C ** j for j in range(vinstance.k)]
    m = [sum(w * x for w, x in zip(weights, row)) for row in vinstance.m]
    return Instance(m, sum(w * b for w, b in zip(weights, vinstance.B)))


def vector_count_mod_p(vinstance: VectorInstance, p: int) -> Residue:
    """A mod p from the k-variate character sum.

    Summing over ((Z/p)^*)^k contributes (p-1)^k = (-1)^k per solution.
    """
    s = charsum_multivariate(vinstance, p)
    return Residue(s.value if vinstance.k % 2 == 0 else -s.value, p)


def vector_decide(vinstance: VectorInstance, method: str = "scalarize") -> bool:
    if method == "scalarize":
        return decide(scalarize(vinstance))[0]
    if method != "multivariate":
        raise ValueError(f"unknown method {method!r}")
    c, p = 0, next_prime(vector_capacity(vinstance))
    while c <= vinstance.n:
        if charsum_multivariate(vinstance, p).value:
            return True
        c += floor_log2(p)
        p = next_prime(p)
    return False


# -- knapsack ---------------------------------------------------------------

class _PrimeLayer:
    """Bivariate character-sum data for one prime p.

    ``suffix[i]`` holds prod_{j >= i} (1 + x^w_j y^v_j) on the grid
    x, y in (Z/p)^*, so any target over any suffix costs one weighted sum.
    """

    def __init__(self, p, w, v):
        self.p = p
        self.xs = np.arange(1, p, dtype=np.int64)
        self._powers: dict[int, np.ndarray] = {}
        grid = np.ones((p - 1, p - 1), dtype=np.int64)
        suffix = [grid]
        for wi, vi in zip(reversed(w), reversed(v)):
            grid = grid * ((1 + np.multiply.outer(self.pw(wi), self.pw(vi)) % p) % p) % p
            suffix.append(grid)
        self.suffix = suffix[::-1]

    def pw(self, e: int) -> np.ndarray:
        e %= self.p - 1
        if e not in self._powers:
            self._powers[e] = _power_array(self.xs, e, self.p)
        return self._powers[e]

    def table(self, ws, vs) -> np.ndarray:
        """Character sums for every target (w, v) over the full item set, mod p."""
        p = self.p
        Ew = np.stack([self.pw(-int(a)) for a in ws])
        Ev = np.stack([self.pw(-int(b)) for b in vs])
        dtype = np.float64 if p ** 3 < 1 << 53 else np.int64  # exact either way
        left = (Ew.astype(dtype) @ self.suffix[0].astype(dtype)) % p
        return ((left @ Ev.T.astype(dtype)) % p).astype(np.int64)

    def single(self, i: int, a: int, b: int) -> int:
        p = self.p
        inner = self.suffix[i] @ self.pw(-b) % p
        return int(self.pw(-a) @ inner % p)


@dataclass
class PairTable:
    """Which (total weight, total value) pairs some subset attains."""

    weights: np.ndarray
    values: np.ndarray
    feasible: np.ndarray  # feasible[a, b] for (weights[a], values[b])
    primes: tuple[int, ...]
    layers: list

    def suffix_feasible(self, i: int, a: int, b: int) -> bool:
        return any(layer.single(i, a, b) for layer in self.layers)


def pair_feasibility(kinstance: KnapsackInstance, max_weight: int | None = None) -> PairTable:
    """Decide every pair (w, v) with |w| <= sum|w_i|, |v| <= sum|v_i| in one sweep.

    This is the multivariate decider run for all targets at once: the primes
    start above the largest capacity any target or later suffix query can
    have, and the loop stops once they carry more than n bits.
    """
    w, v, n = kinstance.w, kinstance.v, kinstance.n
    W, V = sum(map(abs, w)), sum(map(abs, v))
    hi = W if max_weight is None else min(W, max_weight)
    weights = np.arange(-W, hi + 1)
    values = np.arange(-V, V + 1)
    feasible = np.zeros((len(weights), len(values)), dtype=bool)
    layers = []
    c, p = 0, next_prime(1 + 2 * W + 2 * V)
    while c <= n:
        layer = _PrimeLayer(p, w, v)
        layers.append(layer)
        if len(weights):
            feasible |= layer.table(weights, values) != 0
        c += floor_log2(p)
        p = next_prime(p)
    return PairTable(weights, values, feasible, tuple(l.p for l in layers), layers)


def knapsack_optimize(kinstance: KnapsackInstance) -> KnapsackResult:
    """Maximise total value subject to total weight <= B.

    Ties go to the smaller weight.  The witness is fixed item by item in
    index order: item i goes in whenever the rest of the target stays
    reachable, which yields the lexicographically largest inclusion vector.
    """
    table = pair_feasibility(kinstance, max_weight=kinstance.B)
    best = None
    for b in range(len(table.values) - 1, -1, -1):
        hits = np.flatnonzero(table.feasible[:, b])
        if hits.size:
            best = (int(table.weights[hits[0]]), int(table.values[b]))
            break
    if best is None:
        raise NoFeasibleSubset("no subset satisfies the weight bound")

    w, v = kinstance.w, kinstance.v
    tw, tv = best
    chosen = []
    for i in range(kinstance.n):
        rest_w = sum(abs(x) for x in w[i + 1:])
        rest_v = sum(abs(x) for x in v[i + 1:])
        a, b = tw - w[i], tv - v[i]
        if abs(a) <= rest_w and abs(b) <= rest_v and table.suffix_feasible(i + 1, a, b):
            chosen.append(i + 1)
            tw, tv = a, b
    if (tw, tv) != (0, 0):
        raise RuntimeError("witness reconstruction missed the target pair")
    return KnapsackResult(best[1], tuple(chosen))

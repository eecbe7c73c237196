"""Uniform sampling of solutions by sequential conditional counting."""

from __future__ import annotations

import random
from fractions import Fraction

from .counting import approx_count, count_exact
from .errors import NoSolution
from .model import Instance


class SuffixCounts:
    """Solution counts of the sub-instances (m_{i+1}, ..., m_n; target).

    ``approx_bits`` swaps in approximate counts of that many bits.  Results are cached,
    since repeated draws revisit the same sub-instances.
    """

    def __init__(self, instance: Instance, approx_bits: int | None = None):
        self.instance = instance
        self.approx_bits = approx_bits
        self._cache: dict[tuple[int, int], Fraction | int] = {}

    def __call__(self, i: int, target: int):
        """Count for elements with 0-based index >= i."""
        key = (i, target)
        if key not in self._cache:
            rest = self.instance.m[i:]
            if abs(target) > sum(abs(x) for x in rest):
                value = 0
            elif self.approx_bits is None:
                value = count_exact(Instance(rest, target))
            else:
                value = approx_count(Instance(rest, target), self.approx_bits).value
            self._cache[key] = value
        return self._cache[key]


def _as_rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _below(rng: random.Random, a_in, total) -> bool:
    """True with probability a_in / total, compared exactly."""
    if isinstance(total, int) and isinstance(a_in, int):
        return rng.randrange(total) < a_in
    u = Fraction(rng.getrandbits(64), 1 << 64)
    return u * total < a_in


def sample_solution(instance: Instance, seed=None, *, counts: SuffixCounts | None = None,
                    approx_bits: int | None = None) -> tuple[int, ...]:
    """Draw a solution (1-based increasing indices), uniformly when counts are exact.

    Element i goes in with probability A_in / (A_in + A_out), where A_in and
    A_out count the completions of the remaining suffix with and without it.
    ``seed`` may be an int or a ``random.Random``; pass the same generator
    across calls to draw a sequence.
    """
    rng = _as_rng(seed)
    counts = counts or SuffixCounts(instance, approx_bits)
    if counts(0, instance.B) == 0:
        raise NoSolution("instance has no solution")
    chosen = []
    target = instance.B
    for i, m in enumerate(instance.m):
        a_in = counts(i + 1, target - m)
        a_out = counts(i + 1, target)
        total = a_in + a_out
        if total == 0:
            raise RuntimeError(f"conditional counts vanished at element {i + 1}")
        if _below(rng, a_in, total):
            chosen.append(i + 1)
            target -= m
    if target != 0:
        raise RuntimeError("sampler finished off target")
    return tuple(chosen)


def sample_solutions(instance: Instance, seed, samples: int,
                     approx_bits: int | None = None) -> list[tuple[int, ...]]:
    rng = _as_rng(seed)
    counts = SuffixCounts(instance, approx_bits)
    return [sample_solution(instance, rng, counts=counts) for _ in range(samples)]

"""Brute-force ground truth.

Nothing here touches modular arithmetic: counts come from a plain dynamic
program over achievable sums or from enumerating subsets, so a bug in the
character-sum pipeline cannot hide behind a matching bug here.
"""

from __future__ import annotations

from itertools import product

from .errors import NoFeasibleSubset, TooLarge
from .model import Instance, KnapsackInstance, KnapsackResult, VectorInstance

DP_SPAN_LIMIT = 10_000
ENUMERATION_LIMIT = 24


def _count_dp(m, B):
    span = sum(abs(x) for x in m)
    if abs(B) > span:
        return 0
    # ways[s + span] = number of subsets of the prefix with sum s
    ways = [0] * (2 * span + 1)
    ways[span] = 1
    for x in m:
        if x == 0:
            ways = [2 * c for c in ways]
        elif x > 0:
            ways = [ways[s] + (ways[s - x] if s >= x else 0) for s in range(len(ways))]
        else:
            top = len(ways)
            ways = [ways[s] + (ways[s - x] if s - x < top else 0) for s in range(top)]
    return ways[B + span]


def _count_enum(m, B):
    n = len(m)
    return sum(1 for mask in range(1 << n)
               if sum(m[i] for i in range(n) if mask >> i & 1) == B)


def oracle_count(instance: Instance, method: str = "auto") -> int:
    """Exact number of subsets S with sum(m_i, i in S) == B.

    ``method`` is ``"dp"``, ``"enumerate"`` or ``"auto"`` (DP when the sum
    range is small, enumeration otherwise).
    """
    m, B = instance.m, instance.B
    span = sum(abs(x) for x in m)
    if method == "auto":
        if span > DP_SPAN_LIMIT and instance.n > ENUMERATION_LIMIT:
            raise TooLarge(f"n={instance.n} with sum range {span} is out of reach")
        method = "dp" if span <= DP_SPAN_LIMIT else "enumerate"
    if method == "dp":
        if span > DP_SPAN_LIMIT:
            raise TooLarge(f"sum range {span} too wide for the DP oracle")
        return _count_dp(m, B)
    if method == "enumerate":
        if instance.n > ENUMERATION_LIMIT:
            raise TooLarge(f"n={instance.n} too large to enumerate")
        return _count_enum(m, B)
    raise ValueError(f"unknown method {method!r}")


def dp_table_bits(instance: Instance) -> int:
    """Bits held by the DP oracle's table: cells times the widest count."""
    span = sum(abs(x) for x in instance.m)
    return (2 * span + 1) * max(1, instance.n + 1)


def _subsets(n):
    """All subsets of range(n) as index tuples, in lexicographic order."""
    out = [()]
    def grow(prefix, start):
        for i in range(start, n):
            out.append(prefix + (i,))
            grow(prefix + (i,), i + 1)
    grow((), 0)
    return out


def oracle_solutions(instance: Instance) -> list[tuple[int, ...]]:
    """Every solution as a 1-based index tuple, lexicographically sorted."""
    if instance.n > 20:
        raise TooLarge(f"n={instance.n} too large to enumerate")
    m, B = instance.m, instance.B
    return [tuple(i + 1 for i in s) for s in _subsets(instance.n)
            if sum(m[i] for i in s) == B]


def oracle_count_vector(vinstance: VectorInstance) -> int:
    if vinstance.n > 20:
        raise TooLarge(f"n={vinstance.n} too large to enumerate")
    rows, target = vinstance.m, vinstance.B
    count = 0
    for picks in product((0, 1), repeat=vinstance.n):
        sums = [0] * vinstance.k
        for pick, row in zip(picks, rows):
            if pick:
                for j, x in enumerate(row):
                    sums[j] += x
        if tuple(sums) == target:
            count += 1
    return count


def oracle_knapsack(kinstance: KnapsackInstance) -> KnapsackResult:
    """Exhaustive optimum.

    Ties on value go to the smaller total weight, then to the subset whose
    inclusion vector is lexicographically largest (earlier items preferred).
    """
    n = kinstance.n
    if n > 20:
        raise TooLarge(f"n={n} too large to enumerate")
    w, v = kinstance.w, kinstance.v
    best = None
    for picks in product((1, 0), repeat=n):  # lexicographically largest first
        tw = sum(w[i] for i in range(n) if picks[i])
        if tw > kinstance.B:
            continue
        tv = sum(v[i] for i in range(n) if picks[i])
        if best is None or tv > best[0] or (tv == best[0] and tw < best[1]):
            best = (tv, tw, picks)
    if best is None:
        raise NoFeasibleSubset("no subset satisfies the weight bound")
    return KnapsackResult(best[0], tuple(i + 1 for i in range(n) if best[2][i]))

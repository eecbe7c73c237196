"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also collected in the terminal summary.
"""

import itertools
import math
import random
import time
from collections import Counter
from fractions import Fraction

from unarysum.charsum import charsum_mod_p, power_sum
from unarysum.counting import (PrimePower, approx_count, count_mod_prime,
                               count_mod_prime_power, find_bracketing_modulus)
from unarysum.decider import checked_primes, decide
from unarysum.errors import NoFeasibleSubset
from unarysum.model import Instance, KnapsackInstance, VectorInstance, capacity, vector_capacity
from unarysum.numtheory import next_prime
from unarysum.oracle import (dp_table_bits, oracle_count, oracle_count_vector, oracle_knapsack,
                             oracle_solutions)
from unarysum.sampler import sample_solutions
from unarysum.vector import knapsack_optimize, scalarize, vector_count_mod_p

from conftest import primes_upto, random_instance


def _timed(budget):
    start = time.perf_counter()
    return lambda: f"{time.perf_counter() - start:.2f}s (budget {budget}s)"


def test_criterion_01_charsum_identity(acceptance):
    elapsed = _timed(10)
    rng = random.Random(101)
    bad = checks = 0
    for _ in range(500):
        inst = random_instance(rng, n_max=10, mag=6, b_max=20)
        A = oracle_count(inst)
        p = capacity(inst)
        for _ in range(5):
            p = next_prime(p)
            checks += 1
            bad += charsum_mod_p(inst, p).value != -A % p
    acceptance(1, bad == 0, f"{checks} checks, {bad} mismatches, {elapsed()}")
    assert bad == 0


def test_criterion_02_power_sum(acceptance):
    elapsed = _timed(1)
    bad = checks = 0
    for p in primes_upto(31):
        for k in range(-2 * (p - 1), 2 * (p - 1) + 1):
            naive = sum(pow(x, k, p) for x in range(1, p)) % p
            checks += 1
            bad += power_sum(p, k).value != naive
    acceptance(2, bad == 0, f"{checks} (p, k) pairs, {bad} mismatches, {elapsed()}")
    assert bad == 0


def _decision_corpus():
    for n in range(5):
        for m in itertools.product(range(-3, 4), repeat=n):
            for B in range(-6, 7):
                yield Instance(list(m), B)
    rng = random.Random(103)
    for _ in range(500):
        yield random_instance(rng, n_max=12, mag=6, b_max=20)


def test_criterion_03_04_decision(acceptance):
    elapsed = _timed(60)
    total = wrong = falses = unsound = 0
    for inst in _decision_corpus():
        A = oracle_count(inst)
        result, report = decide(inst)
        total += 1
        wrong += result != (A > 0)
        if not result:
            falses += 1
            primes = checked_primes(inst, report.primes_checked)
            ok = all(A % p == 0 for p in primes) and math.prod(primes) > 2 ** inst.n
            unsound += not ok
    acceptance(3, wrong == 0, f"{total} instances, {wrong} wrong answers, {elapsed()}")
    acceptance(4, unsound == 0 and falses > 0,
               f"{falses} false runs, {unsound} with a non-dividing prime or product <= 2^n")
    assert wrong == 0 and unsound == 0 and falses > 0


def test_criterion_05_prime_powers(acceptance):
    elapsed = _timed(30)
    moduli = [(p, k) for p in primes_upto(2000)[1:] for k in range(1, 12) if p ** k <= 2000]
    rng = random.Random(105)
    bad = checks = above = below = 0
    for _ in range(100):
        inst = random_instance(rng, n_max=10, mag=6, b_max=20)
        A, C = oracle_count(inst), capacity(inst)
        for p, k in moduli:
            checks += 1
            if p > C:
                above += 1
            else:
                below += 1
            bad += count_mod_prime_power(inst, PrimePower(p, k)).value != A % p ** k
    passed = bad == 0 and above > 0 and below > 0
    acceptance(5, passed, f"{len(moduli)} moduli x 100 instances, {bad} mismatches "
                          f"(p > C: {above}, p <= C: {below}), {elapsed()}")
    assert passed


def test_criterion_06_small_prime_fields(acceptance):
    elapsed = _timed(30)
    rng = random.Random(106)
    bad = done = 0
    while done < 100:
        inst = random_instance(rng, n_max=10, mag=6, b_max=20)
        if capacity(inst) < 10:
            continue
        done += 1
        A = oracle_count(inst)
        for p in (2, 3, 5, 7):
            bad += count_mod_prime(inst, p).value != A % p
    acceptance(6, bad == 0, f"100 instances with C >= 10, {bad} mismatches, {elapsed()}")
    assert bad == 0


def test_criterion_07_approximation(acceptance):
    elapsed = _timed(60)
    rng = random.Random(107)
    t = 12
    bound_fail = bracket_fail = done = ones = 0
    worst = Fraction(0)
    while done < 100:
        inst = random_instance(rng, n_max=22, mag=3, b_max=12)
        A = oracle_count(inst)
        if A == 0:
            continue
        done += 1
        est = approx_count(inst, t)
        rel = abs(est.value - A) / A
        worst = max(worst, rel)
        bound_fail += rel > Fraction(1, 2 ** (t - 3))
        N = find_bracketing_modulus(inst).N
        if A == 1:
            # (1, 2) holds no integer; N = 2 is the tightest basket
            ones += 1
            bracket_fail += N != 2
        else:
            bracket_fail += not (A < N < 2 * A)
    passed = bound_fail == 0 and bracket_fail == 0
    acceptance(7, passed, f"100 instances, worst relative error {float(worst):.2e} "
                          f"(bound {2.0 ** -(t - 3):.2e}), {bracket_fail} bracket failures, "
                          f"{ones} with A = 1 given N = 2, {elapsed()}")
    assert passed


def _tv_to_uniform(inst, seed, draws):
    solutions = oracle_solutions(inst)
    samples = sample_solutions(inst, seed, draws)
    valid = all(sum(inst.m[i - 1] for i in s) == inst.B for s in samples)
    freq = Counter(samples)
    tv = 0.5 * sum(abs(freq.get(s, 0) / draws - 1 / len(solutions)) for s in solutions)
    tv += 0.5 * sum(c / draws for s, c in freq.items() if s not in solutions)
    return tv, valid, len(solutions)


def test_criterion_08_sampler(acceptance):
    elapsed = _timed(30)
    cases = [Instance([1, 2, 3], 3), Instance([1, 1, 1, 1], 2), Instance([1, 2, 3, 4, 5, 6], 6)]
    results = [_tv_to_uniform(inst, 800 + j, 10_000) for j, inst in enumerate(cases)]
    passed = all(tv <= 0.05 and valid for tv, valid, _ in results)
    summary = ", ".join(f"{k} solutions TV {tv:.4f}" for tv, _, k in results)
    acceptance(8, passed, f"{summary}, {elapsed()}")
    assert passed
    assert all(4 <= k <= 8 for _, _, k in results[1:])


def _random_vector_instance(rng):
    k = rng.randint(1, 3)
    rows = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(rng.randint(0, 8))]
    if rows and rng.random() < 0.6:
        picks = [r for r in rows if rng.random() < 0.5]
        B = [sum(r[j] for r in picks) for j in range(k)]
    else:
        B = [rng.randint(-6, 6) for _ in range(k)]
    return VectorInstance(rows, B)


def test_criterion_09_vectors(acceptance):
    elapsed = _timed(60)
    rng = random.Random(109)
    count_bad = residue_bad = 0
    for _ in range(200):
        V = _random_vector_instance(rng)
        A = oracle_count_vector(V)
        count_bad += A != oracle_count(scalarize(V))
        p = vector_capacity(V)
        for _ in range(3):
            p = next_prime(p)
            residue_bad += vector_count_mod_p(V, p).value != A % p
    passed = count_bad == 0 and residue_bad == 0
    acceptance(9, passed, f"200 instances, {count_bad} count mismatches, "
                          f"{residue_bad} residue mismatches, {elapsed()}")
    assert passed


def test_criterion_10_knapsack(acceptance):
    elapsed = _timed(60)
    rng = random.Random(110)
    bad = infeasible = 0
    for _ in range(200):
        n = rng.randint(0, 12)
        w = [rng.randint(-8, 8) for _ in range(n)]
        v = [rng.randint(-8, 8) for _ in range(n)]
        K = KnapsackInstance(w, v, rng.randint(-8, max(0, sum(map(abs, w)) // 2)))
        try:
            want = oracle_knapsack(K)
        except NoFeasibleSubset:
            infeasible += 1
            try:
                knapsack_optimize(K)
                bad += 1
            except NoFeasibleSubset:
                pass
            continue
        bad += knapsack_optimize(K) != want
    acceptance(10, bad == 0, f"200 instances ({infeasible} infeasible), {bad} mismatches, "
                             f"{elapsed()}")
    assert bad == 0


def test_criterion_11_space_scaling(acceptance):
    elapsed = _timed(60)
    K = 16
    rows = []
    for n in (8, 16, 32, 64):
        inst = Instance([1] * n, n)
        C = capacity(inst)
        result, report = decide(inst, metered=True)
        assert result
        bound = K * math.log2(n * C + 2)
        rows.append((n, C, report.peak_bits, bound, dp_table_bits(inst)))
    passed = all(peak <= bound for _, _, peak, bound, _ in rows)
    curve = "; ".join(f"n={n} C={C} peak={peak} bound={bound:.1f} "
                      f"K_fit={peak / math.log2(n * C + 2):.2f} dp_bits={dp}"
                      for n, C, peak, bound, dp in rows)
    acceptance(11, passed, f"{curve}, {elapsed()}")
    assert passed

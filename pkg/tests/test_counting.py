import random
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unarysum.counting import (ModulusBasket, PrimePower, approx_count, approx_fraction,
                               count_exact, count_mod_prime, count_mod_prime_power,
                               crt_combine, field_degree, find_bracketing_modulus)
from unarysum.errors import DuplicatePrime, OddPrimeRequired, ZeroCount
from unarysum.model import Instance, capacity
from unarysum.numtheory import is_prime
from unarysum.oracle import oracle_count

from conftest import primes_upto, random_instance

I123 = Instance([1, 2, 3], 3)


@pytest.mark.parametrize("m,B,p,expected", [
    ([1, 2, 3], 3, 13, 2),
    ([1, 2, 3], 3, 2, 0),
    ([0, 0], 0, 3, 1),
])
def test_count_mod_prime_examples(m, B, p, expected):
    assert count_mod_prime(Instance(m, B), p).value == expected


def test_count_mod_prime_both_branches():
    rng = random.Random(12)
    below = above = 0
    for _ in range(40):
        inst = random_instance(rng, n_max=8, mag=4, b_max=12)
        A = oracle_count(inst)
        for p in primes_upto(31):
            assert count_mod_prime(inst, p).value == A % p
            if p > capacity(inst):
                above += 1
            else:
                below += 1
    assert above > 50 and below > 50


def test_field_degree():
    assert field_degree(I123, 2) == 4
    assert field_degree(I123, 3) == 3
    assert field_degree(I123, 11) == 1


@pytest.mark.parametrize("m,B,p,k,expected", [
    ([1, 2, 3], 3, 11, 2, (2, 121)),
    ([1, 2, 3], 3, 3, 1, (2, 3)),
    ([1], 2, 5, 3, (0, 125)),
])
def test_count_mod_prime_power_examples(m, B, p, k, expected):
    r = count_mod_prime_power(Instance(m, B), PrimePower(p, k))
    assert (r.value, r.modulus) == expected


def test_count_mod_prime_power_random():
    rng = random.Random(13)
    for _ in range(25):
        inst = random_instance(rng, n_max=8, mag=4, b_max=12)
        A = oracle_count(inst)
        for p, k in [(3, 1), (3, 3), (5, 2), (7, 2), (11, 2), (13, 1), (29, 2)]:
            assert count_mod_prime_power(inst, PrimePower(p, k)).value == A % p ** k


def test_prime_power_validation():
    with pytest.raises(OddPrimeRequired):
        count_mod_prime_power(I123, PrimePower(2, 3))
    with pytest.raises(ValueError):
        PrimePower(9, 1)
    with pytest.raises(ValueError):
        PrimePower(3, 0)
    assert str(PrimePower(3, 2)) == "3^2"


@pytest.mark.parametrize("m,B,expected", [([1, 2, 3], 3, 2), ([0, 0], 0, 4), ([1], 2, 0)])
def test_count_exact_examples(m, B, expected):
    assert count_exact(Instance(m, B)) == expected


def test_count_exact_random():
    rng = random.Random(14)
    for _ in range(150):
        inst = random_instance(rng, n_max=12)
        assert count_exact(inst) == oracle_count(inst)
    assert count_exact(Instance([0] * 20, 0)) == 2 ** 20


@given(st.lists(st.sampled_from(primes_upto(60)), min_size=1, max_size=4, unique=True),
       st.integers(0, 10 ** 9))
def test_crt_combine_identity(primes, x):
    N = prod(primes)
    assert crt_combine({p: x % p for p in primes}) == (x % N, N)


def test_basket_rejects_duplicates():
    with pytest.raises(DuplicatePrime):
        ModulusBasket((11, 13, 11))
    assert ModulusBasket((11, 13)).N == 143
    assert ModulusBasket((11, 13)).cofactor(11) == 13


def test_approx_fraction_examples():
    f = approx_fraction(I123, ModulusBasket((11, 13)), 16)
    assert abs(f.numerator - 917) <= 1
    assert approx_fraction(Instance([1], 2), ModulusBasket((5, 7)), 10).numerator == 0
    assert abs(approx_fraction(I123, ModulusBasket((11,)), 8).numerator - 47) <= 1
    with pytest.raises(ValueError):
        approx_fraction(I123, ModulusBasket((11,)), 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 31), st.integers(0, 9),
       st.lists(st.sampled_from(primes_upto(200)), min_size=1, max_size=6, unique=True),
       st.integers(4, 40))
def test_approx_fraction_error_bound(seed, n, primes, t):
    inst = random_instance(random.Random(seed), n_max=n, mag=4, b_max=10)
    A = oracle_count(inst)
    basket = ModulusBasket(tuple(primes))
    exact = Fraction(A % basket.N, basket.N)
    got = Fraction(approx_fraction(inst, basket, t).numerator, 1 << t)
    err = abs(got - exact)
    err = min(err, 1 - err)  # distance on the circle R/Z
    assert err < Fraction(2, 1 << t)


@pytest.mark.parametrize("m,B", [([1, 2, 3], 3), ([0], 0)])
def test_bracketing_examples(m, B):
    assert find_bracketing_modulus(Instance(m, B)).N == 3


def test_bracketing_zero_count():
    with pytest.raises(ZeroCount):
        find_bracketing_modulus(Instance([1], 2))


def test_bracketing_random():
    rng = random.Random(15)
    seen = 0
    for _ in range(120):
        inst = random_instance(rng, n_max=12, mag=3)
        A = oracle_count(inst)
        if A == 0:
            continue
        seen += 1
        basket = find_bracketing_modulus(inst)
        assert len(set(basket.primes)) == len(basket.primes)
        assert all(is_prime(p) for p in basket.primes)
        if A == 1:
            assert basket.N == 2
        else:
            assert A < basket.N < 2 * A
    assert seen > 40


def test_bracketing_exact_half_case():
    # powers of two make the shrink loop land on N = 2A exactly
    for k in range(1, 9):
        inst = Instance([0] * k, 0)
        basket = find_bracketing_modulus(inst)
        A = 2 ** k
        assert A < basket.N < 2 * A


@pytest.mark.parametrize("m,B,value,zero", [
    ([1, 2, 3], 3, 2, False),
    ([1], 2, 0, True),
    ([0, 0, 0], 0, 8, False),
])
def test_approx_count_examples(m, B, value, zero):
    est = approx_count(Instance(m, B), 8)
    assert est.zero is zero
    assert est.value == value
    if not zero:
        assert 1 << 7 <= est.mantissa < 1 << 8


def test_approx_count_error_bound():
    rng = random.Random(16)
    for _ in range(80):
        inst = random_instance(rng, n_max=14, mag=3, b_max=8)
        A = oracle_count(inst)
        for t in (4, 6, 10):
            est = approx_count(inst, t)
            if A == 0:
                assert est.zero and est.mantissa == 0
            else:
                assert 1 << (t - 1) <= est.mantissa < 1 << t
                assert abs(est.value - A) <= Fraction(A, 1 << (t - 3))


def test_approx_count_large_count():
    est = approx_count(Instance([0] * 40, 0), 8)
    assert est.value == 2 ** 40


def test_approx_count_rejects_small_t():
    with pytest.raises(ValueError):
        approx_count(I123, 3)

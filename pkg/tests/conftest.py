import random

import pytest

from unarysum.model import Instance

ACCEPTANCE_LINES = []


def random_instance(rng: random.Random, n_max=10, mag=6, b_max=20, n_min=0) -> Instance:
    n = rng.randint(n_min, n_max)
    m = [rng.randint(-mag, mag) for _ in range(n)]
    if m and rng.random() < 0.5:
        # aim at an attainable target half the time so A > 0 shows up often
        B = sum(x for x in m if rng.random() < 0.5)
        B = max(-b_max, min(b_max, B))
    else:
        B = rng.randint(-b_max, b_max)
    return Instance(m, B)


def naive_charsum(m, B, p):
    """sum_{x=1}^{p-1} x^-B prod(1 + x^m_i) with exact rationals, then reduced mod p."""
    from fractions import Fraction
    total = Fraction(0)
    for x in range(1, p):
        term = Fraction(x) ** -B
        for mi in m:
            term *= 1 + Fraction(x) ** mi
        total += term
    # the denominator is a product of powers of x < p, hence prime to p
    return total.numerator * pow(total.denominator, -1, p) % p


def primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[:2] = [False] * min(2, n + 1)
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = [False] * len(sieve[i * i::i])
    return [i for i, ok in enumerate(sieve) if ok]


@pytest.fixture
def acceptance():
    def record(number, passed, detail):
        line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

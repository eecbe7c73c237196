"""The prime-sweep decider and the working-space meter.

The decider walks primes p > C.  A nonzero character sum at any of them
certifies A != 0 mod p, hence a solution exists.  Each prime that yields
zero divides A, and once the checked primes carry more than n bits their
product exceeds 2^n >= A, forcing A = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charsum import charsum_mod_p
from .model import Instance, capacity
from .numtheory import next_prime

REGISTERS = ("c", "p", "x", "i", "total", "product", "scratch", "cursor")


class SpaceMeter:
    """Tracks the peak total bit width of live working registers.

    A register's width is the bit length of the largest value it has held so
    far.  The peak is the largest sum of widths over registers that were live
    at the same moment.  The input tape and the output are not charged.
    """

    def __init__(self):
        self.widths: dict[str, int] = {}
        self.live: set[str] = set()
        self.peak_bits = 0

    def register(self, name: str, bit_width: int = 1) -> "SpaceMeter":
        self.widths[name] = max(self.widths.get(name, 0), bit_width)
        self.live.add(name)
        self._observe()
        return self

    def update(self, name: str, value: int) -> "SpaceMeter":
        width = max(1, abs(value).bit_length())
        if width > self.widths.get(name, 0) or name not in self.live:
            self.widths[name] = max(self.widths.get(name, 0), width)
            self.live.add(name)
            self._observe()
        return self

    def release(self, name: str) -> None:
        self.live.discard(name)

    @property
    def live_bits(self) -> int:
        return sum(self.widths[name] for name in self.live)

    def _observe(self):
        bits = self.live_bits
        if bits > self.peak_bits:
            self.peak_bits = bits


def meter_register(meter: SpaceMeter, name: str, bit_width: int) -> SpaceMeter:
    return meter.register(name, bit_width)


def meter_update(meter: SpaceMeter, name: str, value: int) -> SpaceMeter:
    return meter.update(name, value)


@dataclass(frozen=True)
class SpaceReport:
    peak_bits: int
    primes_checked: int
    result: bool

    def to_dict(self) -> dict:
        return {"peak_bits": self.peak_bits, "primes_checked": self.primes_checked,
                "result": self.result}


@dataclass
class DeciderState:
    c: int  # sum of floor(log2 p') over primes already checked
    p: int  # next prime to check


def floor_log2(p: int) -> int:
    return p.bit_length() - 1


def _next_prime_metered(u: int, meter: SpaceMeter) -> int:
    # trial divisors go through the scratch register
    c = max(u + 1, 2)
    while True:
        meter.update("p", c)
        if c < 4:
            return c
        d = 2
        while d * d <= c:
            meter.update("scratch", d)
            if c % d == 0:
                break
            d += 1
        else:
            meter.release("scratch")
            return c
        c += 1


def decide(instance: Instance, metered: bool = False) -> tuple[bool, SpaceReport]:
    """Does some subset of ``instance.m`` sum to ``instance.B``?

    Returns the answer with a SpaceReport.  Unmetered runs report
    ``peak_bits = 0``.
    """
    C = capacity(instance)
    n = instance.n
    meter = SpaceMeter() if metered else None
    if meter is None:
        state = DeciderState(0, next_prime(C))
    else:
        meter.update("c", 0)
        state = DeciderState(0, _next_prime_metered(C, meter))

    checked = 0
    result = False
    while state.c <= n:
        checked += 1
        if charsum_mod_p(instance, state.p, meter).value != 0:
            result = True
            break
        state.c += floor_log2(state.p)
        if meter is None:
            state.p = next_prime(state.p)
        else:
            meter.update("c", state.c)
            state.p = _next_prime_metered(state.p, meter)
    peak = meter.peak_bits if meter is not None else 0
    return result, SpaceReport(peak, checked, result)


def checked_primes(instance: Instance, count: int) -> list[int]:
    """The first ``count`` primes the decider visits for this instance."""
    out, p = [], capacity(instance)
    for _ in range(count):
        p = next_prime(p)
        out.append(p)
    return out


"""Problem instances, capacity, JSON documents and the read-only input tape."""

from __future__ import annotations

import contextlib
import contextvars
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CapacityExceeded, ParseError, ShapeError

DEFAULT_MAX_CAPACITY = 100_000

_max_capacity = contextvars.ContextVar("max_capacity", default=DEFAULT_MAX_CAPACITY)


def get_max_capacity() -> int:
    return _max_capacity.get()


@contextlib.contextmanager
def max_capacity(limit: int):
    """Temporarily change the capacity cap enforced by :func:`capacity`."""
    if limit < 1:
        raise ValueError("capacity limit must be positive")
    token = _max_capacity.set(limit)
    try:
        yield limit
    finally:
        _max_capacity.reset(token)


def _check_cap(value: int) -> int:
    limit = _max_capacity.get()
    if value > limit:
        raise CapacityExceeded(f"capacity {value} exceeds limit {limit}")
    return value


@dataclass(frozen=True)
class Instance:
    """Scalar subset-sum instance: is there S with sum(m[i] for i in S) == B?"""

    m: tuple[int, ...]
    B: int

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "B", int(self.B))

    @property
    def n(self) -> int:
        return len(self.m)


@dataclass(frozen=True)
class VectorInstance:
    m: tuple[tuple[int, ...], ...]
    B: tuple[int, ...]

    def __post_init__(self):
        B = tuple(int(x) for x in self.B)
        if not B:
            raise ShapeError("vector target must have dimension k >= 1")
        rows = tuple(tuple(int(x) for x in row) for row in self.m)
        for row in rows:
            if len(row) != len(B):
                raise ShapeError(f"row {list(row)} does not have dimension {len(B)}")
        object.__setattr__(self, "m", rows)
        object.__setattr__(self, "B", B)

    @property
    def n(self) -> int:
        return len(self.m)

    @property
    def k(self) -> int:
        return len(self.B)


@dataclass(frozen=True)
class KnapsackInstance:
    w: tuple[int, ...]
    v: tuple[int, ...]
    B: int

    def __post_init__(self):
        if len(self.w) != len(self.v):
            raise ShapeError(f"{len(self.w)} weights but {len(self.v)} values")
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        object.__setattr__(self, "B", int(self.B))

    @property
    def n(self) -> int:
        return len(self.w)


@dataclass(frozen=True)
class KnapsackResult:
    value: int
    subset: tuple[int, ...]  # 1-based, increasing


def capacity(instance: Instance) -> int:
    """C = |B| + sum |m_i| + 1; raises CapacityExceeded above the configured cap."""
    return _check_cap(abs(instance.B) + sum(abs(x) for x in instance.m) + 1)


def vector_capacity(vinstance: VectorInstance) -> int:
    total = sum(abs(x) for row in vinstance.m for x in row)
    return _check_cap(1 + total + sum(abs(x) for x in vinstance.B))


# -- JSON documents ---------------------------------------------------------

def _int(value, where):
    # bool is an int subclass; JSON true/false are not integers here
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected integer, got {value!r}")
    return value


def _int_list(value, where):
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected array, got {value!r}")
    return [_int(x, f"{where}[{i}]") for i, x in enumerate(value)]


def _require_keys(doc, keys):
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise ParseError(f"missing key(s): {', '.join(missing)}")
    extra = sorted(set(doc) - set(keys))
    if extra:
        raise ParseError(f"unexpected key(s): {', '.join(extra)}")


def parse_instance(text: str, kind: str = "scalar"):
    """Parse a JSON instance document of the given kind.

    ``kind`` is one of ``"scalar"``, ``"vector"`` or ``"knapsack"``.
    Capacity is checked against the active cap before returning.
    """
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise ParseError(f"malformed JSON: {exc}") from None

    if kind == "scalar":
        _require_keys(doc, ("m", "B"))
        inst = Instance(_int_list(doc["m"], "m"), _int(doc["B"], "B"))
        capacity(inst)
        return inst
    if kind == "vector":
        _require_keys(doc, ("m", "B"))
        if not isinstance(doc["m"], list):
            raise ParseError("m: expected array of rows")
        rows = [_int_list(row, f"m[{i}]") for i, row in enumerate(doc["m"])]
        inst = VectorInstance(rows, _int_list(doc["B"], "B"))
        vector_capacity(inst)
        return inst
    if kind == "knapsack":
        _require_keys(doc, ("w", "v", "B"))
        return KnapsackInstance(_int_list(doc["w"], "w"), _int_list(doc["v"], "v"),
                                _int(doc["B"], "B"))
    raise ValueError(f"unknown instance kind {kind!r}")


def to_document(instance) -> dict:
    if isinstance(instance, Instance):
        return {"m": list(instance.m), "B": instance.B}
    if isinstance(instance, VectorInstance):
        return {"m": [list(r) for r in instance.m], "B": list(instance.B)}
    if isinstance(instance, KnapsackInstance):
        return {"w": list(instance.w), "v": list(instance.v), "B": instance.B}
    raise TypeError(f"not an instance: {instance!r}")


def dumps(instance) -> str:
    """Canonical single-line JSON form of an instance."""
    return json.dumps(to_document(instance), separators=(",", ":"))


# -- input tape -------------------------------------------------------------

class TapeCursor:
    """Read-only, rewindable cursor over the m sequence of an instance.

    Streaming evaluators read the input through this cursor only, one pass per
    summation point.  The position is the only state it owns; when a space
    meter is attached, the position is charged to the ``cursor`` register.
    """

    __slots__ = ("_values", "position", "rewinds", "meter")

    def __init__(self, values: Sequence[int], meter=None):
        self._values = values
        self.position = 0
        self.rewinds = 0
        self.meter = meter
        if meter is not None:
            meter.update("cursor", 0)

    def __len__(self):
        return len(self._values)

    @property
    def exhausted(self) -> bool:
        return self.position >= len(self._values)

    @property
    def position_bits(self) -> int:
        return max(1, len(self._values).bit_length())

    def read(self) -> int:
        if self.position >= len(self._values):
            raise EOFError("tape exhausted")
        value = self._values[self.position]
        self.position += 1
        if self.meter is not None:
            self.meter.update("cursor", self.position)
        return value

    def rewind(self) -> None:
        self.position = 0
        self.rewinds += 1
        if self.meter is not None:
            self.meter.update("cursor", 0)

    def __iter__(self) -> Iterator[int]:
        """One full pass from the current position to the end."""
        while self.position < len(self._values):
            yield self.read()


def scan(instance, meter=None) -> TapeCursor:
    return TapeCursor(instance.m, meter)

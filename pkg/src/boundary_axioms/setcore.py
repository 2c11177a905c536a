"""Finite universes, subset bitmasks and operator tables.

A universe of ``n`` elements is named ``0..n-1``.  A subset is encoded as an
integer whose bit ``i`` is set iff element ``i`` belongs to it; that integer is
the subset's *code* and indexes operator tables directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_N = 6


class UniverseMismatchError(ValueError):
    """Raised when two objects bound to different universes are combined."""


class ParseError(ValueError):
    """Base class for operator-file parse failures."""


class MalformedTableError(ParseError):
    pass


class CodeOutOfRangeError(ParseError):
    pass


class IncompleteTableError(ParseError):
    pass


class DuplicateCodeError(ParseError):
    pass


@dataclass(frozen=True)
class Universe:
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise TypeError(f"element count must be an int, got {self.n!r}")
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"element count must satisfy 0 <= n <= {MAX_N}, got {self.n}")

    @property
    def size(self) -> int:
        """Number of subsets, 2^n."""
        return 1 << self.n

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def codes(self) -> range:
        return range(self.size)

    def check_code(self, code: int) -> int:
        if not 0 <= code < self.size:
            raise ValueError(f"subset code {code} out of range for n={self.n}")
        return code

    def mask(self, code: int) -> SubsetMask:
        return SubsetMask(self, code)

    def subset(self, elements: Iterable[int]) -> SubsetMask:
        return SubsetMask.from_elements(self, elements)

    @property
    def empty(self) -> SubsetMask:
        return SubsetMask(self, 0)

    @property
    def whole(self) -> SubsetMask:
        return SubsetMask(self, self.full)


@dataclass(frozen=True)
class SubsetMask:
    universe: Universe
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < self.universe.size:
            raise ValueError(f"bits {self.bits} out of range for n={self.universe.n}")

    @classmethod
    def from_elements(cls, universe: Universe, elements: Iterable[int]) -> SubsetMask:
        bits = 0
        for x in elements:
            if not 0 <= x < universe.n:
                raise ValueError(f"element {x} not in universe of size {universe.n}")
            bits |= 1 << x
        return cls(universe, bits)

    def _same(self, other: SubsetMask) -> None:
        if self.universe != other.universe:
            raise UniverseMismatchError(
                f"universe mismatch: n={self.universe.n} vs n={other.universe.n}"
            )

    def union(self, other: SubsetMask) -> SubsetMask:
        self._same(other)
        return SubsetMask(self.universe, self.bits | other.bits)

    def intersection(self, other: SubsetMask) -> SubsetMask:
        self._same(other)
        return SubsetMask(self.universe, self.bits & other.bits)

    def difference(self, other: SubsetMask) -> SubsetMask:
        self._same(other)
        return SubsetMask(self.universe, self.bits & ~other.bits)

    def complement(self) -> SubsetMask:
        return SubsetMask(self.universe, self.universe.full & ~self.bits)

    def is_subset(self, other: SubsetMask) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def equals(self, other: SubsetMask) -> bool:
        self._same(other)
        return self.bits == other.bits

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __invert__ = complement
    __le__ = is_subset

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.universe.n and bool(self.bits >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(elements_of(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return render_subset(self.bits)


def elements_of(code: int) -> list[int]:
    out = []
    i = 0
    while code:
        if code & 1:
            out.append(i)
        code >>= 1
        i += 1
    return out


def render_subset(code: int, one_based: bool = False) -> str:
    shift = 1 if one_based else 0
    return "{" + ",".join(str(x + shift) for x in elements_of(code)) + "}"


def submasks(code: int) -> Iterator[int]:
    """Yield every subset of ``code`` in ascending order, ``0`` and ``code`` included."""
    bits = elements_of(code)
    for k in range(1 << len(bits)):
        s = 0
        for j, b in enumerate(bits):
            if k >> j & 1:
                s |= 1 << b
        yield s


def supermasks(code: int, full: int) -> Iterator[int]:
    """Yield every superset of ``code`` inside ``full`` in ascending order."""
    for s in submasks(full & ~code):
        yield code | s


@dataclass(frozen=True)
class OperatorTable:
    """A total map P(X) -> P(X); ``table[code(A)]`` is the code of op(A)."""

    universe: Universe
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.universe.size:
            raise ValueError(
                f"table has {len(self.table)} entries, expected {self.universe.size}"
            )
        for code, value in enumerate(self.table):
            if not 0 <= value < self.universe.size:
                raise ValueError(f"entry {code} -> {value} out of range for n={self.universe.n}")

    @classmethod
    def from_list(cls, n: int, values: Sequence[int]) -> OperatorTable:
        return cls(Universe(n), tuple(values))

    @property
    def n(self) -> int:
        return self.universe.n

    def __getitem__(self, code: int) -> int:
        return self.table[code]

    def __len__(self) -> int:
        return len(self.table)

    def apply(self, a: SubsetMask) -> SubsetMask:
        if a.universe != self.universe:
            raise UniverseMismatchError(
                f"universe mismatch: operator n={self.n}, subset n={a.universe.n}"
            )
        return SubsetMask(self.universe, self.table[a.bits])

    __call__ = apply


def apply(op: OperatorTable, a: SubsetMask) -> SubsetMask:
    return op.apply(a)


def operators_equal(p: OperatorTable, q: OperatorTable) -> bool:
    if p.universe != q.universe:
        raise UniverseMismatchError(f"universe mismatch: n={p.n} vs n={q.n}")
    return p.table == q.table


def identity(n: int) -> OperatorTable:
    return OperatorTable(Universe(n), tuple(range(1 << n)))


def constant(n: int, code: int) -> OperatorTable:
    u = Universe(n)
    u.check_code(code)
    return OperatorTable(u, (code,) * u.size)


def from_function(n: int, fn) -> OperatorTable:
    """Tabulate ``fn(code) -> code`` over every subset code."""
    u = Universe(n)
    return OperatorTable(u, tuple(fn(c) for c in u.codes()))


# ---------------------------------------------------------------------------
# file format


def serialize(op: OperatorTable) -> str:
    """Canonical text form: compact JSON, keys in ascending code order."""
    body = ",".join(f'"{code}":{value}' for code, value in enumerate(op.table))
    return f'{{"n":{op.n},"map":{{{body}}}}}'


def _pairs_rejecting_duplicates(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise DuplicateCodeError(f"duplicate code {key!r}")
        seen[key] = value
    return seen


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedTableError(f"{what} must be an integer, got {value!r}")
    return value


def parse(text: str) -> OperatorTable:
    try:
        obj = json.loads(text, object_pairs_hook=_pairs_rejecting_duplicates)
    except json.JSONDecodeError as exc:
        raise MalformedTableError(
            f"malformed input at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(obj, dict):
        raise MalformedTableError("top level must be an object")
    extra = set(obj) - {"n", "map"}
    if extra:
        raise MalformedTableError(f"unexpected fields: {sorted(extra)}")
    if "n" not in obj or "map" not in obj:
        raise MalformedTableError('object must have fields "n" and "map"')
    n = _as_int(obj["n"], '"n"')
    if not 0 <= n <= MAX_N:
        raise MalformedTableError(f'"n" must satisfy 0 <= n <= {MAX_N}, got {n}')
    mapping = obj["map"]
    if not isinstance(mapping, dict):
        raise MalformedTableError('"map" must be an object')
    size = 1 << n
    table: list[int | None] = [None] * size
    for key, value in mapping.items():
        if not key.isdigit() or (len(key) > 1 and key[0] == "0"):
            raise MalformedTableError(f"key {key!r} is not a decimal subset code")
        code = int(key)
        if code >= size:
            raise CodeOutOfRangeError(f"key {code} out of range for n={n}")
        v = _as_int(value, f"value for key {code}")
        if not 0 <= v < size:
            raise CodeOutOfRangeError(f"value {v} for key {code} out of range for n={n}")
        table[code] = v
    missing = [c for c, v in enumerate(table) if v is None]
    if missing:
        raise IncompleteTableError(f"incomplete table: missing codes {missing}")
    return OperatorTable(Universe(n), tuple(table))  # type: ignore[arg-type]

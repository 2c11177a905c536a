"""The five independence counterexamples d1..d5 and two reference closures.

The published examples name elements 1..n; here element ``i`` is ``i-1``.
Claimed violations are stored as published and never adjusted to match the
brute-force result.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import BETA, AxiomId, AxiomSystem, CheckReport, check_system
from .setcore import OperatorTable, Universe, elements_of, from_function

OK = "OK"
DISCREPANCY = "DISCREPANCY"

INF = float("inf")


def make_d1(n: int) -> OperatorTable:
    """Constant-X operator."""
    if n < 1:
        raise ValueError("d1 needs a nonempty universe (n >= 1)")
    full = (1 << n) - 1
    return from_function(n, lambda a: full)


def _dist(x: int, members: list[int]) -> float:
    return min((abs(x - m) for m in members), default=INF)


def make_d2(n: int) -> OperatorTable:
    """Two-sided boundary on the path 0-1-...-(n-1).

    x belongs to op(A) iff its distance to A or to X∖A is exactly 1, with the
    distance to the empty set taken as infinite.  This restricts the example
    on the natural numbers to a finite window.
    """
    if n < 3:
        raise ValueError("d2 needs a window of at least 3 points")
    u = Universe(n)

    def value(a: int) -> int:
        inside = elements_of(a)
        outside = elements_of(u.full & ~a)
        out = 0
        for x in range(n):
            if _dist(x, inside) == 1 or _dist(x, outside) == 1:
                out |= 1 << x
        return out

    return from_function(n, value)


def make_d3() -> OperatorTable:
    """n=3: ∅, X ↦ ∅; singletons ↦ themselves; doubletons ↦ their complements."""

    def value(a: int) -> int:
        k = a.bit_count()
        if k == 1:
            return a
        if k == 2:
            return 0b111 & ~a
        return 0

    return from_function(3, value)


_D4_CASES = {
    0b000: 0b000, 0b111: 0b000,
    0b001: 0b010, 0b110: 0b010,
    0b010: 0b001, 0b101: 0b001,
    0b100: 0b011, 0b011: 0b011,
}


def make_d4() -> OperatorTable:
    """n=3 case table, transcribed as published (0-based).

    {0},{1,2} -> {1}; {1},{0,2} -> {0}; {2},{0,1} -> {0,1}; ∅, X -> ∅.
    """
    return from_function(3, _D4_CASES.__getitem__)


def make_d5(n: int, x0: int = 0) -> OperatorTable:
    """A ↦ A ∪ {x0} for nonempty A, ∅ ↦ ∅."""
    if n < 1:
        raise ValueError("d5 needs a nonempty universe (n >= 1)")
    if not 0 <= x0 < n:
        raise ValueError(f"x0={x0} is not an element of a universe of size {n}")
    return from_function(n, lambda a: a | (1 << x0) if a else 0)


def make_discrete(n: int) -> OperatorTable:
    """Closure of the discrete topology (the identity)."""
    return from_function(n, lambda a: a)


def make_indiscrete(n: int) -> OperatorTable:
    """Closure of the indiscrete topology: ∅ ↦ ∅, everything else ↦ X."""
    full = (1 << n) - 1
    return from_function(n, lambda a: full if a else 0)


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    operator: OperatorTable
    claimed_violations: frozenset[AxiomId]
    notes: tuple[str, ...] = ()
    computed_violations: frozenset[AxiomId] = field(default=frozenset())

    @property
    def label(self) -> str:
        return f"{self.name}(n={self.operator.n})"


@dataclass(frozen=True)
class GalleryResult:
    entry: GalleryEntry
    status: str
    report: CheckReport

    @property
    def missing(self) -> frozenset[AxiomId]:
        """Claimed violations that brute force does not find."""
        return self.entry.claimed_violations - self.entry.computed_violations

    @property
    def unexpected(self) -> frozenset[AxiomId]:
        """Violations found by brute force among B1..B5 that are not claimed."""
        return (self.entry.computed_violations & frozenset(BETA)) - self.entry.claimed_violations

    def to_dict(self) -> dict:
        return {
            "name": self.entry.name,
            "n": self.entry.operator.n,
            "status": self.status,
            "claimed": sorted(a.value for a in self.entry.claimed_violations),
            "computed": sorted(a.value for a in self.entry.computed_violations),
            "notes": list(self.entry.notes),
            "report": self.report.to_dict(),
        }


_D3_NOTE = (
    "assumed erratum: the printed case list repeats {1,2}; the third doubleton "
    "is read as {1,3} (0-based {0,2}), so every doubleton maps to its complement"
)


_CLOSURE_NOTE = "closure operator: expected to satisfy B1..B4 and to fail B5"


def default_gallery() -> list[GalleryEntry]:
    """Entries whose claimed violations are checked by ``verify_gallery``."""
    b = AxiomId
    entries = [
        GalleryEntry("d1", make_d1(3), frozenset({b.B1})),
    ]
    for n in range(3, 7):
        entries.append(
            GalleryEntry(
                "d2", make_d2(n), frozenset({b.B2}),
                ("finite window {0,...,n-1} in place of the natural numbers",),
            )
        )
    entries += [
        GalleryEntry("d3", make_d3(), frozenset({b.B3}), (_D3_NOTE,)),
        GalleryEntry("d4", make_d4(), frozenset({b.B4}), ("table transcribed as printed",)),
        GalleryEntry("d5", make_d5(3, 0), frozenset({b.B5}), ("x0 = 0",)),
        GalleryEntry("discrete", make_discrete(3), frozenset({b.B5}), (_CLOSURE_NOTE,)),
        GalleryEntry("indiscrete", make_indiscrete(3), frozenset({b.B5}), (_CLOSURE_NOTE,)),
    ]
    return entries


def evaluate(entry: GalleryEntry) -> GalleryResult:
    """Brute-force the boundary axioms for one entry and compare with its claim.

    B5p is reported but never affects the status: the claims concern B1..B5.
    """
    report = check_system(entry.operator, AxiomSystem.beta, name=entry.label)
    computed = frozenset(report.failed())
    entry = GalleryEntry(
        entry.name, entry.operator, entry.claimed_violations, entry.notes, computed,
    )
    status = OK if (computed & frozenset(BETA)) == entry.claimed_violations else DISCREPANCY
    return GalleryResult(entry, status, report)


def verify_gallery(entries: list[GalleryEntry] | None = None) -> list[GalleryResult]:
    return [evaluate(e) for e in (default_gallery() if entries is None else entries)]

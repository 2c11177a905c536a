"""Closure (D1..D5) and boundary (B1..B5, B5p) axioms on operator tables.

Every checker returns the complete list of violations, ordered by
``(code(A), code(B))``, so results are reproducible across runs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .setcore import OperatorTable, render_subset, serialize, submasks


class AxiomId(enum.Enum):
    D1 = "D1"
    D2 = "D2"
    D3 = "D3"
    D4 = "D4"
    D5 = "D5"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    B5 = "B5"
    B5p = "B5p"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def statement(self) -> str:
        return _STATEMENTS[self]

    @property
    def binary(self) -> bool:
        """True when the axiom quantifies over two sets A, B."""
        return self in (AxiomId.D3, AxiomId.D4, AxiomId.B3, AxiomId.B4)

    @classmethod
    def parse(cls, text: str) -> AxiomId:
        key = text.strip().replace("'", "p")
        for a in cls:
            if a.value.lower() == key.lower():
                return a
        raise ValueError(f"unknown axiom {text!r}")

    def __str__(self) -> str:
        return self.value


_LABELS = {
    AxiomId.D1: "delta-1", AxiomId.D2: "delta-2", AxiomId.D3: "delta-3",
    AxiomId.D4: "delta-4", AxiomId.D5: "delta-5",
    AxiomId.B1: "beta-1", AxiomId.B2: "beta-2", AxiomId.B3: "beta-3",
    AxiomId.B4: "beta-4", AxiomId.B5: "beta-5", AxiomId.B5p: "beta-5'",
}

_STATEMENTS = {
    AxiomId.D1: "op(∅) = ∅",
    AxiomId.D2: "op(op(A)) ⊆ op(A)",
    AxiomId.D3: "op(A∪B) ⊆ op(A)∪op(B)",
    AxiomId.D4: "A⊆B ⟹ op(A) ⊆ op(B)",
    AxiomId.D5: "A ⊆ op(A)",
    AxiomId.B1: "op(∅) = ∅",
    AxiomId.B2: "op(op(A)) ⊆ op(A)",
    AxiomId.B3: "op(A∪B) ⊆ op(A)∪op(B)",
    AxiomId.B4: "A⊆B ⟹ op(A) ⊆ B∪op(B)",
    AxiomId.B5: "op(A) = op(X∖A)",
    AxiomId.B5p: "op(A) ⊆ op(X∖A)",
}


class AxiomSystem(enum.Enum):
    delta = "delta"
    beta = "beta"

    @property
    def axioms(self) -> tuple[AxiomId, ...]:
        if self is AxiomSystem.delta:
            return DELTA
        return BETA

    @property
    def reported(self) -> tuple[AxiomId, ...]:
        """Axioms covered by a report: the system plus B5p for beta."""
        if self is AxiomSystem.delta:
            return DELTA
        return BETA + (AxiomId.B5p,)


DELTA = (AxiomId.D1, AxiomId.D2, AxiomId.D3, AxiomId.D4, AxiomId.D5)
BETA = (AxiomId.B1, AxiomId.B2, AxiomId.B3, AxiomId.B4, AxiomId.B5)
ALL_AXIOMS = tuple(AxiomId)


@dataclass(frozen=True)
class Violation:
    """One failing instance of an axiom.

    ``witness_a``/``witness_b`` are subset codes.  ``element`` lies in the
    left-hand side of the failed inclusion and not in the right-hand side; for
    the B5 equality it is the least element of the symmetric difference and
    ``side`` says which of op(A) ("left") or op(X∖A) ("right") contains it.
    """

    axiom: AxiomId
    witness_a: int
    witness_b: Optional[int]
    element: int
    side: str = "left"

    def to_dict(self) -> dict:
        d = {
            "axiom": self.axiom.value,
            "witness_a": self.witness_a,
            "witness_b": self.witness_b,
            "element": self.element,
        }
        if self.axiom is AxiomId.B5:
            d["side"] = self.side
        return d

    def describe(self, one_based: bool = False) -> str:
        a = render_subset(self.witness_a, one_based)
        shift = 1 if one_based else 0
        if self.witness_b is None:
            where = f"A={a}"
        else:
            where = f"A={a}, B={render_subset(self.witness_b, one_based)}"
        if self.axiom is AxiomId.B5:
            holder = "op(A)" if self.side == "left" else "op(X∖A)"
            return f"{where}: element {self.element + shift} only in {holder}"
        return f"{where}: element {self.element + shift} in left side, not in right side"


def _lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def _unary(axiom: AxiomId, op: OperatorTable, body: Callable[[int], tuple[int, int]]):
    out = []
    for a in op.universe.codes():
        left, right = body(a)
        bad = left & ~right
        if bad:
            out.append(Violation(axiom, a, None, _lowest(bad)))
    return out


def _check_empty(axiom: AxiomId, op: OperatorTable) -> list[Violation]:
    v = op[0]
    return [Violation(axiom, 0, None, _lowest(v))] if v else []


def _check_idempotent(axiom: AxiomId, op: OperatorTable) -> list[Violation]:
    t = op.table
    return _unary(axiom, op, lambda a: (t[t[a]], t[a]))


def _check_union(axiom: AxiomId, op: OperatorTable) -> list[Violation]:
    t = op.table
    out = []
    size = op.universe.size
    for a in range(size):
        ta = t[a]
        for b in range(size):
            bad = t[a | b] & ~(ta | t[b])
            if bad:
                out.append(Violation(axiom, a, b, _lowest(bad)))
    return out


def _check_monotone(axiom: AxiomId, op: OperatorTable, with_b: bool) -> list[Violation]:
    # only pairs A ⊆ B: B ranges over supersets of A, ascending
    t = op.table
    full = op.universe.full
    out = []
    for a in range(op.universe.size):
        ta = t[a]
        rest = full & ~a
        for s in submasks(rest):
            b = a | s
            right = (b | t[b]) if with_b else t[b]
            bad = ta & ~right
            if bad:
                out.append(Violation(axiom, a, b, _lowest(bad)))
    return out


def _check_extensive(axiom: AxiomId, op: OperatorTable) -> list[Violation]:
    t = op.table
    return _unary(axiom, op, lambda a: (a, t[a]))


def _check_symmetric(op: OperatorTable) -> list[Violation]:
    t = op.table
    full = op.universe.full
    out = []
    for a in op.universe.codes():
        left, right = t[a], t[full & ~a]
        diff = left ^ right
        if diff:
            x = _lowest(diff)
            side = "left" if left >> x & 1 else "right"
            out.append(Violation(AxiomId.B5, a, None, x, side))
    return out


def _check_half_symmetric(op: OperatorTable) -> list[Violation]:
    t = op.table
    full = op.universe.full
    return _unary(AxiomId.B5p, op, lambda a: (t[a], t[full & ~a]))


_CHECKERS: dict[AxiomId, Callable[[OperatorTable], list[Violation]]] = {
    AxiomId.D1: lambda op: _check_empty(AxiomId.D1, op),
    AxiomId.D2: lambda op: _check_idempotent(AxiomId.D2, op),
    AxiomId.D3: lambda op: _check_union(AxiomId.D3, op),
    AxiomId.D4: lambda op: _check_monotone(AxiomId.D4, op, with_b=False),
    AxiomId.D5: lambda op: _check_extensive(AxiomId.D5, op),
    AxiomId.B1: lambda op: _check_empty(AxiomId.B1, op),
    AxiomId.B2: lambda op: _check_idempotent(AxiomId.B2, op),
    AxiomId.B3: lambda op: _check_union(AxiomId.B3, op),
    AxiomId.B4: lambda op: _check_monotone(AxiomId.B4, op, with_b=True),
    AxiomId.B5: _check_symmetric,
    AxiomId.B5p: _check_half_symmetric,
}


def check_axiom(op: OperatorTable, axiom: AxiomId) -> list[Violation]:
    """All violations of ``axiom`` by ``op``; an empty list means it holds."""
    return _CHECKERS[axiom](op)


def holds(op: OperatorTable, axiom: AxiomId) -> bool:
    return not check_axiom(op, axiom)


def holds_all(op: OperatorTable, axioms: Iterable[AxiomId]) -> bool:
    return all(not check_axiom(op, a) for a in axioms)


@dataclass(frozen=True)
class AxiomStatus:
    axiom: AxiomId
    count: int
    first: Optional[Violation]
    violations: tuple[Violation, ...] = ()

    @property
    def holds(self) -> bool:
        return self.count == 0


@dataclass(frozen=True)
class CheckReport:
    operator: str
    system: AxiomSystem
    statuses: dict[AxiomId, AxiomStatus] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        """Whether every axiom of the system (B5p excluded) holds."""
        return all(self.statuses[a].holds for a in self.system.axioms)

    def failed(self) -> list[AxiomId]:
        return [a for a, st in self.statuses.items() if not st.holds]

    def to_dict(self, all_witnesses: bool = False) -> dict:
        rows = []
        for a, st in self.statuses.items():
            row = {"axiom": a.value, "holds": st.holds, "count": st.count}
            if st.first is not None:
                first = st.first.to_dict()
                del first["axiom"]
                row.update(first)
            if all_witnesses:
                row["violations"] = [v.to_dict() for v in st.violations]
            rows.append(row)
        return {
            "operator": self.operator,
            "system": self.system.value,
            "holds": self.holds,
            "axioms": rows,
        }

    def render(self, one_based: bool = False, all_witnesses: bool = False) -> str:
        lines = [f"operator: {self.operator}", f"system: {self.system.value}"]
        for a, st in self.statuses.items():
            head = f"  {a.value:<4} {a.label:<8} {a.statement:<26}"
            if st.holds:
                lines.append(f"{head} holds")
                continue
            lines.append(f"{head} FAILS ({st.count} violation{'s' if st.count != 1 else ''})")
            shown = st.violations if all_witnesses else (st.first,)
            for v in shown:
                lines.append(f"       {v.describe(one_based)}")
        verdict = "holds" if self.holds else "does not hold"
        lines.append(f"verdict: {self.system.value} system {verdict}")
        return "\n".join(lines)


def check_system(
    op: OperatorTable,
    system: AxiomSystem | str,
    name: Optional[str] = None,
) -> CheckReport:
    system = AxiomSystem(system)
    statuses = {}
    for a in system.reported:
        vs = check_axiom(op, a)
        statuses[a] = AxiomStatus(a, len(vs), vs[0] if vs else None, tuple(vs))
    return CheckReport(name if name is not None else serialize(op), system, statuses)


@dataclass(frozen=True)
class Classification:
    is_closure: bool
    is_boundary: bool


def classify(op: OperatorTable) -> Classification:
    return Classification(holds_all(op, DELTA), holds_all(op, BETA))


def violated(op: OperatorTable, axioms: Iterable[AxiomId] = ALL_AXIOMS) -> frozenset[AxiomId]:
    return frozenset(a for a in axioms if check_axiom(op, a))

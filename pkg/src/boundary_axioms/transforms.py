"""The closure/boundary correspondences and the closed-set family view."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .axioms import DELTA, check_axiom
from .setcore import OperatorTable, Universe


class NotAClosureError(ValueError):
    pass


class InvalidFamilyError(ValueError):
    pass


def phi(op: OperatorTable) -> OperatorTable:
    """A ↦ op(A) ∩ op(X∖A).  Defined for every operator, not only closures."""
    t = op.table
    full = op.universe.full
    return OperatorTable(op.universe, tuple(t[a] & t[full & ~a] for a in op.universe.codes()))


def psi(op: OperatorTable) -> OperatorTable:
    """A ↦ A ∪ op(A)."""
    t = op.table
    return OperatorTable(op.universe, tuple(a | t[a] for a in op.universe.codes()))


@dataclass(frozen=True)
class TopologyFamily:
    """Closed sets of a topology on a finite universe, as subset codes."""

    universe: Universe
    members: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        problem = family_problem(self.universe, self.members)
        if problem:
            raise InvalidFamilyError(problem)

    @property
    def n(self) -> int:
        return self.universe.n

    def closed(self) -> list[int]:
        return sorted(self.members)

    def open(self) -> list[int]:
        full = self.universe.full
        return sorted(full & ~c for c in self.members)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "closed": self.closed()}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> TopologyFamily:
        obj = json.loads(text)
        if not isinstance(obj, dict) or set(obj) != {"n", "closed"}:
            raise InvalidFamilyError('expected an object with fields "n" and "closed"')
        return cls(Universe(obj["n"]), frozenset(obj["closed"]))


def family_problem(universe: Universe, members) -> str | None:
    """Why ``members`` is not a valid closed-set family, or None if it is."""
    for c in members:
        if not 0 <= c < universe.size:
            return f"code {c} out of range for n={universe.n}"
    if 0 not in members:
        return "family must contain the empty set"
    if universe.full not in members:
        return "family must contain X"
    ms = sorted(members)
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if a | b not in members:
                return f"not closed under union: {a} | {b}"
            if a & b not in members:
                return f"not closed under intersection: {a} & {b}"
    return None


def closed_sets(cl: OperatorTable) -> TopologyFamily:
    """Fixed points of a closure operator."""
    for axiom in DELTA:
        vs = check_axiom(cl, axiom)
        if vs:
            v = vs[0]
            raise NotAClosureError(
                f"not a closure operator: {axiom.value} fails at {v.describe()}"
            )
    t = cl.table
    return TopologyFamily(cl.universe, frozenset(a for a in cl.universe.codes() if t[a] == a))


def closure_from_family(fam: TopologyFamily) -> OperatorTable:
    """A ↦ the least member of ``fam`` containing A."""
    u = fam.universe
    ms = fam.closed()
    table = []
    for a in u.codes():
        c = u.full
        for m in ms:
            if a & ~m == 0:
                c &= m
        table.append(c)
    return OperatorTable(u, tuple(table))

"""Enumeration of operator space under axiom constraints.

The search assigns ``op(A)`` for subset codes in ascending order, so operators
are produced in lexicographic order of their tables.  Unary constraints of the
required axioms shrink the per-code domains up front (B1/D1 pin op(∅), D5 keeps
only supersets of A, B5 ties op(A) to op(X∖A)); every other required axiom is
checked as soon as all codes of one of its instances are assigned, and a failing
prefix discards its whole subtree.

``candidates_examined`` counts complete tables of the reduced space that were
either visited as a leaf or eliminated through a pruned prefix, so an exhausted
search reports exactly the size of that space.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .axioms import BETA, DELTA, AxiomId, check_axiom, classify, holds_all
from .setcore import OperatorTable, Universe, operators_equal, submasks
from .transforms import TopologyFamily, closed_sets, closure_from_family, family_problem, phi, psi

NAIVE_CAP = 2
PRUNED_CAP = 4
TOPOLOGY_CAP = 4


class CapExceededError(ValueError):
    pass


class CountMismatchError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    n: int
    require: frozenset[AxiomId]
    forbid: frozenset[AxiomId] = frozenset()
    limit: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "require", frozenset(self.require))
        object.__setattr__(self, "forbid", frozenset(self.forbid))
        both = self.require & self.forbid
        if both:
            raise ValueError(f"axioms both required and forbidden: {sorted(a.value for a in both)}")
        if not 0 <= self.n <= PRUNED_CAP:
            raise CapExceededError(f"search supports 0 <= n <= {PRUNED_CAP}, got n={self.n}")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be positive")


@dataclass
class EnumStats:
    n: int
    space_size: int = 0
    candidates_examined: int = 0
    matches: int = 0
    leaves: int = 0
    nodes: int = 0
    exhausted: bool = False
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        # elapsed is left out so machine output stays byte-stable
        return {
            "n": self.n,
            "space_size": self.space_size,
            "candidates_examined": self.candidates_examined,
            "matches": self.matches,
            "leaves": self.leaves,
            "exhausted": self.exhausted,
        }


# ---------------------------------------------------------------------------
# incremental instance checks; each returns False if an instance that involves
# a newly assigned code and only assigned codes fails


class _Geometry:
    def __init__(self, n: int):
        self.n = n
        self.size = 1 << n
        self.full = self.size - 1
        self.proper_sub = [[s for s in submasks(c) if s != c] for c in range(self.size)]
        self.proper_sup = [
            [c | s for s in submasks(self.full & ~c) if s] for c in range(self.size)
        ]
        self.union_pairs = [
            [(a, b) for a in submasks(c) for b in submasks(c) if a | b == c and a <= b]
            for c in range(self.size)
        ]


def _ok_empty(g, vals, new):
    return not (0 in new and vals[0])


def _ok_idempotent(g, vals, new):
    for c in new:
        v = vals[c]
        w = vals[v]
        if w >= 0 and w & ~v:
            return False
        vc = vals[c]
        if vc & ~c:
            for a in range(g.size):
                if vals[a] == c:
                    return False
    return True


def _ok_union(g, vals, new):
    for c in new:
        vc = vals[c]
        for a in range(g.size):
            va = vals[a]
            if va < 0:
                continue
            u = vals[a | c]
            if u >= 0 and u & ~(va | vc):
                return False
        for a, b in g.union_pairs[c]:
            va, vb = vals[a], vals[b]
            if va >= 0 and vb >= 0 and vc & ~(va | vb):
                return False
    return True


def _ok_monotone(g, vals, new):
    for c in new:
        vc = vals[c]
        for s in g.proper_sub[c]:
            vs = vals[s]
            if vs >= 0 and vs & ~vc:
                return False
        for s in g.proper_sup[c]:
            vs = vals[s]
            if vs >= 0 and vc & ~vs:
                return False
    return True


def _ok_boundary_monotone(g, vals, new):
    for c in new:
        vc = vals[c]
        for s in g.proper_sub[c]:
            vs = vals[s]
            if vs >= 0 and vs & ~(c | vc):
                return False
        for s in g.proper_sup[c]:
            vs = vals[s]
            if vs >= 0 and vc & ~(s | vs):
                return False
    return True


def _ok_extensive(g, vals, new):
    return all(c & ~vals[c] == 0 for c in new)


def _ok_symmetric(g, vals, new):
    for c in new:
        w = vals[g.full & ~c]
        if w >= 0 and w != vals[c]:
            return False
    return True


def _ok_half_symmetric(g, vals, new):
    for c in new:
        w = vals[g.full & ~c]
        if w >= 0 and (vals[c] & ~w or w & ~vals[c]):
            return False
    return True


_INCREMENTAL = {
    AxiomId.D1: _ok_empty,
    AxiomId.B1: _ok_empty,
    AxiomId.D2: _ok_idempotent,
    AxiomId.B2: _ok_idempotent,
    AxiomId.D3: _ok_union,
    AxiomId.B3: _ok_union,
    AxiomId.D4: _ok_monotone,
    AxiomId.B4: _ok_boundary_monotone,
    AxiomId.D5: _ok_extensive,
    AxiomId.B5: _ok_symmetric,
    AxiomId.B5p: _ok_half_symmetric,
}


def _variables(g: _Geometry, require: frozenset[AxiomId]) -> list[tuple[tuple[int, ...], list[int]]]:
    """Free coordinates of the reduced space with their value domains."""
    pinned_empty = AxiomId.D1 in require or AxiomId.B1 in require
    extensive = AxiomId.D5 in require
    paired = AxiomId.B5 in require

    def domain(c: int) -> set[int]:
        values = set(range(g.size))
        if pinned_empty and c == 0:
            values &= {0}
        if extensive:
            values = {v for v in values if c & ~v == 0}
        return values

    out = []
    taken = set()
    for c in range(g.size):
        if c in taken:
            continue
        codes = (c,)
        values = domain(c)
        comp = g.full & ~c
        if paired and comp != c:
            codes = (c, comp)
            values &= domain(comp)
        taken.update(codes)
        out.append((codes, sorted(values)))
    return out


def search(
    spec: SearchSpec,
    visitor: Optional[Callable[[OperatorTable], object]] = None,
) -> EnumStats:
    """Visit, in lexicographic table order, operators meeting ``spec``."""
    start = time.perf_counter()
    n = spec.n
    g = _Geometry(n)
    universe = Universe(n)
    variables = _variables(g, spec.require)
    checks = [_INCREMENTAL[a] for a in sorted(spec.require, key=lambda a: a.value)]
    require = tuple(spec.require)
    forbid = tuple(spec.forbid)

    # suffix[i] = number of completions of the variables from i on
    suffix = [1] * (len(variables) + 1)
    for i in range(len(variables) - 1, -1, -1):
        suffix[i] = suffix[i + 1] * len(variables[i][1])

    stats = EnumStats(n=n, space_size=suffix[0])
    vals = [-1] * g.size
    depth = len(variables)

    def leaf() -> bool:
        stats.leaves += 1
        stats.candidates_examined += 1
        op = OperatorTable(universe, tuple(vals))
        if not holds_all(op, require):
            raise AssertionError(f"pruning accepted an operator violating {require}: {op.table}")
        if all(check_axiom(op, a) for a in forbid):
            stats.matches += 1
            if visitor is not None:
                visitor(op)
            if spec.limit is not None and stats.matches >= spec.limit:
                return True
        return False

    def descend(i: int) -> bool:
        if i == depth:
            return leaf()
        codes, values = variables[i]
        for v in values:
            stats.nodes += 1
            for c in codes:
                vals[c] = v
            if all(ok(g, vals, codes) for ok in checks):
                if descend(i + 1):
                    return True
            else:
                stats.candidates_examined += suffix[i + 1]
        for c in codes:
            vals[c] = -1
        return False

    stopped = descend(0)
    stats.exhausted = not stopped
    stats.elapsed = time.perf_counter() - start
    return stats


def find_witnesses(spec: SearchSpec) -> tuple[list[OperatorTable], EnumStats]:
    found: list[OperatorTable] = []
    stats = search(spec, found.append)
    return found, stats


def _enumerate(n: int, axioms, visitor) -> EnumStats:
    if not 0 <= n <= PRUNED_CAP:
        raise CapExceededError(f"enumeration supports 0 <= n <= {PRUNED_CAP}, got n={n}")
    return search(SearchSpec(n, frozenset(axioms)), visitor)


def enumerate_closures(n: int, visitor: Optional[Callable[[OperatorTable], object]] = None) -> EnumStats:
    return _enumerate(n, DELTA, visitor)


def enumerate_boundaries(n: int, visitor: Optional[Callable[[OperatorTable], object]] = None) -> EnumStats:
    return _enumerate(n, BETA, visitor)


def closures(n: int) -> list[OperatorTable]:
    out: list[OperatorTable] = []
    enumerate_closures(n, out.append)
    return out


def boundaries(n: int) -> list[OperatorTable]:
    out: list[OperatorTable] = []
    enumerate_boundaries(n, out.append)
    return out


def enumerate_naive(
    n: int,
    require: Iterable[AxiomId],
    forbid: Iterable[AxiomId] = (),
) -> list[OperatorTable]:
    """Filter every one of the (2^n)^(2^n) tables; no pruning at all."""
    if not 0 <= n <= NAIVE_CAP:
        raise CapExceededError(f"naive enumeration supports 0 <= n <= {NAIVE_CAP}, got n={n}")
    u = Universe(n)
    require, forbid = tuple(require), tuple(forbid)
    out = []
    for table in itertools.product(range(u.size), repeat=u.size):
        op = OperatorTable(u, table)
        if holds_all(op, require) and all(check_axiom(op, a) for a in forbid):
            out.append(op)
    return out


def enumerate_topologies(n: int) -> list[TopologyFamily]:
    """Every family of subsets containing ∅ and X and closed under ∪ and ∩."""
    if not 0 <= n <= TOPOLOGY_CAP:
        raise CapExceededError(f"topology enumeration supports 0 <= n <= {TOPOLOGY_CAP}, got n={n}")
    u = Universe(n)
    fixed = {0, u.full}
    free = [c for c in u.codes() if c not in fixed]
    out = []
    for pick in range(1 << len(free)):
        members = set(fixed)
        for j, c in enumerate(free):
            if pick >> j & 1:
                members.add(c)
        if family_problem(u, members) is None:
            out.append(TopologyFamily(u, frozenset(members)))
    return out


# ---------------------------------------------------------------------------
# counting and the propositions


@dataclass(frozen=True)
class CountResult:
    n: int
    closures: int
    boundaries: int
    topologies: int

    @property
    def agree(self) -> bool:
        return self.closures == self.boundaries == self.topologies


def count_triangle(n: int) -> CountResult:
    """Count closures, boundaries and topologies by three separate routes."""
    result = CountResult(
        n,
        enumerate_closures(n).matches,
        enumerate_boundaries(n).matches,
        len(enumerate_topologies(n)),
    )
    if not result.agree:
        raise CountMismatchError(
            f"n={n}: closures={result.closures} boundaries={result.boundaries} "
            f"topologies={result.topologies}"
        )
    return result


@dataclass
class PropositionReport:
    n: int
    closures: int = 0
    boundaries: int = 0
    topologies: int = 0
    counterexamples: dict[str, list[str]] = field(
        default_factory=lambda: {"P1": [], "P2": [], "P3": []}
    )

    def confirmed(self, key: str) -> bool:
        return not self.counterexamples[key]

    @property
    def all_confirmed(self) -> bool:
        return all(self.confirmed(k) for k in self.counterexamples)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "closures": self.closures,
            "boundaries": self.boundaries,
            "topologies": self.topologies,
            "P1": self.confirmed("P1"),
            "P2": self.confirmed("P2"),
            "P3": self.confirmed("P3"),
            "counterexamples": self.counterexamples,
        }


def verify_propositions(n: int) -> PropositionReport:
    """Check, over every closure and boundary operator on n points, that
    phi lands in boundaries (P1), psi lands in closures (P2), and the two are
    mutually inverse with equal counts (P3).
    """
    if not 0 <= n <= PRUNED_CAP:
        raise CapExceededError(f"propositions are verified for 0 <= n <= {PRUNED_CAP}, got n={n}")
    cls = closures(n)
    bds = boundaries(n)
    rep = PropositionReport(n, len(cls), len(bds))
    fams = enumerate_topologies(n) if n <= TOPOLOGY_CAP else []
    rep.topologies = len(fams)
    bset = {b.table for b in bds}
    cset = {c.table for c in cls}

    for cl in cls:
        d = phi(cl)
        if not classify(d).is_boundary:
            rep.counterexamples["P1"].append(f"phi{cl.table} = {d.table} is not a boundary operator")
        if not operators_equal(psi(d), cl):
            rep.counterexamples["P3"].append(f"psi(phi{cl.table}) != itself")
    for b in bds:
        c = psi(b)
        if not classify(c).is_closure:
            rep.counterexamples["P2"].append(f"psi{b.table} = {c.table} is not a closure operator")
        if not operators_equal(phi(c), b):
            rep.counterexamples["P3"].append(f"phi(psi{b.table}) != itself")
    images = {phi(cl).table for cl in cls}
    if len(images) != len(cls):
        rep.counterexamples["P3"].append("phi is not injective on closures")
    if images != bset:
        rep.counterexamples["P3"].append("phi(closures) differs from the set of boundary operators")
    if {psi(b).table for b in bds} != cset:
        rep.counterexamples["P3"].append("psi(boundaries) differs from the set of closure operators")
    if not (len(cls) == len(bds) == len(fams)):
        rep.counterexamples["P3"].append(
            f"count mismatch: closures={len(cls)} boundaries={len(bds)} topologies={len(fams)}"
        )
    for cl in cls:
        if closure_from_family(closed_sets(cl)).table != cl.table:
            rep.counterexamples["P3"].append(f"closed-set round trip fails for {cl.table}")
    return rep


# ---------------------------------------------------------------------------
# independence


@dataclass
class IndependenceResult:
    axiom: AxiomId
    require: frozenset[AxiomId]
    max_n: int
    found_n: Optional[int] = None
    witnesses: list[OperatorTable] = field(default_factory=list)
    stats: list[EnumStats] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.found_n is not None

    def to_dict(self) -> dict:
        from .setcore import serialize

        return {
            "axiom": self.axiom.value,
            "require": sorted(a.value for a in self.require),
            "max_n": self.max_n,
            "found_n": self.found_n,
            "witnesses": [serialize(w) for w in self.witnesses],
            "searches": [s.to_dict() for s in self.stats],
        }


def independence_search(
    axiom: AxiomId,
    max_n: int = 3,
    system: Iterable[AxiomId] = BETA,
    limit: int = 1,
    min_n: int = 0,
) -> IndependenceResult:
    """Look for an operator satisfying every other axiom of ``system`` but not
    ``axiom``, trying n = min_n, ..., max_n and stopping at the first n with a
    witness.  When none is found every search is exhausted, and its stats are
    the nonexistence certificate for that n.
    """
    others = frozenset(a for a in system if a is not axiom)
    result = IndependenceResult(axiom, others, max_n)
    for n in range(min_n, max_n + 1):
        found, stats = find_witnesses(SearchSpec(n, others, frozenset({axiom}), limit))
        result.stats.append(stats)
        if found:
            result.found_n = n
            result.witnesses = found
            break
    return result

"""End-to-end verification of the published claims, as one deterministic report."""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import BETA, AxiomId, check_axiom
from .gallery import DISCREPANCY, GalleryResult, verify_gallery
from .search import (
    PRUNED_CAP,
    CountResult,
    IndependenceResult,
    PropositionReport,
    closures,
    count_triangle,
    independence_search,
    verify_propositions,
)
from .setcore import serialize

INDEPENDENCE_MIN_N = 3


@dataclass
class ClosingRemark:
    """Closures satisfy B1..B4 and fail B5 with witness A = X (n >= 1)."""

    max_n: int
    checked: int = 0
    exceptions: list[str] = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return not self.exceptions


def check_closing_remark(max_n: int) -> ClosingRemark:
    out = ClosingRemark(max_n)
    for n in range(1, max_n + 1):
        full = (1 << n) - 1
        for cl in closures(n):
            out.checked += 1
            for a in (AxiomId.B1, AxiomId.B2, AxiomId.B3, AxiomId.B4):
                if check_axiom(cl, a):
                    out.exceptions.append(f"{serialize(cl)} fails {a.value}")
            if full not in {v.witness_a for v in check_axiom(cl, AxiomId.B5)}:
                out.exceptions.append(f"{serialize(cl)} has no B5 violation at A=X")
    return out


@dataclass
class Verification:
    max_n: int
    propositions: list[PropositionReport]
    counts: list[CountResult]
    gallery: list[GalleryResult]
    independence: list[IndependenceResult]
    closing: ClosingRemark

    @property
    def discrepancies(self) -> list[GalleryResult]:
        return [g for g in self.gallery if g.status == DISCREPANCY]

    @property
    def all_confirmed(self) -> bool:
        return (
            all(p.all_confirmed for p in self.propositions)
            and not self.discrepancies
            and all(r.found for r in self.independence)
            and self.closing.confirmed
        )

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "propositions": [p.to_dict() for p in self.propositions],
            "counts": [
                {"n": c.n, "closures": c.closures, "boundaries": c.boundaries,
                 "topologies": c.topologies, "agree": c.agree}
                for c in self.counts
            ],
            "gallery": [g.to_dict() for g in self.gallery],
            "independence": [r.to_dict() for r in self.independence],
            "closing_remark": {
                "max_n": self.closing.max_n,
                "checked": self.closing.checked,
                "confirmed": self.closing.confirmed,
                "exceptions": self.closing.exceptions,
            },
            "all_confirmed": self.all_confirmed,
        }


def run_verification(max_n: int = 3) -> Verification:
    """Independence searches go to at least n=3 whatever ``max_n`` is."""
    if not 0 <= max_n <= PRUNED_CAP:
        raise ValueError(f"max_n must satisfy 0 <= max_n <= {PRUNED_CAP}, got {max_n}")
    ind_n = max(max_n, INDEPENDENCE_MIN_N)
    return Verification(
        max_n=max_n,
        propositions=[verify_propositions(n) for n in range(max_n + 1)],
        counts=[count_triangle(n) for n in range(max_n + 1)],
        gallery=verify_gallery(),
        independence=[independence_search(a, ind_n) for a in BETA],
        closing=check_closing_remark(max_n),
    )


def _mark(ok: bool) -> str:
    return "confirmed" if ok else "NOT CONFIRMED"


def _axioms(s) -> str:
    return "{" + ",".join(sorted(a.value for a in s)) + "}"


def render(v: Verification, one_based: bool = False) -> str:
    lines = [f"verification report (propositions and counts for n <= {v.max_n})", ""]

    lines.append("== propositions")
    for p in v.propositions:
        lines.append(
            f"n={p.n}: closures={p.closures} boundaries={p.boundaries}"
            f"  P1 phi(closure) is a boundary: {_mark(p.confirmed('P1'))}"
            f"  P2 psi(boundary) is a closure: {_mark(p.confirmed('P2'))}"
            f"  P3 mutually inverse: {_mark(p.confirmed('P3'))}"
        )
        for key, items in p.counterexamples.items():
            for item in items:
                lines.append(f"    {key} counterexample: {item}")
    lines.append("")

    lines.append("== counts (closures / boundaries / topologies)")
    for c in v.counts:
        lines.append(f"n={c.n}: {c.closures} / {c.boundaries} / {c.topologies}")
    lines.append("")

    lines.append("== gallery (boundary axioms; B5p informational)")
    for g in v.gallery:
        e = g.entry
        lines.append(
            f"{e.label:<16} claimed {_axioms(e.claimed_violations):<10}"
            f" computed {_axioms(e.computed_violations):<12} {g.status}"
        )
    lines.append("")

    lines.append("== independence (all other boundary axioms required)")
    for r in v.independence:
        if r.found:
            w = r.witnesses[0]
            lines.append(f"{r.axiom.value}: witness at n={r.found_n}: {serialize(w)}")
        else:
            last = r.stats[-1]
            lines.append(
                f"{r.axiom.value}: no witness for n <= {r.max_n}; n={last.n} exhausted, "
                f"candidates examined {last.candidates_examined} of {last.space_size}"
            )
    lines.append("")

    lines.append("== closures against boundary axioms")
    lines.append(
        f"{v.closing.checked} closures for 1 <= n <= {v.closing.max_n}: satisfy B1..B4, "
        f"fail B5 at A=X: {_mark(v.closing.confirmed)}"
    )
    for item in v.closing.exceptions:
        lines.append(f"    exception: {item}")
    lines.append("")

    lines.append("== errata")
    noted = False
    for g in v.discrepancies:
        noted = True
        e = g.entry
        lines.append(
            f"{e.label}: claimed to violate only {_axioms(e.claimed_violations)}, "
            f"brute force finds {_axioms(e.computed_violations & frozenset(BETA))}"
        )
        for a in sorted(g.unexpected | (e.claimed_violations & e.computed_violations),
                        key=lambda a: a.value):
            st = g.report.statuses[a]
            lines.append(f"    {a.value} witness: {st.first.describe(one_based)}")
        for a in sorted(g.missing, key=lambda a: a.value):
            lines.append(f"    {a.value} claimed but holds")
        for r in v.independence:
            if r.found and r.axiom in e.claimed_violations:
                lines.append(
                    f"    replacement witness for {r.axiom.value} (n={r.found_n}): "
                    f"{serialize(r.witnesses[0])}"
                )
    for g in v.gallery:
        for note in g.entry.notes:
            if note.startswith("assumed erratum"):
                noted = True
                lines.append(f"{g.entry.label}: {note}")
    if not noted:
        lines.append("none")
    lines.append("")

    verdict = "all claims confirmed" if v.all_confirmed else "discrepancies found"
    lines.append(f"verdict: {verdict}")
    return "\n".join(lines)

"""Literal quantifier expansion of every axiom over Python frozensets.

Deliberately slow and independent of the bitmask checkers in ``axioms``: sets
are frozensets of element names, every quantifier runs over the whole power
set, and implications are evaluated as written.  Used only to cross-check.
"""

from __future__ import annotations

from itertools import chain, combinations

from .axioms import AxiomId


def power_set(n: int) -> list[frozenset[int]]:
    xs = range(n)
    subsets = chain.from_iterable(combinations(xs, k) for k in range(n + 1))
    return [frozenset(s) for s in subsets]


def code_of(s: frozenset[int]) -> int:
    return sum(2**x for x in s)


def as_function(n: int, table) -> dict[frozenset[int], frozenset[int]]:
    pset = power_set(n)
    by_code = {code_of(s): s for s in pset}
    return {s: by_code[table[code_of(s)]] for s in pset}


def naive_violations(n: int, table, axiom: AxiomId) -> list[tuple[int, int | None, int]]:
    """Failing instances as ``(code(A), code(B) or None, element)``, sorted."""
    op = as_function(n, table)
    X = frozenset(range(n))
    P = power_set(n)
    found = []

    def fail_inclusion(left, right, a, b=None):
        if not left <= right:
            found.append((code_of(a), None if b is None else code_of(b), min(left - right)))

    for A in P:
        if axiom in (AxiomId.D1, AxiomId.B1):
            if A == frozenset() and op[A] != frozenset():
                found.append((code_of(A), None, min(op[A])))
        elif axiom in (AxiomId.D2, AxiomId.B2):
            fail_inclusion(op[op[A]], op[A], A)
        elif axiom is AxiomId.D5:
            fail_inclusion(A, op[A], A)
        elif axiom is AxiomId.B5:
            if op[A] != op[X - A]:
                found.append((code_of(A), None, min(op[A] ^ op[X - A])))
        elif axiom is AxiomId.B5p:
            fail_inclusion(op[A], op[X - A], A)
        else:
            for B in P:
                if axiom in (AxiomId.D3, AxiomId.B3):
                    fail_inclusion(op[A | B], op[A] | op[B], A, B)
                elif axiom is AxiomId.D4:
                    if A <= B:
                        fail_inclusion(op[A], op[B], A, B)
                elif axiom is AxiomId.B4:
                    if A <= B:
                        fail_inclusion(op[A], B | op[B], A, B)
    return sorted(found, key=lambda v: (v[0], -1 if v[1] is None else v[1]))

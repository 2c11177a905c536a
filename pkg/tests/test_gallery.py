import pytest

from boundary_axioms.axioms import BETA, AxiomId, check_axiom, check_system
from boundary_axioms.gallery import (
    DISCREPANCY,
    OK,
    default_gallery,
    make_d1,
    make_d2,
    make_d3,
    make_d4,
    make_d5,
    verify_gallery,
)
from boundary_axioms.naive import naive_violations

A = AxiomId


def computed(op):
    """Failed boundary axioms, via the literal-expansion checker."""
    return {a for a in BETA + (A.B5p,) if naive_violations(op.n, op.table, a)}


def boundary_on_window(n, A_elems):
    """Distance formula evaluated with plain sets (independent of make_d2)."""
    X = set(range(n))
    A_set = set(A_elems)
    comp = X - A_set

    def dist(x, S):
        return min((abs(x - s) for s in S), default=float("inf"))

    return {x for x in X if dist(x, A_set) == 1 or dist(x, comp) == 1}


def code(s):
    return sum(1 << x for x in s)


def test_d1():
    assert make_d1(1).table == (1, 1)
    for n in range(1, 5):
        op = make_d1(n)
        assert computed(op) == {A.B1}
        assert check_axiom(op, A.B5) == []
    with pytest.raises(ValueError):
        make_d1(0)


def test_d2_matches_formula():
    for n in range(3, 7):
        op = make_d2(n)
        for a in range(1 << n):
            elems = [x for x in range(n) if a >> x & 1]
            assert op[a] == code(boundary_on_window(n, elems))


def test_d2_examples():
    op = make_d2(4)
    assert op[0b0001] == 0b0011
    assert op[0] == 0
    assert op[op[0b0001]] == op[0b0011] == 0b0110
    assert op[0b0011] & ~op[0b0001] == 0b0100
    with pytest.raises(ValueError):
        make_d2(2)


@pytest.mark.parametrize("n", range(3, 7))
def test_d2_fails_only_b2(n):
    op = make_d2(n)
    assert computed(op) == {A.B2}
    assert check_axiom(op, A.B5) == []


def test_d3():
    op = make_d3()
    assert op[0b011] == 0b100
    assert op[0b001] == 0b001 == op[0b110]
    # the doubleton {0,2} (published {1,3}) also maps to its complement
    assert op[0b101] == 0b010
    assert computed(op) == {A.B3}


def test_d4_table_and_violations():
    op = make_d4()
    assert op.table == (0, 2, 1, 3, 3, 1, 2, 0)
    assert op[0b100] == 0b011
    b4 = {(v.witness_a, v.witness_b) for v in check_axiom(op, A.B4)}
    assert (0b100, 0b101) in b4
    # {2} ⊆ {0,2} but op({2}) = {0,1} ⊄ {0,2} ∪ op({0,2}) = {0,2}
    assert op[0b100] & ~(0b101 | op[0b101]) == 0b010
    # published as failing only B4, but op(op({0})) = op({1}) = {0} ⊄ {1}
    b2 = check_axiom(op, A.B2)
    assert b2[0].witness_a == 0b001 and b2[0].element == 0
    assert computed(op) == {A.B2, A.B4}


@pytest.mark.parametrize("n", range(1, 5))
def test_d5(n):
    for x0 in range(n):
        op = make_d5(n, x0)
        assert op[0] == 0
        assert computed(op) == {A.B5, A.B5p}
        full = (1 << n) - 1
        assert full in {v.witness_a for v in check_axiom(op, A.B5)}
    assert make_d5(2, 0)[0b10] == 0b11
    with pytest.raises(ValueError):
        make_d5(2, 2)
    with pytest.raises(ValueError):
        make_d5(0, 0)


def test_verify_gallery_statuses():
    results = {r.entry.label: r for r in verify_gallery()}
    assert results["d1(n=3)"].status == OK
    for n in range(3, 7):
        assert results[f"d2(n={n})"].status == OK
    assert results["d3(n=3)"].status == OK
    assert results["d5(n=3)"].status == OK
    assert results["discrete(n=3)"].status == OK
    assert results["indiscrete(n=3)"].status == OK
    d4 = results["d4(n=3)"]
    assert d4.status == DISCREPANCY
    assert d4.unexpected == {A.B2}
    assert d4.missing == frozenset()


def test_gallery_never_copies_claims():
    for entry in default_gallery():
        assert entry.computed_violations == frozenset()
    for r in verify_gallery():
        rep = check_system(r.entry.operator, "beta")
        assert r.entry.computed_violations == frozenset(rep.failed())
        assert r.entry.computed_violations == computed(r.entry.operator)


def test_b5p_never_decides_status():
    r = next(r for r in verify_gallery() if r.entry.name == "d5")
    assert A.B5p in r.entry.computed_violations
    assert r.status == OK

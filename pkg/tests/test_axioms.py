import itertools

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from boundary_axioms.axioms import (
    ALL_AXIOMS,
    BETA,
    DELTA,
    AxiomId,
    AxiomSystem,
    check_axiom,
    check_system,
    classify,
)
from boundary_axioms.gallery import make_d3, make_d5
from boundary_axioms.naive import naive_violations
from boundary_axioms.search import closures
from boundary_axioms.setcore import OperatorTable, Universe, constant, identity

from conftest import tables

A = AxiomId


def sides(op, axiom, a, b):
    """(left, right) of the inclusion an axiom asserts at (A, B)."""
    t, full = op.table, op.universe.full
    if axiom in (A.D1, A.B1):
        return t[0], 0
    if axiom in (A.D2, A.B2):
        return t[t[a]], t[a]
    if axiom in (A.D3, A.B3):
        return t[a | b], t[a] | t[b]
    if axiom is A.D4:
        return t[a], t[b]
    if axiom is A.B4:
        return t[a], b | t[b]
    if axiom is A.D5:
        return a, t[a]
    if axiom is A.B5p:
        return t[a], t[full & ~a]
    raise AssertionError(axiom)


def test_axiom_parse_and_labels():
    assert AxiomId.parse("b5'") is A.B5p
    assert AxiomId.parse("B5p") is A.B5p
    assert AxiomId.parse("d3") is A.D3
    assert A.B4.label == "beta-4"
    assert A.D3.binary and not A.D2.binary
    with pytest.raises(ValueError):
        AxiomId.parse("B6")


def test_identity_is_extensive():
    assert check_axiom(identity(2), A.D5) == []


def test_d3_union_witness():
    vs = check_axiom(make_d3(), A.B3)
    first = vs[0]
    assert (first.witness_a, first.witness_b, first.element) == (0b001, 0b010, 2)


def test_constant_x_fails_b1_at_empty_set():
    vs = check_axiom(constant(1, 1), A.B1)
    assert len(vs) == 1
    assert vs[0].witness_a == 0 and vs[0].witness_b is None and vs[0].element == 0


def test_check_system_examples():
    rep = check_system(identity(3), "delta")
    assert rep.holds and set(rep.statuses) == set(DELTA)

    rep = check_system(constant(3, 0), AxiomSystem.beta)
    assert rep.holds
    assert set(rep.statuses) == set(BETA) | {A.B5p}
    assert all(st.holds for st in rep.statuses.values())

    rep = check_system(make_d5(2, 0), "beta")
    assert [a for a in BETA if rep.statuses[a].holds] == [A.B1, A.B2, A.B3, A.B4]
    b5 = rep.statuses[A.B5]
    assert not b5.holds
    # lexicographic order puts A=∅ first; A=X is also a witness
    assert b5.first.witness_a == 0
    assert 0b11 in {v.witness_a for v in b5.violations}


def test_b5_witness_side():
    op = make_d5(2, 0)
    by_a = {v.witness_a: v for v in check_axiom(op, A.B5)}
    # op(∅)=∅, op(X)=X: the element lives in op(X∖A) when A=∅
    assert by_a[0].side == "right" and by_a[0].element == 0
    assert by_a[0b11].side == "left"


@pytest.mark.parametrize("n", range(1, 5))
def test_classify_identity_and_empty(n):
    assert classify(identity(n)).is_closure
    assert not classify(identity(n)).is_boundary
    # identity fails B5 at A=X: op(X)=X but op(∅)=∅
    assert (1 << n) - 1 in {v.witness_a for v in check_axiom(identity(n), A.B5)}
    c = classify(constant(n, 0))
    assert not c.is_closure and c.is_boundary
    assert check_axiom(constant(n, 0), A.D5)[-1].witness_a == (1 << n) - 1


def test_classify_empty_universe():
    op = OperatorTable(Universe(0), (0,))
    c = classify(op)
    assert c.is_closure and c.is_boundary
    for axiom in ALL_AXIOMS:
        assert check_axiom(op, axiom) == []


def _as_tuples(vs):
    return [(v.witness_a, v.witness_b, v.element) for v in vs]


@pytest.mark.parametrize("n", [0, 1, 2])
def test_checker_matches_literal_expansion(n):
    size = 1 << n
    for values in itertools.product(range(size), repeat=size):
        op = OperatorTable(Universe(n), values)
        for axiom in ALL_AXIOMS:
            assert _as_tuples(check_axiom(op, axiom)) == naive_violations(n, values, axiom), (values, axiom)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 4).flatmap(tables), st.sampled_from(ALL_AXIOMS))
def test_checker_matches_literal_expansion_random(op, axiom):
    assert _as_tuples(check_axiom(op, axiom)) == naive_violations(op.n, op.table, axiom)


@settings(max_examples=200)
@given(st.integers(0, 4).flatmap(tables), st.sampled_from(ALL_AXIOMS))
def test_violations_reproduce_and_are_ordered(op, axiom):
    vs = check_axiom(op, axiom)
    keys = [(v.witness_a, -1 if v.witness_b is None else v.witness_b) for v in vs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    full = op.universe.full
    for v in vs:
        assert (v.witness_b is not None) == axiom.binary
        if axiom is A.B5:
            left, right = op[v.witness_a], op[full & ~v.witness_a]
            holder = left if v.side == "left" else right
            other = right if v.side == "left" else left
            assert holder >> v.element & 1 and not other >> v.element & 1
            continue
        if axiom in (A.D4, A.B4):
            assert v.witness_a & ~v.witness_b == 0
        left, right = sides(op, axiom, v.witness_a, v.witness_b)
        assert left >> v.element & 1
        assert not right >> v.element & 1


@pytest.mark.parametrize("n", [0, 1, 2])
def test_b5p_iff_b5_exhaustive(n):
    size = 1 << n
    for values in itertools.product(range(size), repeat=size):
        op = OperatorTable(Universe(n), values)
        assert (check_axiom(op, A.B5p) == []) == (check_axiom(op, A.B5) == [])


def test_b5p_iff_b5_exhaustive_n3_by_pairs():
    # both axioms only couple op(A) with op(X∖A): exhaust every value pair of one
    # complement pair while the other three pairs are held equal or unequal
    u = Universe(3)
    reps = [0, 1, 2, 4]
    for rep in reps:
        comp = 7 & ~rep
        for others_equal in (True, False):
            for x, y in itertools.product(range(8), repeat=2):
                table = [0] * 8
                for r in reps:
                    if r == rep:
                        continue
                    table[r] = 3
                    table[7 & ~r] = 3 if others_equal else 5
                table[rep], table[comp] = x, y
                op = OperatorTable(u, table)
                assert (check_axiom(op, A.B5p) == []) == (check_axiom(op, A.B5) == [])


@settings(max_examples=300)
@given(st.integers(3, 4).flatmap(tables))
def test_b5p_iff_b5_random(op):
    assert (check_axiom(op, A.B5p) == []) == (check_axiom(op, A.B5) == [])


@pytest.mark.parametrize("n", range(0, 5))
def test_closures_against_boundary_axioms(n):
    full = (1 << n) - 1
    for cl in closures(n):
        for axiom in (A.B1, A.B2, A.B3, A.B4):
            assert check_axiom(cl, axiom) == []
        b5 = check_axiom(cl, A.B5)
        if n == 0:
            assert b5 == []
        else:
            assert full in {v.witness_a for v in b5}


@pytest.mark.parametrize("n", range(0, 5))
def test_closure_idempotent_and_additive_as_equalities(n):
    for cl in closures(n):
        t = cl.table
        for a in range(1 << n):
            assert t[t[a]] == t[a]
            for b in range(1 << n):
                assert t[a | b] == t[a] | t[b]


def test_report_machine_format():
    rep = check_system(make_d3(), "beta", name="d3")
    d = rep.to_dict()
    assert d["operator"] == "d3" and d["system"] == "beta" and d["holds"] is False
    b3 = next(r for r in d["axioms"] if r["axiom"] == "B3")
    assert b3 == {"axiom": "B3", "holds": False, "count": b3["count"],
                  "witness_a": 1, "witness_b": 2, "element": 2}
    b1 = next(r for r in d["axioms"] if r["axiom"] == "B1")
    assert b1 == {"axiom": "B1", "holds": True, "count": 0}
    full = rep.to_dict(all_witnesses=True)
    b3 = next(r for r in full["axioms"] if r["axiom"] == "B3")
    assert len(b3["violations"]) == b3["count"] > 1


def test_report_text():
    text = check_system(make_d3(), "beta", name="d3").render()
    assert "B3   beta-3" in text and "FAILS" in text
    assert "A={0}, B={1}: element 2" in text
    assert "A={1}, B={2}: element 3" in check_system(make_d3(), "beta").render(one_based=True)
    assert text.endswith("verdict: beta system does not hold")

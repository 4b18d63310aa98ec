import pytest
from hypothesis import given, strategies as st

from conftest import clause_sets
from ucslur.core import (BOT, TOP, UNSAT, ClashError, ParseError, apply_assignment,
                         assign_literal, assignment, assignment_dict, assignment_from_clause,
                         canonical_clauses, canonical_form, clause, clause_set, emit_dimacs,
                         format_clause, format_clause_set, from_json, literals, n_literals,
                         n_vars, parse_dimacs, to_json, variables)


def test_clause_rejects_clash_and_zero():
    with pytest.raises(ClashError):
        clause([1, -1])
    with pytest.raises(ValueError):
        clause([0, 2])


def test_assignment_forms():
    assert assignment({1: 1, 2: 0}) == {1, -2}
    assert assignment([3, -4]) == {3, -4}
    assert assignment_dict(frozenset([-2, 1])) == {1: 1, 2: 0}
    with pytest.raises(ClashError):
        assignment([1, -1])
    with pytest.raises(ValueError):
        assignment({1: 2})


def test_apply_assignment_basic():
    F = clause_set([[1, 2], [-1, 3], [-2]])
    assert apply_assignment({1}, F) == clause_set([[3], [-2]])
    assert apply_assignment({-1, 2}, F) == UNSAT
    assert apply_assignment(frozenset(), F) == F
    assert assign_literal(F, 1) == apply_assignment({1}, F)


def test_assignment_from_clause_falsifies():
    c = frozenset([1, -2])
    phi = assignment_from_clause(c)
    assert apply_assignment(phi, frozenset([c])) == UNSAT


def test_measures():
    F = clause_set([[1, -2], [3], []])
    assert variables(F) == {1, 2, 3}
    assert literals(F) == {1, -1, 2, -2, 3, -3}
    assert n_vars(F) == 3 and n_literals(F) == 3
    assert n_vars(TOP) == 0


def test_canonical_order_and_format():
    F = clause_set([[2, -1], [1], [-1]])
    assert canonical_clauses(F) == [(1,), (-1,), (-1, 2)]
    assert format_clause(BOT) == "⊥"
    assert format_clause_set(TOP) == "⊤"
    assert format_clause_set(UNSAT) == "{⊥}"


def test_parse_dimacs_multiline_and_duplicates():
    text = "c hi\np cnf 3 3\n1 -2\n 0 1 1 -2 0\n3 0\n"
    F = parse_dimacs(text)
    assert F == clause_set([[1, -2], [3]])


def test_parse_dimacs_satlib_trailer():
    F = parse_dimacs("p cnf 2 1\n1 2 0\n%\n0\n")
    assert F == clause_set([[1, 2]])


def test_parse_dimacs_empty_clause():
    assert parse_dimacs("p cnf 0 1\n0\n") == UNSAT


@pytest.mark.parametrize("text,fragment", [
    ("p cnf 2 1\n1 -1 0\n", "line 2: tautological"),
    ("p cnf 2 1\n1 3 0\n", "exceeds declared"),
    ("1 2 0\n", "before 'p cnf'"),
    ("p cnf x 1\n", "malformed header"),
    ("p cnf 2 1\n1 2\n", "not terminated"),
    ("p cnf 2 1\n1 a 0\n", "bad token"),
    ("c only comments\n", "missing"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as e:
        parse_dimacs(text)
    assert fragment in str(e.value)


@given(clause_sets())
def test_dimacs_round_trip(F):
    text = emit_dimacs(F, comments=["x"])
    assert parse_dimacs(text) == F
    assert emit_dimacs(parse_dimacs(text), comments=["x"]) == text


@given(clause_sets())
def test_json_round_trip(F):
    assert from_json(to_json(F)) == F
    assert canonical_form(from_json(to_json(F))) == canonical_form(F)


@given(clause_sets(), st.lists(st.integers(-5, 5).filter(bool), unique_by=abs))
def test_apply_assignment_composes(F, lits):
    phi = frozenset(lits)
    head, rest = frozenset(lits[:1]), frozenset(lits[1:])
    assert apply_assignment(phi, F) == apply_assignment(rest, apply_assignment(head, F))
    assert not variables(apply_assignment(phi, F)) & {abs(x) for x in phi}

import ast
import pathlib

import pytest
from hypothesis import given

from conftest import clause_sets
from ucslur.core import TOP, UNSAT, apply_assignment, clause_set
from ucslur.families import gen_full
from ucslur.oracle import (OracleBudget, OracleBudgetExceeded, hardness_bruteforce,
                           prime_implicates_bruteforce, sat_complete,
                           strahler_refutation_level)
from ucslur.reductions import rk_inf

A2 = clause_set([[1, 2], [1, -2], [-1, 2], [-1, -2]])
EX = clause_set([[1, -3, -4], [2, 3, -4], [2, -3, 4], [-2, 3, 4], [1, 3, 4], [1, 2]])


def test_sat_complete_examples():
    assert sat_complete(TOP) == (True, {})
    assert sat_complete(UNSAT) == (False, None)
    assert not sat_complete(A2)[0]
    ok, model = sat_complete(clause_set([[1, 2], [-1, -2]]))
    assert ok and model[1] != model[2]


def test_prime_examples():
    assert prime_implicates_bruteforce(clause_set([[1, 2], [1, -2]])) == {frozenset([1])}
    assert prime_implicates_bruteforce(EX) == EX
    assert prime_implicates_bruteforce(UNSAT) == UNSAT


def test_hardness_examples():
    assert hardness_bruteforce(clause_set([[1], [-1]])) == 1
    assert hardness_bruteforce(frozenset(c | {3} for c in A2)) == 2
    assert hardness_bruteforce(TOP) == 0


def test_strahler_levels():
    assert strahler_refutation_level(UNSAT) == 0
    assert strahler_refutation_level(A2) == 2
    assert strahler_refutation_level(gen_full(3)) == 3
    with pytest.raises(ValueError):
        strahler_refutation_level(clause_set([[1]]))


def test_budgets():
    with pytest.raises(ValueError):
        OracleBudget(max_vars=0)
    with pytest.raises(OracleBudgetExceeded):
        hardness_bruteforce(gen_full(7))
    with pytest.raises(OracleBudgetExceeded):
        sat_complete(gen_full(6), OracleBudget(max_nodes=10))


def test_oracle_does_not_import_the_library():
    src = pathlib.Path(__file__).resolve().parents[1] / "src" / "ucslur" / "oracle.py"
    tree = ast.parse(src.read_text())
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            assert node.level == 0 and not (node.module or "").startswith("ucslur")
        if isinstance(node, ast.Import):
            assert all(not a.name.startswith("ucslur") for a in node.names)


@given(clause_sets(max_vars=5, max_clauses=8))
def test_sat_agrees_with_rk_inf(F):
    ok, model = sat_complete(F)
    assert ok == (rk_inf(F) != UNSAT)
    if ok:
        assert apply_assignment(frozenset(v if b else -v for v, b in model.items()), F) == TOP

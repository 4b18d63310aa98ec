import random

import pytest
from hypothesis import given, strategies as st

from conftest import clause_sets
from ucslur.core import TOP, UNSAT, apply_assignment, clause_set, variables
from ucslur.oracle import sat_complete
from ucslur.reductions import (ALL, USAT, U0, UnsatOracle, forced_literals, implies_k, rk,
                               rk_inf, rk_oracle)

A2 = clause_set([[1, 2], [1, -2], [-1, 2], [-1, -2]])


def test_level_zero():
    assert rk(0, clause_set([[1], []])) == UNSAT
    F = clause_set([[1], [-1]])
    assert rk(0, F) == F


def test_unit_propagation_and_failed_literals():
    F = clause_set([[1], [-1, 2], [-2, 3, 4]])
    assert rk(1, F) == clause_set([[3, 4]])
    two = clause_set([[1, 2], [1, -2]])
    assert rk(1, two) == two and rk(2, two) == TOP


def test_negative_level_rejected():
    with pytest.raises(ValueError):
        rk(-1, TOP)


def test_fast_path_matches_generic_probing():
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(1, 5)
        F = frozenset(frozenset(v if rng.random() < .5 else -v
                                for v in rng.sample(range(1, n + 1), rng.randint(1, n)))
                      for _ in range(rng.randint(1, 8)))
        order = sorted({x for c in F for x in c}, key=lambda x: -x)
        assert rk(1, F) == rk(1, F, order=order)


def test_forced_literals_and_rk_inf():
    assert forced_literals(UNSAT) is ALL
    assert 12 in ALL and -3 in ALL
    F = clause_set([[1, 2], [1, -2], [3, 4]])
    assert forced_literals(F) == {1}
    assert rk_inf(F) == clause_set([[3, 4]])
    assert rk_inf(A2) == UNSAT


def test_implies_k_thresholds():
    F = clause_set([[1, 2], [1, -2]])
    assert not implies_k(F, frozenset([1]), 0)
    assert implies_k(F, frozenset([1]), 1)


def test_oracle_relativised():
    assert rk_oracle(0, A2, USAT) == UNSAT
    assert rk_oracle(0, A2, U0) == A2
    assert rk_oracle(2, A2, U0) == rk(2, A2)
    only_a2 = UnsatOracle("A2", lambda G: not G or G == A2 or frozenset() in G)
    assert rk_oracle(0, A2, only_a2) == UNSAT


def test_commutation_needs_compatible_assignment():
    # r_1 sets x1; assigning x1 -> 0 afterwards is not the same as before
    F = clause_set([[1]])
    assert rk(1, F) == TOP
    assert rk(1, apply_assignment({-1}, rk(1, F))) == TOP
    assert rk(1, apply_assignment({-1}, F)) == UNSAT


@given(clause_sets(max_vars=5, max_clauses=7), st.integers(0, 3))
def test_rk_applies_only_forced_assignments(F, k):
    G = rk(k, F)
    assert sat_complete(G)[0] == sat_complete(F)[0]
    # G = ψ*F with ψ forced, so applying the remaining forced literals agrees
    assert rk_inf(G) == rk_inf(F)
    assert all(any(c <= d for d in F) for c in G) or G == UNSAT


@given(clause_sets(max_vars=5, max_clauses=7), st.integers(0, 2))
def test_rk_refutes_when_lower_level_does(F, k):
    if rk(k, F) == UNSAT:
        assert rk(k + 1, F) == UNSAT


@given(clause_sets(max_vars=4, max_clauses=6))
def test_rk_converges_to_rk_inf_on_unsat(F):
    if not sat_complete(F)[0]:
        assert rk(len(variables(F)), F) == UNSAT

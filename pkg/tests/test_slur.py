import pytest
from hypothesis import given, strategies as st

from conftest import clause_sets
from ucslur.core import TOP, UNSAT, apply_assignment, clause_set
from ucslur.families import gen_full
from ucslur.hardness import SizeGuardError, uc_member
from ucslur.reductions import rk
from ucslur.slur import (ALTSLUR_STAR, SLUR, TransitionConfig, altslurstar_member,
                         k_decision_assignments, k_decision_results, slur_member,
                         slur_reachability, slur_successors, slur_terminal_set)

A2 = clause_set([[1, 2], [1, -2], [-1, 2], [-1, -2]])


def test_config_validation():
    with pytest.raises(ValueError):
        TransitionConfig(1, "other")
    with pytest.raises(ValueError):
        TransitionConfig(-1)
    with pytest.raises(ValueError):
        TransitionConfig(0, ALTSLUR_STAR)
    assert TransitionConfig(0).variant == SLUR


def test_decisions_witnessed():
    F = clause_set([[1, 2, 3], [-1, 2], [-2, 3]])
    for k in range(3):
        results = k_decision_results(F, k)
        for phi in k_decision_assignments(F, k):
            assert apply_assignment(phi, F) in results
    assert k_decision_results(F, 0) == {rk(1, F)}


def test_reachability_shape():
    states, edges, terminals = slur_reachability(clause_set([[1, 2], [-1, 3]]), TransitionConfig(1))
    assert states[0] == clause_set([[1, 2], [-1, 3]])
    assert all(0 <= a < len(states) and 0 <= b < len(states) for a, b in edges)
    assert terminals == {TOP}


def test_guard():
    with pytest.raises(SizeGuardError):
        slur_terminal_set(gen_full(5), TransitionConfig(1), max_vars=4)


def test_full_clause_sets_level():
    for k in (1, 2):
        A = gen_full(k + 1)
        assert not slur_member(A, TransitionConfig(k))
        assert slur_member(A, TransitionConfig(k + 1))


@given(clause_sets(max_vars=4, max_clauses=7), st.integers(0, 3))
def test_slur_equals_uc(F, k):
    assert slur_member(F, TransitionConfig(k)) == uc_member(F, k)


@given(clause_sets(max_vars=4, max_clauses=7), st.integers(1, 3))
def test_altslurstar_inside_next_slur(F, k):
    if altslurstar_member(F, k):
        assert slur_member(F, TransitionConfig(k + 1))


@given(clause_sets(max_vars=4, max_clauses=7), st.integers(0, 2))
def test_successors_are_not_refuted(F, k):
    for G in slur_successors(F, TransitionConfig(k)):
        assert G != UNSAT and G != F

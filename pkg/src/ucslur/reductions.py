"""Generalised unit-clause propagation r_k, forced literals and r_∞."""

from dataclasses import dataclass
from typing import Callable

from .core import (BOT, UNSAT, assign_literal, assignment_from_clause,
                   apply_assignment, lit_key, literals, variables)
from . import sat


class _AllLiterals:
    """Marker for "every literal is forced" (the unsatisfiable case)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ALL"

    def __contains__(self, x):
        return True


ALL = _AllLiterals()


@dataclass(frozen=True)
class UnsatOracle:
    """Level-0 unsatisfiability detector for relativised propagation.

    A valid oracle contains {⊥}, holds only unsatisfiable clause-sets and is
    stable under partial assignments.  Stability is the caller's promise; it
    is spot-checked in the tests, never enforced here.
    """
    name: str
    contains: Callable

    def __call__(self, F):
        return self.contains(F)


U0 = UnsatOracle("U0", lambda F: BOT in F)
USAT = UnsatOracle("USAT", lambda F: BOT in F or not sat.satisfiable(F))


def _unit_propagate(F):
    while True:
        if BOT in F:
            return UNSAT
        unit = None
        for c in F:
            if len(c) == 1:
                unit = next(iter(c))
                break
        if unit is None:
            return F
        F = assign_literal(F, unit)


def _order_key(order):
    if order is None:
        return lit_key
    pos = {x: i for i, x in enumerate(order)}
    big = len(pos)
    return lambda x: (pos.get(x, big), lit_key(x))


def _reduce(k, F, oracle, memo, key):
    # Returning {⊥} as soon as the oracle fires is exact for valid oracles:
    # stability makes every further probe fail until no variable is left.
    if oracle(F):
        return UNSAT
    if k == 0:
        return F
    if k == 1 and oracle is U0 and key is lit_key:
        return _unit_propagate(F)
    mk = (k, F)
    hit = memo.get(mk)
    if hit is not None:
        return hit
    G = F
    progress = True
    while progress:
        progress = False
        present = variables(G)
        for x in sorted(literals(G), key=key):
            if abs(x) not in present:
                continue
            if _reduce(k - 1, assign_literal(G, -x), oracle, memo, key) == UNSAT:
                G = assign_literal(G, x)
                if oracle(G):
                    memo[mk] = UNSAT
                    return UNSAT
                present = variables(G)
                progress = True
    memo[mk] = G
    return G


def rk(k, F, order=None, memo=None):
    """r_k(F).

    ``order`` optionally fixes the probing priority of literals (the result
    does not depend on it, only the trace does).  ``memo`` may be shared
    between calls on related inputs.
    """
    if k < 0:
        raise ValueError("level must be non-negative")
    return _reduce(k, F, U0, {} if memo is None else memo, _order_key(order))


def rk_oracle(k, F, oracle, order=None, memo=None):
    """r_k^U(F): as :func:`rk`, with level-0 detection delegated to ``oracle``."""
    if k < 0:
        raise ValueError("level must be non-negative")
    return _reduce(k, F, oracle, {} if memo is None else memo, _order_key(order))


def forced_literals(F):
    """``ALL`` if F is unsatisfiable, else the frozenset of literals x with F ⊨ x."""
    model = sat.solve(F)
    if model is None:
        return ALL
    forced = set()
    # only literals true in one model can be forced
    for x in sorted(model, key=lit_key):
        if abs(x) not in variables(F):
            continue
        if not sat.satisfiable(assign_literal(F, -x)):
            forced.add(x)
    return frozenset(forced)


def rk_inf(F):
    """Apply every forced assignment; {⊥} exactly for unsatisfiable F."""
    forced = forced_literals(F)
    if forced is ALL:
        return UNSAT
    return apply_assignment(forced, F)


def implies_k(F, c, k, memo=None):
    """F ⊨_k C, i.e. r_k(φ_C * F) = {⊥}."""
    return rk(k, apply_assignment(assignment_from_clause(c), F), memo=memo) == UNSAT

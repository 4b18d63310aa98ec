"""Hardness measures hd, phd, whd, hd_U and the classes UC_k, PC_k, Canon_k."""

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .core import (BOT, UNSAT, apply_assignment, assign_literal,
                   assignment_from_clause, canonical_clauses, lit_key,
                   literals, n_vars, variables)
from .reductions import U0, rk, rk_inf, rk_oracle
from .resolution import (height_bounded_closure, is_stable_modulo_subsumption,
                         k_resolution_closure, prime_implicates)
from . import sat

PHD_MAX_VARS = 12


class SizeGuardError(ValueError):
    """Refusal: the instance exceeds an exhaustive-enumeration bound."""

    def __init__(self, what, n, bound):
        super().__init__("%s refuses n=%d variables (bound %d)" % (what, n, bound))
        self.n = n
        self.bound = bound


@dataclass
class HardnessReport:
    value: int
    witness: Optional[frozenset] = None            # a prime implicate attaining value
    per_implicate_levels: dict = field(default_factory=dict)


@dataclass
class PHardnessReport:
    value: int
    witness: Optional[frozenset] = None            # partial assignment attaining value


@dataclass
class WHardnessReport:
    value: int
    witness: Optional[frozenset] = None            # prime implicate (or assignment in full mode)


def _primes_in_order(F):
    return [frozenset(c) for c in canonical_clauses(prime_implicates(F))]


def refutation_level(G, memo=None, oracle=U0):
    """Least k with r_k(G) = {⊥}; G must be unsatisfiable."""
    if memo is None:
        memo = {}
    k = 0
    bound = n_vars(G)
    while rk_oracle(k, G, oracle, memo=memo) != UNSAT:
        k += 1
        if k > bound:
            raise ValueError("clause-set is satisfiable")
    return k


def implicate_level(F, c, memo=None):
    """Least k with F ⊨_k C, for an implicate C of F."""
    return refutation_level(apply_assignment(assignment_from_clause(c), F), memo)


def hardness(F):
    """hd(F) with the prime implicate attaining it and every implicate's level."""
    if not F:
        return HardnessReport(0)
    memo = {}
    levels = {}
    for c in _primes_in_order(F):
        levels[c] = implicate_level(F, c, memo)
    value = max(levels.values())
    witness = next(c for c, v in levels.items() if v == value)
    return HardnessReport(value, witness, levels)


def hardness_2cnf(F):
    """hd for clause-sets with clauses of length ≤ 2, without prime implicates."""
    if any(len(c) > 2 for c in F):
        raise ValueError("not a 2-CNF")
    if sat.satisfiable(F):
        return 0 if is_stable_modulo_subsumption(F) else 1
    if BOT in F:
        return 0
    return 1 if rk(1, F) == UNSAT else 2


def uc_member(F, k):
    """hd(F) ≤ k, stopping at the first prime implicate needing more."""
    memo = {}
    for c in _primes_in_order(F):
        G = apply_assignment(assignment_from_clause(c), F)
        if rk(k, G, memo=memo) != UNSAT:
            return False
    return True


def _enumerate_assignments(vs):
    """All partial assignments over ``vs`` in canonical order (ε first)."""
    vs = sorted(vs)
    for choice in product((None, 0, 1), repeat=len(vs)):
        yield frozenset(v if b else -v for v, b in zip(vs, choice) if b is not None)


def _guard(F, what, max_vars):
    n = n_vars(F)
    if max_vars is not None and n > max_vars:
        raise SizeGuardError(what, n, max_vars)


def _propagation_level(G, memo):
    target = rk_inf(G)
    k = 0
    while rk(k, G, memo=memo) != target:
        k += 1
    return k


def p_hardness(F, max_vars=PHD_MAX_VARS):
    """phd(F): least k with r_k(φ*F) = r_∞(φ*F) for every φ over var(F).

    Equality is extensional.  The witness is the first assignment, in
    canonical enumeration order, that needs the full level.
    """
    _guard(F, "p_hardness", max_vars)
    memo = {}
    seen = {}
    best, witness = 0, frozenset()
    for phi in _enumerate_assignments(variables(F)):
        G = apply_assignment(phi, F)
        lvl = seen.get(G)
        if lvl is None:
            lvl = seen[G] = _propagation_level(G, memo)
        if lvl > best:
            best, witness = lvl, phi
    return PHardnessReport(best, witness)


def pc_member(F, k, max_vars=PHD_MAX_VARS):
    return p_hardness(F, max_vars).value <= k


def width_refutation_level(G):
    """Least k with ⊥ derivable from unsatisfiable G by k-resolution."""
    top = max((len(c) for c in G), default=0)
    for k in range(top + 1):
        if BOT in k_resolution_closure(G, k):
            return k
    raise ValueError("clause-set is satisfiable")


def w_hardness(F, exhaustive=False, max_vars=PHD_MAX_VARS):
    """whd(F).

    By default the maximum runs over prime implicates C (residue φ_C*F);
    ``exhaustive`` maximises over every φ with φ*F unsatisfiable instead.
    """
    if not F:
        return WHardnessReport(0)
    seen = {}

    def level(G):
        if G not in seen:
            seen[G] = width_refutation_level(G)
        return seen[G]

    best, witness = -1, None
    if exhaustive:
        _guard(F, "w_hardness", max_vars)
        for phi in _enumerate_assignments(variables(F)):
            G = apply_assignment(phi, F)
            if sat.satisfiable(G):
                continue
            lvl = level(G)
            if lvl > best:
                best, witness = lvl, phi
        return WHardnessReport(max(best, 0), witness)
    for c in _primes_in_order(F):
        lvl = level(apply_assignment(assignment_from_clause(c), F))
        if lvl > best:
            best, witness = lvl, c
    return WHardnessReport(best, witness)


def hardness_oracle(F, oracle, exhaustive=False, max_vars=PHD_MAX_VARS):
    """hd_U(F).

    The default maximises over prime implicates as for hd; ``exhaustive``
    follows the definition literally over every φ with φ*F unsatisfiable.
    """
    if not F:
        return 0
    memo = {}
    if not exhaustive:
        return max(refutation_level(apply_assignment(assignment_from_clause(c), F),
                                    memo, oracle)
                   for c in _primes_in_order(F))
    _guard(F, "hardness_oracle", max_vars)
    best = 0
    seen = set()
    for phi in _enumerate_assignments(variables(F)):
        G = apply_assignment(phi, F)
        if G in seen:
            continue
        seen.add(G)
        if not sat.satisfiable(G):
            best = max(best, refutation_level(G, memo, oracle))
    return best


def canon_member(F, k, strict=False):
    """Every prime implicate (or, unless ``strict``, a subclause of it) has height ≤ k."""
    H = height_bounded_closure(F, k)
    for c in _primes_in_order(F):
        if strict:
            if c not in H:
                return False
        elif not any(d <= c for d in H):
            return False
    return True


def hardness_gradation_witness(F, k):
    """φ with n(φ) = k and hd(φ*F) = hd(F) - k, for unsatisfiable F.

    Built one literal at a time: each step keeps a literal whose assignment
    lowers the hardness by exactly one.
    """
    if sat.satisfiable(F):
        raise ValueError("gradation witness needs an unsatisfiable clause-set")
    memo = {}
    h = refutation_level(F, memo)
    if not 0 <= k <= h:
        raise ValueError("level %d outside 0..%d" % (k, h))
    phi = set()
    G = F
    for step in range(k):
        want = h - step - 1
        for x in sorted(literals(G), key=lit_key):
            H = assign_literal(G, x)
            if refutation_level(H, memo) == want:
                phi.add(x)
                G = H
                break
        else:
            raise AssertionError("no literal lowers hardness by one")
    return frozenset(phi)

"""SLUR_k transition system and the Altslur*_k variant, by direct simulation."""

from collections import deque
from dataclasses import dataclass

from .core import (BOT, TOP, UNSAT, assign_literal, lit_key, literals, n_vars,
                   variables)
from .hardness import SizeGuardError
from .reductions import rk

SLUR = "slur"
ALTSLUR_STAR = "altslur*"
SLUR_MAX_VARS = 14


@dataclass(frozen=True)
class TransitionConfig:
    k: int
    variant: str = SLUR

    def __post_init__(self):
        if self.variant not in (SLUR, ALTSLUR_STAR):
            raise ValueError("unknown variant %r" % (self.variant,))
        if self.k < 0 or (self.variant == ALTSLUR_STAR and self.k < 1):
            raise ValueError("bad level %d for %s" % (self.k, self.variant))


def _ucp(F):
    """r_1(F) together with an assignment φ such that φ*F = r_1(F)."""
    trail = []
    while True:
        if BOT in F:
            # a total assignment of the rest turns φ*F into exactly {⊥}
            trail.extend(sorted(variables(F)))
            return UNSAT, trail
        unit = None
        for c in F:
            if len(c) == 1:
                unit = next(iter(c))
                break
        if unit is None:
            return F, trail
        trail.append(unit)
        F = assign_literal(F, unit)


class _Decisions:
    """Memoised k-decision recursion (results and witnessing assignments)."""

    def __init__(self):
        self.memo = {}

    def results(self, F, k):
        """{φ*F : φ makes k decisions w.r.t. F} mapped to one witnessing φ each."""
        key = (F, k)
        if key in self.memo:
            return self.memo[key]
        r1, trail = _ucp(F)
        if k == 0:
            out = {r1: frozenset(trail)}
        else:
            out = {}
            for j in range(k):
                lower = self.results(F, j)
                if TOP in lower:
                    out[TOP] = lower[TOP]
                    break
            for x in sorted(literals(F), key=lit_key):
                G, tr = _ucp(assign_literal(F, x))
                head = frozenset([x, *tr])
                for H, phi in self.results(G, k - 1).items():
                    if H not in out:
                        out[H] = head | phi
        self.memo[key] = out
        return out


def k_decision_assignments(F, k):
    """One witnessing assignment per distinct result of making k decisions."""
    return set(_Decisions().results(F, k).values())


def k_decision_results(F, k):
    return set(_Decisions().results(F, k))


class _Successors:
    def __init__(self, cfg):
        self.cfg = cfg
        self.memo = {}
        self.decisions = _Decisions()

    def __call__(self, F):
        cfg = self.cfg
        out = set()
        if cfg.variant == SLUR:
            for x in sorted(literals(F), key=lit_key):
                G = rk(cfg.k, assign_literal(F, x), memo=self.memo)
                if G != UNSAT:
                    out.add(G)
        else:
            out = set(self.decisions.results(F, cfg.k))
            out.discard(UNSAT)
        # ⊤ would otherwise loop onto itself through the "fewer decisions" case
        out.discard(F)
        return out


def slur_successors(F, cfg):
    return _Successors(cfg)(F)


def _guard(F, max_vars):
    n = n_vars(F)
    if max_vars is not None and n > max_vars:
        raise SizeGuardError("slur simulation", n, max_vars)


def slur_reachability(F, cfg, max_vars=SLUR_MAX_VARS):
    """Breadth-first exploration of the states reachable from F.

    Returns ``(states, edges, terminals)`` where ``states`` lists clause-sets
    in discovery order and ``edges`` holds index pairs.
    """
    _guard(F, max_vars)
    succ = _Successors(cfg)
    index = {F: 0}
    states = [F]
    edges = []
    terminals = set()
    queue = deque([F])
    while queue:
        G = queue.popleft()
        nxt = succ(G)
        if not nxt:
            terminals.add(G)
        for H in sorted(nxt, key=lambda H: (len(H), sorted(map(sorted, H)))):
            if H not in index:
                index[H] = len(states)
                states.append(H)
                queue.append(H)
            edges.append((index[G], index[H]))
    return states, edges, terminals


def slur_terminal_set(F, cfg, max_vars=SLUR_MAX_VARS):
    """slur_k(F): every fully reduced clause-set reachable from F."""
    return frozenset(slur_reachability(F, cfg, max_vars)[2])


def member_from_terminals(F, cfg, terminals):
    """Membership decided from an already computed terminal set."""
    if cfg.variant == SLUR:
        return terminals == {TOP} or rk(cfg.k, F) == UNSAT
    return terminals == {F} or terminals == {TOP}


def slur_member(F, cfg, max_vars=SLUR_MAX_VARS):
    """Membership in SLUR_k (or Altslur*_k) by simulating the transition system."""
    if cfg.variant == SLUR and rk(cfg.k, F) == UNSAT:
        return True
    return member_from_terminals(F, cfg, slur_terminal_set(F, cfg, max_vars))


def altslurstar_member(F, k, max_vars=SLUR_MAX_VARS):
    return slur_member(F, TransitionConfig(k, ALTSLUR_STAR), max_vars)

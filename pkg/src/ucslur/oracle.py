"""Brute-force reference implementations.

Nothing here imports the library modules: the search, the restriction of
clause-sets and the resolution are written again on purpose, so that the
tests compare two independent routes.  Clauses and clause-sets use the same
frozenset encoding as :mod:`ucslur.core`.
"""

from dataclasses import dataclass
from itertools import product


class OracleBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vars: int = 8
    max_nodes: int = 10**7

    def __post_init__(self):
        if self.max_vars <= 0 or self.max_nodes <= 0:
            raise ValueError("budget fields must be positive")


PRIMES_BUDGET = OracleBudget(max_vars=8)
HARDNESS_BUDGET = OracleBudget(max_vars=6)


def _vars(F):
    return sorted({abs(x) for c in F for x in c})


def _restrict(F, true_lits):
    out = set()
    for c in F:
        if any(x in true_lits for x in c):
            continue
        out.add(frozenset(x for x in c if -x not in true_lits))
    return frozenset(out)


def _check_vars(F, budget):
    n = len(_vars(F))
    if n > budget.max_vars:
        raise OracleBudgetExceeded("%d variables exceed oracle bound %d" % (n, budget.max_vars))


class _Counter:
    def __init__(self, limit):
        self.limit = limit
        self.n = 0

    def tick(self):
        self.n += 1
        if self.n > self.limit:
            raise OracleBudgetExceeded("more than %d search nodes" % self.limit)


def _search(F, order, i, model, counter):
    counter.tick()
    if frozenset() in F:
        return None
    if not F:
        return dict(model)
    while i < len(order) and not any(abs(x) == order[i] for c in F for x in c):
        i += 1
    v = order[i]
    for val in (1, 0):
        model[v] = val
        got = _search(_restrict(F, {v if val else -v}), order, i + 1, model, counter)
        if got is not None:
            return got
        del model[v]
    return None


def sat_complete(F, budget=OracleBudget()):
    """(satisfiable, model) by plain chronological backtracking.

    The model maps every variable of F to 0/1 and is checked before it is
    returned.
    """
    order = _vars(F)
    model = _search(F, order, 0, {}, _Counter(budget.max_nodes))
    if model is None:
        return False, None
    for v in order:
        model.setdefault(v, 0)
    true_lits = {v if b else -v for v, b in model.items()}
    if _restrict(F, true_lits):
        raise AssertionError("oracle model does not satisfy the clause-set")
    return True, model


def _implied(F, c, budget):
    return not sat_complete(F | {frozenset([-x]) for x in c}, budget)[0]


def prime_implicates_bruteforce(F, budget=PRIMES_BUDGET):
    """Every non-tautological clause over var(F) that F implies, kept if subset-minimal."""
    _check_vars(F, budget)
    vs = _vars(F)
    implied = set()
    for signs in product((0, 1, -1), repeat=len(vs)):
        c = frozenset(v * s for v, s in zip(vs, signs) if s)
        if _implied(F, c, budget):
            implied.add(c)
    # implication is closed upwards, so checking one-literal-smaller subclauses suffices
    return frozenset(c for c in implied if not any(c - {x} in implied for x in c))


def _resolve(c, d):
    pivot = None
    for x in c:
        if -x in d:
            if pivot is not None:
                return None
            pivot = x
    if pivot is None:
        return None
    return (c | d) - {pivot, -pivot}


def strahler_refutation_level(G, budget=OracleBudget()):
    """Least h such that some resolution tree with Horton-Strahler number ≤ h refutes G.

    Level sets: D_0 = G and D_h is the closure of D_{h-1} under resolving a
    member of D_h with a member of D_{h-1}, which is exactly the set of
    clauses derivable by trees with number ≤ h.
    """
    if frozenset() in G:
        return 0
    counter = _Counter(budget.max_nodes)
    prev = frozenset(G)
    for h in range(1, len(_vars(G)) + 2):
        cur = set(prev)
        work = list(cur)
        while work:
            a = work.pop()
            for b in prev:
                counter.tick()
                r = _resolve(a, b)
                if r is None or r in cur:
                    continue
                if not r:
                    return h
                cur.add(r)
                work.append(r)
        if len(cur) == len(prev):
            break
        prev = frozenset(cur)
    raise ValueError("clause-set is satisfiable")


def hardness_bruteforce(F, budget=HARDNESS_BUDGET):
    """Maximum over all φ with φ*F unsatisfiable of the least refuting Strahler number."""
    _check_vars(F, budget)
    if not F:
        return 0
    vs = _vars(F)
    best = 0
    seen = set()
    for signs in product((0, 1, -1), repeat=len(vs)):
        G = _restrict(F, {v * s for v, s in zip(vs, signs) if s})
        if G in seen:
            continue
        seen.add(G)
        if sat_complete(G, budget)[0]:
            continue
        best = max(best, strahler_refutation_level(G, budget))
    return best

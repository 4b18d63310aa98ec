"""Small complete DPLL used by the library modules.

Deliberately separate from :mod:`ucslur.oracle`, which has its own
search so that the two can be cross-checked.
"""

from .core import BOT, assign_literal, lit_key


def _propagate(F, trail):
    while True:
        if BOT in F:
            return F
        unit = None
        for c in F:
            if len(c) == 1:
                unit = next(iter(c))
                break
        if unit is None:
            return F
        trail.append(unit)
        F = assign_literal(F, unit)


def _branch_literal(F):
    counts = {}
    for c in F:
        w = 2.0 ** -len(c)
        for x in c:
            counts[x] = counts.get(x, 0.0) + w
    return max(counts, key=lambda x: (counts[x] + counts.get(-x, 0.0), -abs(x), x > 0))


def solve(F):
    """Return a satisfying assignment (frozenset of true literals) or None."""
    trail = []
    F = _propagate(F, trail)
    if BOT in F:
        return None
    if not F:
        return frozenset(trail)
    x = _branch_literal(F)
    for y in (x, -x):
        model = solve(assign_literal(F, y))
        if model is not None:
            return frozenset(trail) | {y} | model
    return None


def satisfiable(F):
    return solve(F) is not None


def implies(F, c):
    """F ⊨ C, decided by refuting F ∪ {{x̄} : x ∈ C}."""
    G = F
    for x in sorted(c, key=lit_key):
        G = assign_literal(G, -x)
        if BOT in G:
            return True
    return not satisfiable(G)

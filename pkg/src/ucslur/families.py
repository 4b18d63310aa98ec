"""Class recognition and generators for the standard instance families."""

import random
from math import comb
from dataclasses import dataclass, field
from itertools import combinations, product

from .core import canonical_clauses, clause_set, n_vars, variables
from . import sat

HORN = "Horn"
PURE_HORN = "PureHorn"
RENAMABLE_HORN = "RenamableHorn"
TWO_CNF = "2CNF"
FULL = "Full"


def is_horn(F):
    return all(sum(1 for x in c if x > 0) <= 1 for c in F)


def is_pure_horn(F):
    return all(sum(1 for x in c if x > 0) == 1 for c in F)


def renaming_constraints(F):
    """2-CNF over flip variables, satisfiable iff F is renamable Horn.

    Flip variable v (true = flip v) makes literal x positive iff
    (x > 0) xor flip_v; each pair in a clause may not both end up positive.
    """
    def positive(x):
        v = abs(x)
        return -v if x > 0 else v

    G = set()
    for c in F:
        for x, y in combinations(sorted(c), 2):
            G.add(frozenset([-positive(x), -positive(y)]))
    return frozenset(G)


def horn_renaming(F):
    """A set of variables whose flipping makes F Horn, or None."""
    model = sat.solve(renaming_constraints(F))
    if model is None:
        return None
    return frozenset(x for x in model if x > 0 and x in variables(F))


def flip(F, vs):
    vs = frozenset(vs)
    return frozenset(frozenset(-x if abs(x) in vs else x for x in c) for c in F)


def is_renamable_horn(F):
    return horn_renaming(F) is not None


def is_full(F):
    vs = variables(F)
    return all(len(c) == len(vs) for c in F)


def classify(F):
    tags = set()
    if is_horn(F):
        tags.add(HORN)
    if is_pure_horn(F):
        tags.add(PURE_HORN)
    if is_renamable_horn(F):
        tags.add(RENAMABLE_HORN)
    width = max((len(c) for c in F), default=0)
    if width <= 2:
        tags.add(TWO_CNF)
    tags.add("%dCNF" % width)
    if is_full(F):
        tags.add(FULL)
    return tags


# ---------------------------------------------------------------------------
# generators

def gen_full(n):
    """A_n: all 2^n full clauses over variables 1..n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return frozenset(frozenset(v if s else -v for v, s in zip(range(1, n + 1), signs))
                     for signs in product((False, True), repeat=n))


def gen_full_minus_one(n):
    """A_n without its canonically first clause (satisfiable, hd = n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    A = gen_full(n)
    first = frozenset(canonical_clauses(A)[0])
    return A - {first}


def gen_pump(F, v):
    """{C ∪ {v}} ∪ {C ∪ {v̄}} over C ∈ F; raises the hardness by one."""
    if v <= 0:
        raise ValueError("variable must be positive")
    if v in variables(F):
        raise ValueError("variable %d occurs in F" % v)
    return frozenset(c | {s} for c in F for s in (v, -v))


def gen_horn_chain(n):
    """{x1}, {x̄i, x_{i+1}} for i < n, {x̄n}: unsatisfiable Horn, hd 1."""
    if n < 1:
        raise ValueError("n must be positive")
    F = [[1]] + [[-i, i + 1] for i in range(1, n)] + [[-n]]
    return clause_set(F)


def php_var(i, j, n):
    """Variable for pigeon i sitting in hole j (both 1-based)."""
    return (i - 1) * n + j


def gen_php(m, n):
    """Pigeonhole PHP^m_n: m pigeons, n holes."""
    if m < 1 or n < 1:
        raise ValueError("need at least one pigeon and one hole")
    F = [[php_var(i, j, n) for j in range(1, n + 1)] for i in range(1, m + 1)]
    for j in range(1, n + 1):
        for i, i2 in combinations(range(1, m + 1), 2):
            F.append([-php_var(i, j, n), -php_var(i2, j, n)])
    return clause_set(F)


def gen_random(n, k, c, seed):
    """c distinct random clauses of exactly k distinct variables over 1..n.

    Uniform over clause sequences with rejection of repeats, so not uniform
    over clause-sets.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if c > comb(n, k) * 2 ** k:
        raise ValueError("only %d distinct %d-clauses over %d variables"
                         % (comb(n, k) * 2 ** k, k, n))
    rng = random.Random(seed)
    out = set()
    while len(out) < c:
        vs = rng.sample(range(1, n + 1), k)
        out.add(frozenset(v if rng.random() < 0.5 else -v for v in vs))
    return frozenset(out)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def describe(self):
        args = " ".join("%s=%s" % kv for kv in sorted(self.params.items()))
        return ("family=%s %s" % (self.family, args)).strip()


_FAMILIES = {
    "full": (gen_full, ("n",)),
    "full-minus-one": (gen_full_minus_one, ("n",)),
    "horn-chain": (gen_horn_chain, ("n",)),
    "php": (gen_php, ("m", "n")),
    "random": (gen_random, ("n", "k", "c", "seed")),
}

FAMILIES = tuple(_FAMILIES) + ("pump",)


def generate(spec):
    """Build the clause-set described by ``spec`` (deterministic)."""
    if spec.family == "pump":
        base = generate(FamilySpec(spec.params["base"], {k: v for k, v in spec.params.items()
                                                         if k not in ("base", "times")}))
        F = base
        for _ in range(spec.params.get("times", 1)):
            F = gen_pump(F, max((abs(x) for c in F for x in c), default=0) + 1)
        return F
    try:
        fn, names = _FAMILIES[spec.family]
    except KeyError:
        raise ValueError("unknown family %r" % spec.family) from None
    missing = [p for p in names if p not in spec.params]
    if missing:
        raise ValueError("family %s needs %s" % (spec.family, ", ".join(missing)))
    return fn(*(spec.params[p] for p in names))


def expected_hardness(spec):
    """Known hd for the structured families, None where there is no closed form."""
    p = spec.params
    if spec.family == "full":
        return p["n"]
    if spec.family == "full-minus-one":
        return p["n"] - 1
    if spec.family == "horn-chain":
        return 1
    if spec.family == "pump":
        inner = FamilySpec(p["base"], {k: v for k, v in p.items() if k not in ("base", "times")})
        base = expected_hardness(inner)
        return None if base is None else base + p.get("times", 1)
    return None


def describe_sizes(F):
    return {"n": n_vars(F), "c": len(F), "l": sum(map(len, F))}

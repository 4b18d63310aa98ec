"""Resolution: resolvents, prime implicates, resolution trees and bounded closures."""

from dataclasses import dataclass
from itertools import combinations

from .core import (BOT, UNSAT, apply_assignment, assign_literal,
                   assignment_from_clause, clause_key, format_clause, lit_key,
                   variables)
from .reductions import implies_k


class NotResolvable(ValueError):
    """The two clauses clash in zero or in at least two literals."""


class BudgetExhausted(RuntimeError):
    """A witness search ran past its node budget without deciding."""


def clash(c, d):
    return [x for x in c if -x in d]


def resolvent(c, d):
    """(C ∪ D) minus the unique clashing pair; raises :class:`NotResolvable` otherwise."""
    xs = clash(c, d)
    if len(xs) != 1:
        raise NotResolvable("%s and %s clash in %d literals"
                            % (format_clause(c), format_clause(d), len(xs)))
    x = xs[0]
    return (c | d) - {x, -x}


def _try_resolve(c, d):
    x = None
    for y in c:
        if -y in d:
            if x is not None:
                return None
            x = y
    if x is None:
        return None
    return (c | d) - {x, -x}


# ---------------------------------------------------------------------------
# prime implicates

def subsumption_reduce(F):
    out = []
    for c in sorted(F, key=len):
        if not any(d <= c for d in out):
            out.append(c)
    return frozenset(out)


def prime_implicates(F):
    """prc0(F): resolution closure with subsumption elimination.

    Unsatisfiable input yields {⊥}, ⊤ yields ⊤.
    """
    S = set(subsumption_reduce(F))
    if BOT in S:
        return UNSAT
    work = sorted(S, key=lambda c: (len(c), clause_key(c)))
    while work:
        c = work.pop()
        if c not in S:
            continue
        for d in list(S):
            r = _try_resolve(c, d)
            if r is None or any(e <= r for e in S):
                continue
            if not r:
                return UNSAT
            S = {e for e in S if not r <= e}
            S.add(r)
            work.append(r)
    return frozenset(S)


def is_stable_modulo_subsumption(F):
    """Every resolvent of two clauses of F contains some clause of F."""
    for c, d in combinations(F, 2):
        r = _try_resolve(c, d)
        if r is not None and not any(e <= r for e in F):
            return False
    return True


# ---------------------------------------------------------------------------
# resolution trees

@dataclass(frozen=True)
class Leaf:
    clause: frozenset


@dataclass(frozen=True)
class Node:
    left: object
    right: object
    pivot: int          # the literal of ``left.clause`` whose complement is in ``right.clause``
    clause: frozenset


def make_node(left, right):
    xs = clash(left.clause, right.clause)
    if len(xs) != 1:
        raise NotResolvable("children clash in %d literals" % len(xs))
    return Node(left, right, xs[0], resolvent(left.clause, right.clause))


def horton_strahler(T):
    if isinstance(T, Leaf):
        return 0
    a, b = horton_strahler(T.left), horton_strahler(T.right)
    return a + 1 if a == b else max(a, b)


def height(T):
    if isinstance(T, Leaf):
        return 0
    return 1 + max(height(T.left), height(T.right))


def leaf_count(T):
    if isinstance(T, Leaf):
        return 1
    return leaf_count(T.left) + leaf_count(T.right)


def verify_tree(T, F=None):
    """Re-check every node; with ``F`` given also check every axiom is in F."""
    if isinstance(T, Leaf):
        return F is None or T.clause in F
    if not (verify_tree(T.left, F) and verify_tree(T.right, F)):
        return False
    c, d = T.left.clause, T.right.clause
    if clash(c, d) != [T.pivot]:
        return False
    return T.clause == (c | d) - {T.pivot, -T.pivot}


def tree_to_json(T):
    if isinstance(T, Leaf):
        return {"axiom": list(clause_key(T.clause))}
    return {"pivot": T.pivot, "clause": list(clause_key(T.clause)),
            "left": tree_to_json(T.left), "right": tree_to_json(T.right)}


def tree_from_json(data):
    if "axiom" in data:
        return Leaf(frozenset(data["axiom"]))
    T = make_node(tree_from_json(data["left"]), tree_from_json(data["right"]))
    if T.pivot != data["pivot"] or T.clause != frozenset(data["clause"]):
        raise ValueError("inconsistent node %r" % (data,))
    return T


# ---------------------------------------------------------------------------
# nested input resolution: explicit tree search

def _lift(T, F, false_lits):
    """Map a tree over φ*F back to one over F, where φ makes ``false_lits`` false.

    Axioms of φ*F are replaced by an original clause they came from; every
    derived clause grows at most by literals from ``false_lits``.
    """
    if isinstance(T, Leaf):
        target = T.clause
        best = None
        for d in F:
            if any(-x in d for x in false_lits):
                continue        # satisfied, so not an axiom of φ*F
            if d - false_lits == target:
                if best is None or clause_key(d) < clause_key(best):
                    best = d
        if best is None:
            raise AssertionError("no original clause for %s" % format_clause(target))
        return Leaf(best)
    return make_node(_lift(T.left, F, false_lits), _lift(T.right, F, false_lits))


class _TreeSearch:
    """Search refutations with Horton-Strahler number ≤ k.

    The root of such a refutation of G resolves on some variable v: one side
    derives ⊆{v} and the other ⊆{v̄}, one of them with number ≤ k-1.  A side
    deriving ⊆{v} is exactly a refutation of ⟨v→0⟩*G lifted back to G.
    """

    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0
        self.memo = {}

    def refute(self, G, k):
        if BOT in G:
            return Leaf(BOT)
        if k == 0:
            return None
        key = (G, k)
        if key in self.memo:
            return self.memo[key]
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted("tree search exceeded %d nodes" % self.budget)
        found = None
        for v in sorted(variables(G)):
            for lo, hi in ((v, -v), (-v, v)):
                # side A: refute with lo false (derives ⊆{lo}), number ≤ k-1
                ga = assign_literal(G, -lo)
                ta = self.refute(ga, k - 1)
                if ta is None:
                    continue
                ta = _lift(ta, G, frozenset([lo]))
                if not ta.clause:
                    found = ta
                    break
                gb = assign_literal(G, -hi)
                tb = self.refute(gb, k)
                if tb is None:
                    continue
                tb = _lift(tb, G, frozenset([hi]))
                found = tb if not tb.clause else make_node(ta, tb)
                break
            if found is not None:
                break
        self.memo[key] = found
        return found


def find_nested_derivation(F, c, k, budget=10**6):
    """A tree T : F ⊢ C' with C' ⊆ C and hts(T) ≤ k, or None.

    Independent of r_k: the search works on resolution trees directly.
    Raises :class:`BudgetExhausted` when the budget is spent.
    """
    phi = assignment_from_clause(c)
    G = apply_assignment(phi, F)
    search = _TreeSearch(budget)
    T = search.refute(G, k)
    if T is None:
        return None
    return _lift(T, F, frozenset(c))


def derives_nested(F, c, k, witness=False, budget=10**6):
    """F ⊢_k C.

    Without ``witness`` this is the fast path through F ⊨_k C.  With
    ``witness`` an explicit tree search runs and the tree (or None) is
    returned instead of a bool.
    """
    if not witness:
        return implies_k(F, c, k)
    return find_nested_derivation(F, c, k, budget)


# ---------------------------------------------------------------------------
# bounded closures (no subsumption pruning: pruning would change levels)

def height_bounded_closure(F, k):
    """H_k: all clauses derivable by resolution trees of height ≤ k."""
    H = set(F)
    for _ in range(k):
        cur = list(H)
        new = set()
        for c, d in combinations(cur, 2):
            r = _try_resolve(c, d)
            if r is not None and r not in H:
                new.add(r)
        if not new:
            break
        H |= new
    return frozenset(H)


def k_resolution_closure(F, k):
    """Least superset of F closed under resolutions with a parent of length ≤ k."""
    H = set(F)
    short = [c for c in H if len(c) <= k]
    work = list(H)
    while work:
        c = work.pop()
        partners = list(H) if len(c) <= k else list(short)
        for d in partners:
            r = _try_resolve(c, d)
            if r is None or r in H:
                continue
            H.add(r)
            work.append(r)
            if len(r) <= k:
                short.append(r)
    return frozenset(H)


def derives_subclause(closure, c):
    return any(d <= c for d in closure)

"""Equivalence, k-base verification and minimum k-bases."""

import math
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .core import (BOT, TOP, UNSAT, apply_assignment, canonical_clauses,
                   format_clause, lit_key, n_literals)
from .hardness import uc_member
from .reductions import ALL, forced_literals
from .resolution import prime_implicates
from . import sat


@dataclass
class BaseSearchResult:
    base: frozenset
    exact: bool
    trace: list = field(default_factory=list)

    @property
    def cardinality(self):
        return len(self.base)

    @property
    def size(self):
        return n_literals(self.base)


def equivalent(F, G):
    return all(sat.implies(G, c) for c in F) and all(sat.implies(F, c) for c in G)


def _hd_ok(F, k):
    return k == math.inf or uc_member(F, k)


def is_k_base(F, k):
    """hd(F) ≤ k, and no single clause or literal occurrence can be dropped.

    ``k`` may be ``math.inf``; the hardness condition is then vacuous.
    """
    if not _hd_ok(F, k):
        return False
    for c in canonical_clauses(F):
        c = frozenset(c)
        rest = F - {c}
        smaller = [rest]
        smaller += [rest | {c - {x}} for x in sorted(c, key=lit_key)]
        for G in smaller:
            if equivalent(G, F) and _hd_ok(G, k):
                return False
    return True


def min_base_from_primes(F, k, budget=100000):
    """Minimum-cardinality G ⊆ F with G ≡ F and hd(G) ≤ k, for F = prc0(F).

    Clauses not implied by the others belong to every candidate.  The other
    clauses are added by increasing count, in canonical order, so the first
    hit is a minimum and the lexicographically least one.  Past ``budget``
    candidates the search stops and returns F itself with ``exact=False``.
    """
    if prime_implicates(F) != F:
        raise ValueError("input must equal its set of prime implicates")
    ordered = [frozenset(c) for c in canonical_clauses(F)]
    core = [c for c in ordered if not sat.implies(F - {c}, c)]
    optional = [c for c in ordered if c not in core]
    trace = ["core of %d irredundant clauses, %d optional" % (len(core), len(optional))]
    tried = 0
    base = frozenset(core)
    for size in range(len(optional) + 1):
        for extra in combinations(optional, size):
            tried += 1
            if tried > budget:
                trace.append("budget of %d candidates exhausted" % budget)
                return BaseSearchResult(F, False, trace)
            G = base | frozenset(extra)
            if all(sat.implies(G, c) for c in optional if c not in G) and _hd_ok(G, k):
                trace.append("found after %d candidates" % tried)
                return BaseSearchResult(G, True, trace)
    raise AssertionError("F itself must qualify")


# ---------------------------------------------------------------------------
# 2-CNF

def implication_digraph(F):
    """Arcs ā→b and b̄→a for every clause {a, b} (skew-symmetric by construction)."""
    D = nx.DiGraph()
    for c in F:
        if len(c) != 2:
            raise ValueError("clause %s is not binary" % format_clause(c))
        a, b = sorted(c, key=lit_key)
        D.add_edge(-a, b)
        D.add_edge(-b, a)
    return D


def prime_implicates_2cnf(F):
    """prc0 of a 2-CNF by reachability in the implication digraph."""
    if any(len(c) > 2 for c in F):
        raise ValueError("not a 2-CNF")
    if BOT in F:
        return UNSAT
    units = {next(iter(c)) for c in F if len(c) == 1}
    D = implication_digraph([c for c in F if len(c) == 2])
    for x in units:
        D.add_edge(-x, x)
    reach = {u: nx.descendants(D, u) for u in D}
    forced = {x for x in D if x in reach.get(-x, ())} | units
    if any(-x in forced for x in forced):
        return UNSAT
    fixed = {abs(x) for x in forced}
    out = {frozenset([x]) for x in forced}
    for u, vs in reach.items():
        if abs(u) in fixed:
            continue
        for v in vs:
            if abs(v) not in fixed and abs(v) != abs(u):
                out.add(frozenset([-u, v]))
    return frozenset(out)


def _min_equivalent_binary(P):
    """Smallest subset of a transitively closed binary P equivalent to P.

    P must have no forced literals.  Strongly connected components get a
    spanning cycle, components are joined along the transitive reduction
    of the condensation.  Each arc u→v maps back to clause {ū, v}; choosing
    canonical minimum representatives keeps dual arcs on the same clause.
    """
    D = implication_digraph(P)
    comps = [frozenset(s) for s in nx.strongly_connected_components(D)]
    comps.sort(key=lambda s: lit_key(min(s, key=lit_key)))
    rep = {s: min(s, key=lit_key) for s in comps}
    cond = nx.condensation(D, comps)
    chosen = set()
    cycles = 0
    done = set()
    for s in comps:
        # the contrapositive of a cycle through s is a cycle through its dual
        dual = frozenset(-u for u in s)
        if len(s) < 2 or dual in done:
            continue
        done.add(s)
        cyc = sorted(s, key=lit_key)
        for u, v in zip(cyc, cyc[1:] + cyc[:1]):
            chosen.add(frozenset([-u, v]))
        cycles += 1
    tr = nx.transitive_reduction(cond)
    for a, b in tr.edges():
        u, v = rep[comps[a]], rep[comps[b]]
        chosen.add(frozenset([-u, v]))
    return frozenset(chosen), len(comps), cycles, tr.number_of_edges()


def min_base_2cnf(F, k=math.inf):
    """Shortest equivalent k-base of a 2-CNF, in polynomial time."""
    if any(len(c) > 2 for c in F):
        raise ValueError("not a 2-CNF")
    trace = []
    forced = forced_literals(F)
    if forced is ALL:
        trace.append("unsatisfiable: base is {⊥}")
        return BaseSearchResult(UNSAT, True, trace)
    if not F:
        trace.append("empty clause-set")
        return BaseSearchResult(TOP, True, trace)
    units = frozenset(frozenset([x]) for x in forced)
    G = apply_assignment(forced, F)
    trace.append("split off %d forced literals" % len(forced))
    P = prime_implicates_2cnf(G)
    trace.append("%d binary prime implicates" % len(P))
    if k == 0:
        trace.append("k=0: base is the full set of prime implicates")
        return BaseSearchResult(units | P, True, trace)
    rest, ncomp, ncyc, ntr = _min_equivalent_binary(P)
    trace.append("%d components, %d spanning cycles, %d reduction arcs -> %d clauses"
                 % (ncomp, ncyc, ntr, len(rest)))
    return BaseSearchResult(units | rest, True, trace)

"""Clause-set data model.

Literals are non-zero signed integers in DIMACS style: ``v`` is the positive
literal of variable ``v`` and ``-v`` its complement.  A clause is a
``frozenset`` of literals without a clashing pair, a clause-set is a
``frozenset`` of clauses.  Both are plain immutable values, so equality is
extensional and they can be used directly as dictionary keys.

A partial assignment is stored as the frozenset of literals it makes true;
``assignment({1: 1, 2: 0})`` builds ``frozenset({1, -2})``.
"""

import json
import re

BOT = frozenset()                 # the empty clause
TOP = frozenset()                 # the empty clause-set
UNSAT = frozenset([BOT])          # {⊥}
EMPTY_ASSIGNMENT = frozenset()


class ParseError(ValueError):
    pass


class ClashError(ValueError):
    """A clause or assignment contains a literal together with its complement."""


# ---------------------------------------------------------------------------
# construction

def lit_key(x):
    return (abs(x), x < 0)


def clause(lits=()):
    c = frozenset(lits)
    if 0 in c:
        raise ValueError("0 is not a literal")
    for x in c:
        if -x in c:
            raise ClashError("clause contains %d and %d" % (x, -x))
    return c


def clause_set(clauses=()):
    """Build a clause-set from any iterable of literal iterables."""
    return frozenset(clause(c) for c in clauses)


def assignment(bindings):
    """Partial assignment from a ``{variable: bit}`` mapping or an iterable of true literals."""
    if isinstance(bindings, dict):
        lits = []
        for v, b in bindings.items():
            if v <= 0 or b not in (0, 1, False, True):
                raise ValueError("bad binding %r -> %r" % (v, b))
            lits.append(v if b else -v)
        return frozenset(lits)
    phi = frozenset(bindings)
    for x in phi:
        if -x in phi:
            raise ClashError("variable %d bound twice" % abs(x))
    return phi


def assignment_dict(phi):
    return {abs(x): int(x > 0) for x in sorted(phi, key=lit_key)}


def assignment_from_clause(c):
    """φ_C: sets exactly the literals of ``c`` to 0."""
    return frozenset(-x for x in c)


# ---------------------------------------------------------------------------
# measures

def variables(F):
    return frozenset(abs(x) for c in F for x in c)


def literals(F):
    """lit(F): both polarities of every occurring variable."""
    vs = variables(F)
    return frozenset(vs) | frozenset(-v for v in vs)


def n_vars(F):
    return len(variables(F))


def n_clauses(F):
    return len(F)


def n_literals(F):
    return sum(len(c) for c in F)


def max_var(F):
    return max((abs(x) for c in F for x in c), default=0)


def sorted_literals(lits):
    return sorted(lits, key=lit_key)


# ---------------------------------------------------------------------------
# application of partial assignments

def apply_assignment(phi, F):
    """φ * F: drop satisfied clauses, strip falsified literals."""
    if not phi:
        return F
    phi = frozenset(phi)
    false = frozenset(-x for x in phi)
    out = set()
    for c in F:
        if c & phi:
            continue
        out.add(c - false if c & false else c)
    return frozenset(out)


def assign_literal(F, x):
    """⟨x→1⟩ * F for a single literal (hot path of the reductions)."""
    nx = -x
    out = set()
    for c in F:
        if x in c:
            continue
        out.add(c - {nx} if nx in c else c)
    return frozenset(out)


# ---------------------------------------------------------------------------
# canonical form and serialisation

def clause_key(c):
    return tuple(sorted(c, key=lit_key))


def _clause_order(c):
    return [lit_key(x) for x in clause_key(c)]


def canonical_clauses(F):
    """Clauses of ``F`` as sorted literal tuples in the fixed canonical order."""
    return sorted((clause_key(c) for c in F), key=lambda t: [lit_key(x) for x in t])


def canonical_form(F):
    """Hashable key, identical exactly for extensionally equal clause-sets."""
    return tuple(canonical_clauses(F))


def canonical_assignment(phi):
    return tuple(sorted(phi, key=lit_key))


def to_json(F):
    return [list(c) for c in canonical_clauses(F)]


def from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    return clause_set(data)


def format_clause(c):
    if not c:
        return "⊥"
    return "{" + ",".join(str(x) for x in clause_key(c)) + "}"


def format_clause_set(F):
    if not F:
        return "⊤"
    return "{" + ", ".join(format_clause(c) for c in sorted(F, key=_clause_order)) + "}"


_HEADER = re.compile(r"^p\s+cnf\s+(\d+)\s+(\d+)\s*$")


def parse_dimacs(text):
    """Parse DIMACS CNF.

    Duplicate literals inside a clause and duplicate clauses are merged.  A
    clause containing a complementary pair is rejected, the error names the
    line.  A clause may span several lines; it ends at its terminating 0.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    n_declared = None
    clauses = []
    current = []
    start_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n_declared is not None:
                raise ParseError("line %d: second header" % lineno)
            m = _HEADER.match(line)
            if not m:
                raise ParseError("line %d: malformed header %r" % (lineno, line))
            n_declared = int(m.group(1))
            continue
        if line.startswith("%"):
            # SATLIB files end with '%' followed by a stray 0
            break
        if n_declared is None:
            raise ParseError("line %d: clause before 'p cnf' header" % lineno)
        for tok in line.split():
            try:
                x = int(tok)
            except ValueError:
                raise ParseError("line %d: bad token %r" % (lineno, tok)) from None
            if start_line is None:
                start_line = lineno
            if x == 0:
                lits = set(current)
                for y in lits:
                    if -y in lits:
                        raise ParseError(
                            "line %d: tautological clause (contains %d and %d)"
                            % (start_line, abs(y), -abs(y)))
                clauses.append(frozenset(lits))
                current = []
                start_line = None
                continue
            if abs(x) > n_declared:
                raise ParseError("line %d: literal %d exceeds declared %d variables"
                                 % (lineno, x, n_declared))
            current.append(x)
    if n_declared is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("line %d: last clause not terminated by 0" % start_line)
    return frozenset(clauses)


def emit_dimacs(F, comments=(), n=None):
    if n is None:
        n = max_var(F)
    out = ["c " + line for line in comments]
    out.append("p cnf %d %d" % (n, len(F)))
    for c in canonical_clauses(F):
        out.append(" ".join(str(x) for x in c) + (" 0" if c else "0"))
    return "\n".join(out) + "\n"

"""Command line front end: ``ucslur <command> [options]``.

Every command except ``gen`` reads DIMACS from a path (or stdin for ``-``)
and writes a JSON report.  Exit status: 0 computed, 2 refused by a size or
search guard, 1 any other error.

Budget defaults can be overridden through the environment:
UCSLUR_PHD_MAX_VARS, UCSLUR_SLUR_MAX_VARS, UCSLUR_ORACLE_MAX_VARS,
UCSLUR_BASE_BUDGET, UCSLUR_TREE_BUDGET.
"""

import argparse
import hashlib
import json
import math
import os
import platform
import sys
import time

from . import __version__
from .bases import is_k_base, min_base_2cnf, min_base_from_primes
from .core import (UNSAT, ParseError, clause, emit_dimacs, n_literals, n_vars,
                   parse_dimacs, sorted_literals, to_json)
from .families import FAMILIES, FamilySpec, classify, generate
from .hardness import (PHD_MAX_VARS, SizeGuardError, hardness, hardness_2cnf,
                       p_hardness, w_hardness)
from .oracle import OracleBudget, OracleBudgetExceeded, hardness_bruteforce
from .reductions import implies_k, rk
from .resolution import (BudgetExhausted, find_nested_derivation, horton_strahler,
                         prime_implicates, tree_to_json)
from .slur import (ALTSLUR_STAR, SLUR, SLUR_MAX_VARS, TransitionConfig,
                   member_from_terminals, slur_reachability)

SCHEMA_VERSION = "ucslur-report/1"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_GUARD = 2


class GuardRefusal(Exception):
    pass


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError("%s must be an integer, got %r" % (name, raw)) from None
    if value <= 0:
        raise ValueError("%s must be positive" % name)
    return value


def _read_input(path):
    if path in (None, "-"):
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return data, parse_dimacs(data)


def _clause_json(c):
    return None if c is None else list(sorted_literals(c))


def _parse_clause(text):
    toks = text.replace(",", " ").split()
    try:
        lits = [int(t) for t in toks]
    except ValueError:
        raise ValueError("clause must be signed integers, got %r" % text) from None
    if any(x == 0 for x in lits):
        raise ValueError("0 is not a literal")
    return clause(lits)


def _parse_level(text):
    if text in ("inf", "infinity", "∞"):
        return math.inf
    k = int(text)
    if k < 0:
        raise argparse.ArgumentTypeError("level must be non-negative")
    return k


# ---------------------------------------------------------------------------
# commands: each returns the result payload

def cmd_analyze(F, args):
    res = {"n": n_vars(F), "c": len(F), "l": n_literals(F),
           "classes": sorted(classify(F))}
    two_cnf = all(len(c) <= 2 for c in F)
    rep = None
    if two_cnf and not args.figure:
        res["method"] = "2cnf"
        res["hd"] = hardness_2cnf(F)
        res["hd_witness"] = None
    else:
        rep = hardness(F)
        res["method"] = "prime-implicates"
        res["hd"] = rep.value
        res["hd_witness"] = _clause_json(rep.witness)
        res["levels"] = [{"clause": _clause_json(c), "level": v}
                         for c, v in rep.per_implicate_levels.items()]
    bound = _env_int("UCSLUR_PHD_MAX_VARS", PHD_MAX_VARS)
    if args.phd:
        p = p_hardness(F, max_vars=bound)
        res["phd"] = {"value": p.value, "witness": _clause_json(p.witness)}
    if args.whd:
        w = w_hardness(F, exhaustive=args.exhaustive, max_vars=bound)
        res["whd"] = {"value": w.value, "witness": _clause_json(w.witness)}
    if args.oracle:
        budget = OracleBudget(max_vars=_env_int("UCSLUR_ORACLE_MAX_VARS", 6))
        value = hardness_bruteforce(F, budget)
        res["oracle"] = {"hd": value, "agrees": value == res["hd"]}
    if args.figure:
        from .plotting import implicate_levels_figure
        implicate_levels_figure(rep.per_implicate_levels, args.figure,
                                title="hd = %d" % rep.value)
        res["figure"] = args.figure
    return res


def cmd_reduce(F, args):
    sizes = []
    memo = {}
    for j in range(args.k + 1):
        G = rk(j, F, memo=memo)
        sizes.append((len(G), n_literals(G)))
    res = {"k": args.k, "clauses": to_json(G), "unsat": G == UNSAT,
           "profile": [{"k": j, "c": c, "l": l} for j, (c, l) in enumerate(sizes)]}
    if args.figure:
        from .plotting import reduction_profile_figure
        reduction_profile_figure(sizes, args.figure)
        res["figure"] = args.figure
    return res, G


def cmd_implies(F, args):
    c = _parse_clause(args.clause)
    res = {"clause": _clause_json(c), "k": args.k, "implies": implies_k(F, c, args.k)}
    if args.witness:
        budget = _env_int("UCSLUR_TREE_BUDGET", 10**6)
        T = find_nested_derivation(F, c, args.k, budget=budget)
        res["witness"] = None if T is None else tree_to_json(T)
        res["hts"] = None if T is None else horton_strahler(T)
        res["tree_search_agrees"] = (T is not None) == res["implies"]
    return res


def cmd_primes(F, args):
    P = prime_implicates(F)
    return {"count": len(P), "primes": to_json(P)}


def cmd_slur(F, args):
    cfg = TransitionConfig(args.k, args.variant)
    bound = _env_int("UCSLUR_SLUR_MAX_VARS", SLUR_MAX_VARS)
    states, edges, terminals = slur_reachability(F, cfg, max_vars=bound)
    member = member_from_terminals(F, cfg, terminals)
    return {"k": args.k, "variant": args.variant, "member": member,
            "terminals": sorted((to_json(G) for G in terminals), key=lambda x: (len(x), x)),
            "states": [to_json(G) for G in states],
            "edges": [list(e) for e in edges]}


def cmd_base(F, args):
    k = args.k
    if all(len(c) <= 2 for c in F):
        r = min_base_2cnf(F, k)
        method = "2cnf"
    else:
        P = prime_implicates(F)
        r = min_base_from_primes(P, k, budget=_env_int("UCSLUR_BASE_BUDGET", 100000))
        method = "prime-implicate-subsets"
        if not r.exact:
            raise GuardRefusal("base search budget exhausted")
    return {"k": "inf" if k == math.inf else k, "method": method,
            "base": to_json(r.base), "cardinality": r.cardinality, "size": r.size,
            "exact": r.exact, "is_k_base": is_k_base(r.base, k), "trace": r.trace}


def _family_spec(args):
    params = {}
    for name in ("n", "m", "k", "c", "seed", "times"):
        v = getattr(args, name)
        if v is not None:
            params[name] = v
    if args.base is not None:
        params["base"] = args.base
    return FamilySpec(args.family, params)


# ---------------------------------------------------------------------------

def _report(command, argv_echo, data, result, elapsed, deterministic):
    rep = {"schema": SCHEMA_VERSION,
           "command": {"name": command, "args": argv_echo},
           "input": None if data is None else {
               "sha256": hashlib.sha256(data).hexdigest(), "bytes": len(data)},
           "result": result,
           "versions": {"ucslur": __version__, "python": platform.python_version()}}
    if not deterministic:
        rep["timing"] = {"seconds": round(elapsed, 6)}
    return rep


def _echo(args):
    skip = {"func", "input", "output", "deterministic", "command"}
    out = {}
    for key, v in sorted(vars(args).items()):
        if key in skip or v is None or v is False:
            continue
        out[key] = "inf" if v == math.inf else v
    return out


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def build_parser():
    p = argparse.ArgumentParser(prog="ucslur", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--deterministic", action="store_true",
                        help="omit timings so reports are byte-identical")
    common.add_argument("-o", "--output", default=None, help="write output here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(name, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("input", nargs="?", default="-", help="DIMACS file, '-' for stdin")
        return sp

    sp = with_input("analyze", "hardness measures and class tags")
    sp.add_argument("--phd", action="store_true", help="also compute phd (guarded)")
    sp.add_argument("--whd", action="store_true", help="also compute whd")
    sp.add_argument("--exhaustive", action="store_true",
                    help="whd over all partial assignments (guarded)")
    sp.add_argument("--oracle", action="store_true", help="cross-check hd by brute force")
    sp.add_argument("--figure", default=None, help="save a per-implicate level chart")
    sp.set_defaults(func=cmd_analyze)

    sp = with_input("reduce", "apply r_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dimacs", action="store_true", help="print r_k(F) as DIMACS")
    sp.add_argument("--figure", default=None, help="save the size profile over levels")
    sp.set_defaults(func=cmd_reduce)

    sp = with_input("implies", "decide F |=_k C")
    sp.add_argument("--clause", required=True, help="signed integers, e.g. '1 -2'")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--witness", action="store_true", help="search for a resolution tree")
    sp.set_defaults(func=cmd_implies)

    sp = with_input("primes", "prime implicates")
    sp.set_defaults(func=cmd_primes)

    sp = with_input("slur", "simulate the SLUR_k transition system")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--variant", choices=(SLUR, ALTSLUR_STAR), default=SLUR)
    sp.set_defaults(func=cmd_slur)

    sp = with_input("base", "minimum equivalent k-base")
    sp.add_argument("--k", type=_parse_level, default=math.inf, help="level, or 'inf'")
    sp.set_defaults(func=cmd_base)

    sp = sub.add_parser("gen", parents=[common], help="generate a family instance")
    sp.add_argument("--family", required=True, choices=FAMILIES)
    for name in ("n", "m", "k", "c", "seed", "times"):
        sp.add_argument("--" + name, type=int, default=None)
    sp.add_argument("--base", default=None, help="inner family for pump")
    sp.add_argument("--json", action="store_true", help="JSON report instead of DIMACS")
    sp.set_defaults(func=None)
    return p


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "gen":
            spec = _family_spec(args)
            F = generate(spec)
            if not args.json:
                _write(emit_dimacs(F, comments=[spec.describe()]), args.output)
                return EXIT_OK
            data, result = None, {"family": spec.describe(), "clauses": to_json(F),
                                  "n": n_vars(F), "c": len(F), "l": n_literals(F)}
        else:
            data, F = _read_input(args.input)
            result = args.func(F, args)
            if args.command == "reduce":
                result, G = result
                if args.dimacs:
                    _write(emit_dimacs(G, comments=["r_%d of input" % args.k]), args.output)
                    return EXIT_OK
    except (SizeGuardError, OracleBudgetExceeded, BudgetExhausted, GuardRefusal) as e:
        print("ucslur: refused: %s" % e, file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, ValueError, OSError, KeyError) as e:
        print("ucslur: error: %s" % e, file=sys.stderr)
        return EXIT_ERROR
    rep = _report(args.command, _echo(args), data, result,
                  time.perf_counter() - start, args.deterministic)
    _write(json.dumps(rep, indent=2, sort_keys=True, ensure_ascii=False) + "\n", args.output)
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

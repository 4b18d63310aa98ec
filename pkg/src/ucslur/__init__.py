"""Generalised unit-clause propagation r_k, hardness measures, SLUR_k and k-bases."""

__version__ = "0.1.0"

from .core import (BOT, TOP, UNSAT, ClashError, ParseError, apply_assignment,
                   assignment, clause, clause_set, emit_dimacs, parse_dimacs)
from .reductions import ALL, USAT, U0, forced_literals, implies_k, rk, rk_inf, rk_oracle
from .resolution import (derives_nested, find_nested_derivation, horton_strahler,
                         prime_implicates, verify_tree)
from .hardness import (SizeGuardError, canon_member, hardness, hardness_2cnf,
                       hardness_oracle, p_hardness, uc_member, w_hardness)
from .slur import ALTSLUR_STAR, SLUR, TransitionConfig, altslurstar_member, slur_member
from .bases import is_k_base, min_base_2cnf, min_base_from_primes
from .families import FamilySpec, classify, generate

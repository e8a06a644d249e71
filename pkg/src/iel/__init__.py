"""Decision procedure and proof-object toolkit for intuitionistic epistemic logic."""

from .calculus import (Annotation, Calculus, Proof, ProofTree, Rule, RuleInstance, Verdict,
                       backward_instances, check_proof, cut_count, depth, is_monotone,
                       validate_instance)
from .formula import (BOTTOM, K_BOTTOM, And, Bottom, Formula, Implies, Know, Not, Or, Var,
                      length, subformula_closure)
from .oracle import saturate_oracle
from .prover import Inconclusive, Proved, Unprovable, depth_bound, prove, prove_formula
from .sequent import Sequent, k_prefix_set, size, to_set
from .syntax import ParseError, parse, parse_sequent, render, render_sequent

__all__ = [
    "And", "Annotation", "BOTTOM", "Bottom", "Calculus", "Formula", "Implies", "Inconclusive",
    "K_BOTTOM", "Know", "Not", "Or", "ParseError", "Proof", "ProofTree", "Proved", "Rule",
    "RuleInstance", "Sequent", "Unprovable", "Var", "Verdict", "backward_instances",
    "check_proof", "cut_count", "depth", "depth_bound", "is_monotone", "k_prefix_set", "length",
    "parse", "parse_sequent", "prove", "prove_formula", "render", "render_sequent",
    "saturate_oracle", "size", "subformula_closure", "to_set", "validate_instance",
]

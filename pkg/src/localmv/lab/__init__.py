"""Terms, geometric sequents, a parser and a brute-force model checker."""

from .evaluate import SequentResult, check_sequent, eval_term, holds, solutions
from .parser import parse_formula, parse_sequent, parse_sequent_file, parse_term
from .terms import Sequent, formula_str, sequent_str, term_str

__all__ = [
    "SequentResult",
    "Sequent",
    "check_sequent",
    "eval_term",
    "formula_str",
    "holds",
    "parse_formula",
    "parse_sequent",
    "parse_sequent_file",
    "parse_term",
    "sequent_str",
    "solutions",
    "term_str",
]

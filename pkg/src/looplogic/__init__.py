"""Bounded-quantifier list logic with search, iteration and recursion terms.

Values are hereditarily finite lists over urelements. Formulas quantify only
over the elements or initial segments of ground list terms. The package
evaluates and model-checks such formulas, rewrites loops into plain terms,
decides satisfiability by grounding, and generates the succinct-list,
regular-expression and domino-tiling instance families.
"""

from .errors import (
    LoopLogicError, ParseError, PreconditionError, ResourceError, SortError,
    StructureError, UnboundVariable,
)
from .evaluator import Counters, Evaluator, check, check_with_stats, eval_term
from .metrics import Classification, Diagnostic, classify, rank, size, validate
from .parser import format_formula, format_term, parse_formula, parse_term, parse_value
from .sat import dpll, ground_to_prop, sat_check
from .structures import Signature, Structure, dump_structure, load_structure
from .unfold import UnfoldReport, unfold_formula, unfold_term
from .values import NIL, Ur, format_value

__version__ = "0.1.0"

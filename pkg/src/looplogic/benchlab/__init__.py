"""Instance generators for the two hardness reductions, with brute-force oracles."""

from .domino import (
    DominoSystem, domino_model, domino_theory, is_tiling, load_domino,
    oracle_tiling, seg, tiling_from_model,
)
from .regex import (
    Concat, Power, Sym, Union, alphabet, format_regex, operator_count, oracle_lang, parse_regex,
    regex_ineq_formula, regex_list_term,
)
from .succinct import (
    FLAVORS, epsilon_term, explist_info, explist_term, expn, power_of,
    power_term, times_of, times_term,
)

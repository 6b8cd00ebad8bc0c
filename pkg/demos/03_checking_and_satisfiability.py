"""
Model checking and satisfiability
=================================

``check`` decides a closed formula in a given structure by binding each
quantified variable to one candidate at a time. ``sat_check`` asks whether
*some* structure satisfies it: quantifiers are expanded, interpreted atoms
are evaluated, and the remaining predicate atoms go to a DPLL solver.
"""

from looplogic import check_with_stats, dump_structure, parse_formula, sat_check, check
from looplogic.structures import load_structure

s = load_structure('{"urelements": ["a", "b"], '
                   '"predicates": {"P": {"arity": 1, "tuples": [["\'a"], ["[\'a]"]]}}}')

f = parse_formula("forall $x sub ['a, 'b] . exists $y in $x . P($y) | P($x)")
verdict, counters = check_with_stats(f, s)
print(verdict, counters.as_dict())

# satisfiable: P must hold of 'b but not of 'a
g = parse_formula("exists $x in ['a, 'b] . P($x) & !P('a)")
r = sat_check(g)
print("SAT" if r else "UNSAT", "with", r.grounding.instances, "instances")
print(dump_structure(r.witness))
assert check(g, r.witness)

# terms are evaluated before atoms are compared, so these two atoms coincide
print("SAT" if sat_check(parse_formula("P(conc(['a], ['b])) & !P(['a, 'b])")) else "UNSAT")

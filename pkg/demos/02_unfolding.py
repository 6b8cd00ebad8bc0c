"""
Unfolding loops into plain terms
================================

A flat iteration term, or a flat recursion term with a ground bound, can be
rewritten into an equivalent term without loops. The result may be much
larger: an ``i``-fold iteration substitutes the step into itself ``i`` times.
"""

from looplogic import eval_term, format_term, parse_term, unfold_term
from looplogic.errors import PreconditionError

for text in ["iter<2,u>($v; $y. cons($y, 'a))",
             "rec(nil; $g, $b. cons($g, $b); ['a, 'b])",
             "iter<5,b>([nil]; $y. conc($y, $y))"]:
    r = unfold_term(parse_term(text))
    shown = format_term(r.output)
    print(text)
    print(f"  -> {shown if len(shown) < 70 else shown[:67] + '...'}")
    print(f"     size {r.input_size} -> {r.output_size}")

# both forms agree under any environment
t = parse_term("iter<3,u>($v; $y. conc($y, [head($v)]))")
env = {"v": eval_term(parse_term("['a, 'b]"))}
assert eval_term(t, env) == eval_term(unfold_term(t).output, env)

# a recursion bound with variables cannot be unfolded
try:
    unfold_term(parse_term("rec(nil; $g, $b. cons($g, $b); $v)"))
except PreconditionError as exc:
    print("rejected:", exc)

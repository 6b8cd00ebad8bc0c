"""
Short terms for long lists, and language inequality
===================================================

Nested doubling recursions describe lists whose length is a tower of twos in
a term of linear size. The same product construction turns star-free regular
expressions with exponents into list terms, so that two expressions denote
different languages exactly when a closed formula holds.
"""

from looplogic import check, eval_term, size
from looplogic.benchlab import (
    FLAVORS, explist_term, expn, oracle_lang, parse_regex, regex_ineq_formula,
)
from looplogic.errors import PreconditionError

print("flavor  k  n   size  length")
for flavor in FLAVORS:
    for k in (1, 2):
        for n in range(5):
            try:
                t = explist_term(k, n, flavor)
            except PreconditionError:
                continue
            if expn(k, n, ceiling=2 ** 64) <= 65536:
                print(f"{flavor:7} {k}  {n}  {size(t):4}  {len(eval_term(t))}")

pairs = [("a", "(a|b)"), ("((a|b)^2)", "((a.a)|((a.b)|((b.a)|(b.b))))"),
         ("(a^^2,1)", "((a^2)^2)"), ("((a.b)^3)", "(((a.b)^2).(b.a))")]
for e1, e2 in pairs:
    x, y = parse_regex(e1), parse_regex(e2)
    differ = check(regex_ineq_formula(x, y))
    assert differ == (oracle_lang(x) != oracle_lang(y))
    print(f"{e1} vs {e2}: {'different' if differ else 'equal'} languages")

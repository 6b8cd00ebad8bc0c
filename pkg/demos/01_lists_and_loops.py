"""
Lists, search, iteration and recursion
======================================

Values are urelements (written ``'a``) and finite lists of values. ``head``
is the *last* element of a list, ``tail`` drops it and ``cons`` appends.
"""

from looplogic import eval_term, format_term, parse_term, rank, size
from looplogic.values import format_value

# plain list terms
for text in ["head(['a, 'b])", "tail(['a, 'b])", "cons(['a], ['b])", "conc(['a], ['b, 'c])"]:
    print(f"{text:28} = {format_value(eval_term(parse_term(text)))}")

# bounded search: first element (or shortest initial segment) satisfying a formula,
# the whole bound if there is none
for text in ["bsearch_in($x. $x = 'b, ['a, 'b, 'c])",
             "bsearch_sub($x. 'b in $x, ['a, 'b, 'c])",
             "bsearch_sub($x. 'z in $x, ['a, 'b])"]:
    print(f"{text:42} = {format_value(eval_term(parse_term(text)))}")

# iteration applies the step i times; the numeral's representation only affects size
u = parse_term("iter<4,u>(nil; $y. cons($y, 'a))")
b = parse_term("iter<4,b>(nil; $y. cons($y, 'a))")
print(format_value(eval_term(u)), "sizes:", size(u), size(b))

# recursion folds the step over the initial segments of the bound;
# $b is the newest element, so this reverses a list
rev = parse_term("rec(nil; $g, $b. conc([$b], $g); ['a, 'b, 'c])")
print(format_term(rev), "=", format_value(eval_term(rev)), "rank", rank(rev))

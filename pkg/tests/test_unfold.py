import random

import pytest
from hypothesis import given, settings, strategies as st

from looplogic.errors import PreconditionError, ResourceError
from looplogic.evaluator import check, eval_term
from looplogic.metrics import rank, size
from looplogic.parser import format_formula, format_term, parse_formula, parse_term
from looplogic.unfold import unfold_formula, unfold_term
from looplogic.benchlab import parse_regex, regex_ineq_formula
import randgen


def unfolded(text, **kw):
    return format_term(unfold_term(parse_term(text), **kw).output)


def test_unfold_examples():
    assert unfolded("iter<0,u>($f; $y. cons($y, 'a))") == "$f"
    assert unfolded("iter<2,u>($v; $y. cons($y,'a))") == "cons(cons($v, 'a), 'a)"
    assert unfolded("rec(nil; $g,$b. cons($g,$b); ['a,'b])") == "cons(cons(nil, 'a), 'b)"


def test_unfold_formula_examples():
    plain = parse_formula("forall $x in ['a] . $x = 'a & P($x)")
    assert unfold_formula(plain) is plain
    f = parse_formula("exists $x in iter<1,u>([nil]; $y. conc($y,$y)) . $x = nil")
    assert format_formula(unfold_formula(f)) == "exists $x in conc([nil], [nil]) . $x = nil"


def test_report_fields():
    r = unfold_term(parse_term("iter<3,b>(nil; $y. cons($y, 'a))"))
    assert r.input_rank == 1 and rank(r.output) == 0
    assert r.input_size == size(r.input) and r.output_size == size(r.output)


def test_bound_loops_are_unfolded_first():
    t = parse_term("rec(nil; $g,$b. cons($g, $b); iter<2,u>(nil; $y. cons($y, 'a)))")
    assert format_term(unfold_term(t).output) == "cons(cons(nil, 'a), 'a)"


def test_ground_search_terms_become_constants():
    t = parse_term("cons(nil, bsearch_in($x. $x = 'b, ['a, 'b]))")
    assert format_term(unfold_term(t).output) == "cons(nil, 'b)"


@pytest.mark.parametrize("text, reason", [
    ("rec(nil; $g,$b. $g; $v)", "not explicit"),
    ("iter<2,u>(nil; $y. rec(nil; $g,$b. $g; $y))", "not flat"),
    ("bsearch_in($x. $x = 'a, $v)", "not ground"),
    ("bsearch_in($x. P($x), ['a])", "depends on predicates"),
])
def test_rejections_name_the_reason(text, reason):
    with pytest.raises(PreconditionError, match=reason):
        unfold_term(parse_term(text))


def test_size_budget():
    t = parse_term("iter<40,u>($v; $y. conc($y, $y))")
    with pytest.raises(ResourceError):
        unfold_term(t, max_size=10_000)


def test_nested_loops_with_the_relaxed_mode():
    t = parse_term("iter<2,u>([nil]; $y. rec($y; $g,$b. conc($g, $g); ['a]))")
    with pytest.raises(PreconditionError):
        unfold_term(t)
    out = unfold_term(t, allow_nested=True).output
    assert rank(out) == 0 and eval_term(out) == eval_term(t)


@pytest.mark.parametrize("e1, e2", [("a", "(a|b)"), ("(a|b)", "(b|a)"), ("(a.b)", "(b.a)"),
                                    ("((a|b).a)", "((a.a)|(b.a))")])
def test_power_free_language_formulas_unfold_to_the_same_verdict(e1, e2):
    f = regex_ineq_formula(parse_regex(e1), parse_regex(e2))
    g = unfold_formula(f, allow_nested=True)
    assert rank(g) == 0
    assert check(g) == check(f)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_unfolding_plain_terms_is_identity(seed):
    rng = random.Random(seed)
    t = randgen.list_term(rng, 3, ("v1", "v2"))
    assert unfold_term(t).output is t


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_unfolded_iter_is_equivalent_and_within_the_size_bound(seed):
    rng = random.Random(seed)
    env = randgen.environment(rng)
    t = randgen.flat_iter(rng)
    if not randgen.sort_safe(t, env):
        return
    r = unfold_term(t)
    assert eval_term(r.output, env) == eval_term(t, env)
    assert r.output_size <= size(t.base) * size(t.step) ** t.count
    assert unfold_term(r.output).output is r.output


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_unfolded_rec_is_equivalent(seed):
    rng = random.Random(seed)
    env = randgen.environment(rng)
    t = randgen.flat_rec(rng)
    if not randgen.sort_safe(t, env):
        return
    out = unfold_term(t).output
    assert rank(out) == 0
    assert eval_term(out, env) == eval_term(t, env)

import random

from hypothesis import given, settings

from looplogic.metrics import classify, rank, size, validate
from looplogic.parser import format_node, parse_formula, parse_term
from looplogic.structures import Signature
from looplogic.syntax import BSearch, Conc, Iter, Nil, Rec, Var, walk
from strategies import formulas, terms
import randgen


def test_rank_examples():
    assert rank(parse_term("head($x)")) == 0
    assert rank(parse_term("rec(nil; $g,$b. cons($g,$b); ['a])")) == 1
    assert rank(parse_term("rec(nil; $g,$b. $g; rec(nil; $g,$b. $g; ['a]))")) == 2


def test_rank_counts_searches_inside_formulas():
    f = parse_formula("exists $x in bsearch_in($y. $y = 'a, ['a]) . $x = 'a")
    assert rank(f) == 1


def test_classify_examples():
    c = classify(parse_term("rec(nil; $g,$b. cons($g,$b); ['a,'b])"))
    assert c.is_flat and c.is_explicit
    c = classify(parse_term("rec(nil; $g,$b. rec(nil; $h,$c. $h; $g); ['a])"))
    assert not c.is_flat
    c = classify(parse_term("rec(nil; $g,$b. $g; $v)"))
    assert c.is_flat and not c.is_explicit


def test_loop_in_a_bound_keeps_the_term_flat():
    c = classify(parse_term("rec(nil; $g,$b. $g; iter<2,u>(nil; $y. cons($y, nil)))"))
    assert c.is_flat and c.is_explicit


def test_size_examples():
    assert size(Nil()) == 3
    u = parse_term("iter<4,u>(nil; $y. cons($y, 'a))")
    b = parse_term("iter<4,b>(nil; $y. cons($y, 'a))")
    assert size(u) - size(b) == 1


def test_binary_numeral_digits():
    for count, digits in [(0, 0), (1, 1), (2, 2), (7, 3), (8, 4)]:
        t = Iter(count, "b", Nil(), "y", Var("y"))
        assert size(t) == len(format_node(t)) - len(str(count)) + digits


@settings(max_examples=200)
@given(formulas)
def test_size_is_printed_length_without_iteration(f):
    if not any(isinstance(n, Iter) for n in walk(f)):
        assert size(f) == len(format_node(f))


@given(terms)
def test_rank_zero_iff_no_loops(t):
    has_loop = any(isinstance(n, (BSearch, Iter, Rec)) for n in walk(t))
    assert (rank(t) == 0) == (not has_loop)


@given(terms)
def test_flatness_is_inherited_by_subterms(t):
    if classify(t).is_flat:
        assert all(classify(n).is_flat for n in walk(t))


def test_size_of_shared_subterms_counts_every_occurrence():
    t = parse_term("cons(nil, nil)")
    expected = 14
    for _ in range(40):
        t = Conc(t, t)
        expected = 8 + 2 * expected
    assert size(t) == expected
    assert rank(t) == 0


def test_validate_examples():
    diags = validate(parse_formula("forall $x in $y . P($x)"))
    assert {d.kind for d in diags} == {"unbound", "nonground-bound"}
    sig = Signature({"P": 2})
    assert [d.kind for d in validate(parse_formula("P('a)"), sig)] == ["arity"]
    assert [d.kind for d in validate(parse_formula("Q('a)"), sig)] == ["unknown-predicate"]
    ok = parse_formula("forall $x in ['a, 'b] . exists $y sub ['a, nil] . P($x, $y)")
    assert validate(ok, sig) == []


def test_validate_flags_urelement_in_list_position():
    diags = validate(parse_formula("head('a) = nil"))
    assert [d.kind for d in diags] == ["sort"]


def test_random_flat_terms_are_classified_flat():
    rng = random.Random(5)
    for _ in range(50):
        assert classify(randgen.flat_iter(rng)).is_flat
        c = classify(randgen.flat_rec(rng))
        assert c.is_flat and c.is_explicit

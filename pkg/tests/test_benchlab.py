import json
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from looplogic.benchlab import (
    Concat, DominoSystem, FLAVORS, Power, Sym, Union, domino_model, domino_theory,
    explist_info, explist_term, expn, format_regex, is_tiling, load_domino,
    oracle_lang, oracle_tiling, parse_regex, power_of, power_term, regex_ineq_formula,
    regex_list_term, tiling_from_model, times_term,
)
from looplogic.benchlab.regex import word_to_value
from looplogic.errors import ParseError, PreconditionError, ResourceError
from looplogic.evaluator import check, eval_term
from looplogic.metrics import classify, size
from looplogic.parser import format_term, parse_value
from looplogic.sat import sat_check
from looplogic.syntax import ListLit, Nil, conj, free_vars, value_to_term
from looplogic.values import Ur
import randgen


# -- towers and long lists --

def test_expn_examples():
    assert expn(1, 3) == 8
    assert expn(2, 1) == 4
    assert expn(1, 0) == 1
    assert expn(3, 1) == 16
    assert expn(2, 4) == 65536


def test_expn_ceiling():
    with pytest.raises(ResourceError):
        expn(3, 3)
    assert expn(3, 3, ceiling=2 ** 256) == 2 ** 256


def test_explist_examples():
    assert eval_term(explist_term(1, 2, "iter_u")) == ((),) * 4
    assert eval_term(explist_term(2, 1, "rec")) == ((),) * 4
    assert eval_term(explist_term(1, 0, "rec")) == ((),)


def test_unsupported_flavors():
    with pytest.raises(PreconditionError):
        explist_term(2, 1, "iter_u")
    with pytest.raises(PreconditionError):
        explist_term(3, 1, "iter_b")
    with pytest.raises(PreconditionError):
        explist_term(1, 1, "loop")


@pytest.mark.parametrize("flavor", FLAVORS)
def test_explist_lengths_and_linear_size(flavor):
    for k in (1, 2):
        sizes = []
        for n in range(5):
            try:
                t = explist_term(k, n, flavor)
            except PreconditionError:
                break
            v = eval_term(t)
            assert len(v) == expn(k, n) and set(v) <= {()}
            assert classify(t).is_flat and not free_vars(t)
            sizes.append(size(t))
        steps = {b - a for a, b in zip(sizes, sizes[1:])}
        assert len(steps) <= 1


def test_explist_info_records_the_calibration():
    info = explist_info(1, 3, "rec")
    assert info["expected_length"] == 8 and "n elements" in info["calibration"]
    assert explist_info(3, 4, "rec")["expected_length"] is None


# -- product and power --

def nested_product(s1, s2):
    return tuple(b + c for b in s1 for c in s2)


def test_times_examples():
    s1, s2 = parse_value("[['a]]"), parse_value("[['b], ['c]]")
    assert eval_term(times_term(), {"x1": s1, "x2": s2}) == parse_value("[['a, 'b], ['a, 'c]]")
    assert eval_term(times_term(), {"x1": s2, "x2": ((),)}) == s2


def test_power_term_example():
    assert eval_term(power_term(1, 1), {"x": parse_value("[['a]]")}) == parse_value("[['a, 'a]]")


def test_power_term_length():
    x = parse_value("[['a], ['b]]")
    assert len(eval_term(power_term(1, 2), {"x": x})) == 2 ** expn(1, 2)


word_lists = st.lists(st.lists(st.sampled_from([Ur("a"), Ur("b")]), max_size=3).map(tuple),
                      min_size=1, max_size=5).map(tuple)


@given(word_lists, word_lists)
def test_times_matches_nested_loops(s1, s2):
    assert eval_term(times_term(), {"x1": s1, "x2": s2}) == nested_product(s1, s2)


@given(word_lists, st.integers(1, 4))
def test_power_of_matches_repeated_product(s, m):
    expected = s
    for _ in range(m - 1):
        expected = nested_product(expected, s)
    bound = ListLit((Nil(),) * m)
    assert eval_term(power_of(value_to_term(s), bound)) == expected


# -- regular-like expressions --

def test_regex_syntax_round_trip():
    for text in ["a", "(a|b)", "((a.b)^3)", "((a|b)^^2,1)"]:
        assert format_regex(parse_regex(text)) == text
    with pytest.raises(ParseError):
        parse_regex("(a|b")
    with pytest.raises(ParseError):
        parse_regex("(a^0)")


def test_regex_list_term_examples():
    assert format_term(regex_list_term(Sym("a"))) == "[['a]]"
    assert format_term(regex_list_term(Union(Sym("a"), Sym("b")))) == "conc([['a]], [['b]])"
    assert eval_term(regex_list_term(Concat(Sym("a"), Sym("b")))) == parse_value("[['a, 'b]]")


def test_oracle_lang_examples():
    w = lambda *ws: frozenset(tuple(x) for x in ws)
    assert oracle_lang(Sym("a")) == w("a")
    assert oracle_lang(parse_regex("((a|b)^2)")) == w("aa", "ab", "ba", "bb")
    assert oracle_lang(parse_regex("(a.b)")) == w("ab")
    assert oracle_lang(parse_regex("(a^^2,1)")) == w("aaaa")


def test_oracle_lang_guard():
    with pytest.raises(ResourceError):
        oracle_lang(parse_regex("((a|b)^^1,4)"), max_words=1000)


def test_regex_list_term_size_is_linear():
    e, sizes = Sym("a"), []
    for _ in range(6):
        e = Power(Union(e, Sym("b")), 3)
        sizes.append(size(regex_list_term(e)))
    steps = {b - a for a, b in zip(sizes, sizes[1:])}
    assert len(steps) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_regex_terms_list_exactly_the_language(seed):
    rng = random.Random(seed)
    e = randgen.regex(rng, rng.randint(0, 3))
    words = eval_term(regex_list_term(e))
    assert set(words) == {word_to_value(x) for x in oracle_lang(e)}


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_inequality_formula_matches_the_oracle(seed):
    rng = random.Random(seed)
    e1, e2 = randgen.regex(rng, rng.randint(0, 2)), randgen.regex(rng, rng.randint(0, 2))
    f = regex_ineq_formula(e1, e2)
    assert not free_vars(f)
    assert check(f) == (oracle_lang(e1) != oracle_lang(e2))


# -- domino tiling --

D_EXAMPLE = DominoSystem(2, {(1, 1), (2, 2)}, {(1, 2)}, (1,))


def side(m):
    return ListLit((Nil(),) * m)


def test_domino_theory_counts():
    assert len(domino_theory(D_EXAMPLE, side(2))) == 9
    assert len(domino_theory(DominoSystem(1, {(1, 1)}, {(1, 1)}), side(2))) == 1


def test_domino_init_longer_than_side():
    with pytest.raises(PreconditionError):
        domino_theory(DominoSystem(1, {(1, 1)}, {(1, 1)}, (1, 1, 1)), side(2))


def test_domino_validation_and_loading():
    with pytest.raises(PreconditionError):
        DominoSystem(2, {(1, 3)}, set())
    d = load_domino('{"tiles": 2, "H": [[1,1],[2,2]], "V": [[1,2]], "init": [1]}')
    assert d == D_EXAMPLE
    assert load_domino(json.dumps(d.to_dict())) == d


def test_oracle_tiling_examples():
    assert oracle_tiling(DominoSystem(1, {(1, 1)}, {(1, 1)}), 2) == ((1, 1), (1, 1))
    assert oracle_tiling(DominoSystem(1, {(1, 1)}, set()), 2) is None
    two = DominoSystem(2, {(1, 1), (2, 2)}, {(1, 1), (2, 2)}, (2,))
    assert oracle_tiling(two, 2) == ((2, 2), (2, 2))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_oracle_tiling_is_exhaustive(seed):
    rng = random.Random(seed)
    d, m = randgen.domino(rng, 2), rng.randint(1, 3)
    found = oracle_tiling(d, m)
    exists = any(is_tiling(d, tuple(tuple(cells[r * m:(r + 1) * m]) for r in range(m)))
                 for cells in product(range(1, d.tiles + 1), repeat=m * m))
    assert (found is not None) == exists
    if found is not None:
        assert is_tiling(d, found)


def test_tiling_model_satisfies_every_axiom():
    d, m = D_EXAMPLE, 2
    t = oracle_tiling(d, m)
    e = eval_term(side(m))
    model = domino_model(d, t, e)
    assert all(check(ax, model) for ax in domino_theory(d, side(m)))
    assert tiling_from_model(d, model, e) == t


def test_non_tiling_model_violates_an_axiom():
    d, m = D_EXAMPLE, 2
    e = eval_term(side(m))
    bad = domino_model(d, ((1, 2), (2, 2)), e)
    assert not all(check(ax, bad) for ax in domino_theory(d, side(m)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_theory_is_satisfiable_iff_a_tiling_exists(seed):
    rng = random.Random(seed)
    d = randgen.domino(rng)
    m = max(rng.choice((2, 3)), len(d.init))
    theory = conj(domino_theory(d, side(m)))
    r = sat_check(theory)
    assert r.satisfiable == (oracle_tiling(d, m) is not None)
    if r.satisfiable:
        assert check(theory, r.witness)
        assert is_tiling(d, tiling_from_model(d, r.witness, eval_term(side(m))))

import pytest
from hypothesis import given, strategies as st

from looplogic.errors import SortError
from looplogic.values import (
    NIL, Ur, conc, cons, format_value, head, initseg, length, mem, segments, tail,
)
from strategies import lists, values

a, b, c, d = Ur("a"), Ur("b"), Ur("c"), Ur("d")


def test_head_examples():
    assert head((a, b)) == b
    assert head(NIL) == NIL
    assert head(((a,), b, (c, d))) == (c, d)


def test_tail_examples():
    assert tail((a, b)) == (a,)
    assert tail(NIL) == NIL
    assert tail((a,)) == NIL


def test_cons_examples():
    assert cons((a,), b) == (a, b)
    assert cons(NIL, NIL) == (NIL,)
    assert cons((a, b), (c,)) == (a, b, (c,))


def test_conc_examples():
    assert conc(NIL, (a,)) == (a,)
    assert conc((a,), (b, c)) == (a, b, c)
    assert conc((a, b), (c,)) == (a, b, c)


def test_mem_examples():
    assert mem(a, (a, b))
    assert not mem(a, NIL) and not mem(NIL, NIL)
    assert mem((a,), ((a,), b))


def test_initseg_examples():
    assert initseg((a,), (a, b))
    assert initseg((a, b), (a, b))
    assert not initseg(NIL, (a,))
    assert not initseg((b,), (a, b))
    assert not initseg(a, (a, b))


def test_length_examples():
    assert length((a, (b, c))) == 2
    assert length(NIL) == 0


def test_segments_shortest_first():
    assert list(segments((a, b, c))) == [(a,), (a, b), (a, b, c)]
    assert list(segments(NIL)) == []


@pytest.mark.parametrize("op", [head, tail, length, lambda l: cons(l, a), lambda l: conc(l, NIL)])
def test_list_operations_reject_urelements(op):
    with pytest.raises(SortError):
        op(a)


def test_format_value():
    assert format_value(NIL) == "nil"
    assert format_value(a) == "'a"
    assert format_value((a, (b, NIL))) == "['a, ['b, nil]]"


@given(lists, values)
def test_cons_then_head_and_tail(l, x):
    assert tail(cons(l, x)) == l
    assert head(cons(l, x)) == x


@given(lists, lists)
def test_conc_length(x, y):
    assert length(conc(x, y)) == length(x) + length(y)


@given(lists, values)
def test_nothing_is_a_member_of_nil(l, x):
    assert not mem(x, NIL)
    assert all(mem(v, l) for v in l)


@given(lists)
def test_segments_are_exactly_the_initial_segments(l):
    segs = list(segments(l))
    assert len(segs) == len(l)
    assert all(initseg(s, l) for s in segs)
    assert [len(s) for s in segs] == list(range(1, len(l) + 1))


@given(lists, lists)
def test_initseg_matches_prefix_definition(x, l):
    expected = 0 < len(x) <= len(l) and l[:len(x)] == x
    assert initseg(x, l) == expected


@given(st.lists(values, min_size=1, max_size=5).map(tuple))
def test_every_tail_chain_prefix_is_a_segment(l):
    cur = l
    while cur:
        assert initseg(cur, l)
        cur = tail(cur)

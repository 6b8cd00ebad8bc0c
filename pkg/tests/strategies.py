"""Hypothesis strategies for values and syntax trees."""

from hypothesis import strategies as st

from looplogic.parser import KEYWORDS
from looplogic.syntax import (
    And, BSearch, Conc, Cons, Eq, Head, Iter, ListLit, Mem, Nil, Not, Or, Pred,
    Quant, Rec, Seg, Tail, UrConst, Var,
)
from looplogic.values import Ur

ur_names = st.sampled_from(["a", "b", "c", "d0", "x_1"])
idents = st.from_regex(r"[a-z][a-z0-9_]{0,3}", fullmatch=True).filter(lambda s: s not in KEYWORDS)
var_names = st.sampled_from(["x", "y", "g", "b", "v1", "v2"])
pred_names = st.sampled_from(["P", "Q", "T1", "edge"])

urelements = ur_names.map(Ur)
values = st.recursive(
    urelements | st.just(()),
    lambda inner: st.lists(inner, max_size=4).map(tuple),
    max_leaves=12,
)
lists = st.lists(values, max_size=5).map(tuple)


def _term_extend(terms, formulas):
    return st.one_of(
        st.lists(terms, max_size=3).map(lambda xs: ListLit(tuple(xs))),
        terms.map(Head),
        terms.map(Tail),
        st.builds(Cons, terms, terms),
        st.builds(Conc, terms, terms),
        st.builds(BSearch, st.sampled_from(["in", "sub"]), var_names, formulas, terms),
        st.builds(Iter, st.integers(0, 12), st.sampled_from(["u", "b"]), terms, var_names, terms),
        st.tuples(terms, var_names, var_names, terms, terms)
          .filter(lambda t: t[1] != t[2])
          .map(lambda t: Rec(t[0], t[1], t[2], t[3], t[4])),
    )


term_leaves = st.one_of(st.just(Nil()), ur_names.map(UrConst), var_names.map(Var))


@st.composite
def _atoms(draw, terms):
    kind = draw(st.sampled_from(["eq", "in", "sub", "pred"]))
    if kind == "pred":
        return Pred(draw(pred_names), tuple(draw(st.lists(terms, min_size=1, max_size=3))))
    cls = {"eq": Eq, "in": Mem, "sub": Seg}[kind]
    return cls(draw(terms), draw(terms))


def syntax_trees(max_leaves: int = 20):
    """Pairs of strategies (terms, formulas) over the full syntax, including loops."""
    plain_terms = st.recursive(
        term_leaves,
        lambda inner: st.one_of(
            st.lists(inner, max_size=3).map(lambda xs: ListLit(tuple(xs))),
            inner.map(Head), inner.map(Tail),
            st.builds(Cons, inner, inner), st.builds(Conc, inner, inner)),
        max_leaves=6,
    )
    plain_formulas = st.recursive(
        _atoms(plain_terms),
        lambda inner: st.one_of(
            inner.map(Not), st.builds(And, inner, inner), st.builds(Or, inner, inner),
            st.builds(Quant, st.sampled_from(["forall", "exists"]), var_names,
                      st.sampled_from(["in", "sub"]), plain_terms, inner)),
        max_leaves=6,
    )
    terms = st.recursive(term_leaves, lambda inner: _term_extend(inner, plain_formulas),
                         max_leaves=max_leaves)
    formulas = st.recursive(
        _atoms(terms),
        lambda inner: st.one_of(
            inner.map(Not), st.builds(And, inner, inner), st.builds(Or, inner, inner),
            st.builds(Quant, st.sampled_from(["forall", "exists"]), var_names,
                      st.sampled_from(["in", "sub"]), terms, inner)),
        max_leaves=max_leaves,
    )
    return terms, formulas


terms, formulas = syntax_trees()

"""Rewriting iteration and recursion terms into equivalent plain terms.

``iter<i>(f; $y. h)`` becomes ``h[y := h[y := ... h[y := f]]]`` with ``i``
nested substitutions. ``rec(f; $g, $b. h; t)`` with a ground bound ``t`` is
rewritten by evaluating ``t`` to a constant list ``l`` and folding over its
segment chain: the accumulator term starts as ``f`` and at step ``k`` becomes
``h[g := acc, b := l[k]]`` with the element written as a constant.

By default the input must be flat (plain base and step terms) and every
recursion bound ground; offending subterms are rejected by name. Bounds may
themselves contain loops, which are unfolded first. With
``allow_nested=True`` loops inside step terms are accepted as long as they
become unfoldable once the enclosing loop has been unrolled.

Search terms are not rewritten syntactically. A ground, predicate-free search
term is replaced by its constant value; any other is rejected.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import PreconditionError, ResourceError
from .evaluator import Evaluator
from .metrics import rank, size
from .parser import format_node
from .syntax import (
    And, BSearch, Conc, Cons, Eq, Head, Iter, ListLit, Mem, Nil, Not, Or, Pred,
    Quant, Rec, Seg, Tail, UrConst, Var, free_vars, substitute, value_to_term, walk,
)

DEFAULT_MAX_SIZE = int(os.environ.get("LOOPLOGIC_MAX_UNFOLD_SIZE", 10_000_000))


@dataclass(frozen=True)
class UnfoldReport:
    input: object
    output: object
    input_size: int
    output_size: int
    input_rank: int


def _show(node, limit: int = 160) -> str:
    text = format_node(node)
    return text if len(text) <= limit else text[:limit] + "..."


class Unfolder:
    def __init__(self, *, allow_nested: bool = False, max_size: int | None = None,
                 max_steps: int | None = None):
        self.allow_nested = allow_nested
        self.max_size = DEFAULT_MAX_SIZE if max_size is None else max_size
        self._eval = Evaluator(max_steps=max_steps)
        self._memo: dict = {}

    def _guard(self, t):
        s = size(t)
        if s > self.max_size:
            raise ResourceError(f"unfolded term exceeds the size budget of {self.max_size}")

    def _constant(self, t, what: str):
        if free_vars(t):
            raise PreconditionError(f"{what} is not ground: {_show(t)}")
        if any(isinstance(n, Pred) for n in walk(t)):
            raise PreconditionError(f"{what} depends on predicates: {_show(t)}")
        return self._eval.term(t, {})

    def _require_flat(self, loop, parts):
        if self.allow_nested:
            return
        for p in parts:
            if rank(p):
                raise PreconditionError(f"not flat: {_show(loop)} has a looping term in its base or step")

    def term(self, t):
        key = id(t)
        hit = self._memo.get(key)
        if hit is not None:
            return hit[1]
        out = self._term(t)
        self._memo[key] = (t, out)
        return out

    def _term(self, t):
        match t:
            case Nil() | UrConst() | Var():
                return t
            case ListLit(items):
                new = tuple(self.term(i) for i in items)
                return t if all(a is b for a, b in zip(new, items)) else ListLit(new)
            case Head(a) | Tail(a):
                na = self.term(a)
                return t if na is a else type(t)(na)
            case Cons(a, b) | Conc(a, b):
                na, nb = self.term(a), self.term(b)
                return t if (na is a and nb is b) else type(t)(na, nb)
            case BSearch():
                return value_to_term(self._constant(t, "search term"))
            case Iter(count, _, base, var, step):
                self._require_flat(t, (base, step))
                acc = self.term(base)
                for _ in range(count):
                    acc = self._instantiate(step, {var: acc})
                return acc
            case Rec(base, acc_name, elem_name, step, bound):
                self._require_flat(t, (base, step))
                nbound = self.term(bound)
                if free_vars(nbound):
                    raise PreconditionError(f"not explicit: recursion bound of {_show(t)} has variables")
                l = self._constant(nbound, "recursion bound")
                if not isinstance(l, tuple):
                    raise PreconditionError(f"recursion bound of {_show(t)} is not a list")
                acc = self.term(base)
                for elem in l:
                    acc = self._instantiate(step, {acc_name: acc, elem_name: value_to_term(elem)})
                return acc
        raise TypeError(f"not a term: {t!r}")

    def _instantiate(self, step, mapping):
        out = substitute(step, mapping)
        if self.allow_nested and rank(out):
            out = self.term(out)
        self._guard(out)
        return out

    def formula(self, f):
        match f:
            case Eq(a, b) | Mem(a, b) | Seg(a, b):
                na, nb = self.term(a), self.term(b)
                return f if (na is a and nb is b) else type(f)(na, nb)
            case Pred(name, args):
                new = tuple(self.term(a) for a in args)
                return f if all(x is y for x, y in zip(new, args)) else Pred(name, new)
            case Not(a):
                na = self.formula(a)
                return f if na is a else Not(na)
            case And(a, b) | Or(a, b):
                na, nb = self.formula(a), self.formula(b)
                return f if (na is a and nb is b) else type(f)(na, nb)
            case Quant(kind, var, mode, bound, body):
                nbound, nbody = self.term(bound), self.formula(body)
                if nbound is bound and nbody is body:
                    return f
                return Quant(kind, var, mode, nbound, nbody)
        raise TypeError(f"not a formula: {f!r}")


def unfold_term(t, **kw) -> UnfoldReport:
    out = Unfolder(**kw).term(t)
    return UnfoldReport(t, out, size(t), size(out), rank(t))


def unfold_formula(f, **kw):
    return Unfolder(**kw).formula(f)

"""Abstract syntax for terms and formulas.

All nodes are frozen dataclasses. Binders name their bound variables
explicitly: ``BSearch`` binds ``var`` in ``body``, ``Iter`` binds ``var`` in
``step`` and ``Rec`` binds ``acc`` and ``elem`` in ``step``. The bound of a
search or recursion, and the base of a loop, lie outside the binder.

Unfolded terms share subterms heavily, so traversals that could revisit a
node many times memoize on ``id``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Literal, Union

from .values import Ur, Value

Mode = Literal["in", "sub"]


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Nil:
    pass


@dataclass(frozen=True, slots=True)
class UrConst:
    name: str


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class ListLit:
    items: tuple = ()


@dataclass(frozen=True, slots=True)
class Head:
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Tail:
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Cons:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, slots=True)
class Conc:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, slots=True)
class BSearch:
    mode: Mode
    var: str
    body: "Formula"
    bound: "Term"


@dataclass(frozen=True, slots=True)
class Iter:
    count: int
    repr: Literal["u", "b"]
    base: "Term"
    var: str
    step: "Term"

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("iteration count must be non-negative")
        if self.repr not in ("u", "b"):
            raise ValueError(f"numeral representation must be 'u' or 'b', got {self.repr!r}")


@dataclass(frozen=True, slots=True)
class Rec:
    base: "Term"
    acc: str
    elem: str
    step: "Term"
    bound: "Term"


Term = Union[Nil, UrConst, Var, ListLit, Head, Tail, Cons, Conc, BSearch, Iter, Rec]
STANDARD_TERMS = (Nil, UrConst, Var, ListLit, Head, Tail, Cons, Conc)
LOOPING_TERMS = (BSearch, Iter, Rec)


# -- formulas ----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Mem:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Seg:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Pred:
    name: str
    args: tuple


@dataclass(frozen=True, slots=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Quant:
    kind: Literal["forall", "exists"]
    var: str
    mode: Mode
    bound: Term
    body: "Formula"


Formula = Union[Eq, Mem, Seg, Pred, Not, And, Or, Quant]
Node = Union[Term, Formula]
ATOMS = (Eq, Mem, Seg, Pred)


def implies(a: Formula, b: Formula) -> Formula:
    return Or(Not(a), b)


def conj(formulas) -> Formula:
    """Left-nested conjunction of a non-empty sequence."""
    it = iter(formulas)
    out = next(it)
    for f in it:
        out = And(out, f)
    return out


def disj(formulas) -> Formula:
    it = iter(formulas)
    out = next(it)
    for f in it:
        out = Or(out, f)
    return out


# -- traversal ---------------------------------------------------------------

def children(node: Node) -> tuple:
    match node:
        case Nil() | UrConst() | Var():
            return ()
        case ListLit(items):
            return items
        case Head(a) | Tail(a) | Not(a):
            return (a,)
        case Cons(l, r) | Conc(l, r) | Eq(l, r) | Mem(l, r) | Seg(l, r) | And(l, r) | Or(l, r):
            return (l, r)
        case Pred(_, args):
            return args
        case BSearch(_, _, body, bound):
            return (body, bound)
        case Iter(_, _, base, _, step):
            return (base, step)
        case Rec(base, _, _, step, bound):
            return (base, step, bound)
        case Quant(_, _, _, bound, body):
            return (bound, body)
    raise TypeError(f"not a syntax node: {node!r}")


def walk(node: Node) -> Iterator[Node]:
    """Pre-order traversal visiting each distinct node object once."""
    seen = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if id(n) in seen:
            continue
        seen.add(id(n))
        yield n
        stack.extend(reversed(children(n)))


def bound_names(node: Node) -> tuple:
    match node:
        case BSearch(_, v, _, _) | Iter(_, _, _, v, _) | Quant(_, v, _, _, _):
            return (v,)
        case Rec(_, acc, elem, _, _):
            return (acc, elem)
    return ()


def free_vars(node: Node, _memo: dict | None = None) -> frozenset:
    memo = {} if _memo is None else _memo
    key = id(node)
    if key in memo:
        return memo[key][1]
    match node:
        case Var(name):
            out = frozenset((name,))
        case BSearch(_, v, body, bound):
            out = (free_vars(body, memo) - {v}) | free_vars(bound, memo)
        case Iter(_, _, base, v, step):
            out = free_vars(base, memo) | (free_vars(step, memo) - {v})
        case Rec(base, acc, elem, step, bound):
            out = (free_vars(base, memo) | free_vars(bound, memo)
                   | (free_vars(step, memo) - {acc, elem}))
        case Quant(_, v, _, bound, body):
            out = free_vars(bound, memo) | (free_vars(body, memo) - {v})
        case _:
            out = frozenset()
            for c in children(node):
                out |= free_vars(c, memo)
    # keep node alive so its id is not reused while the memo lives
    memo[key] = (node, out)
    return out


def is_ground(node: Node) -> bool:
    return not free_vars(node)


def all_var_names(node: Node) -> set:
    names = set()
    for n in walk(node):
        if isinstance(n, Var):
            names.add(n.name)
        names.update(bound_names(n))
    return names


def fresh_name(base: str, avoid) -> str:
    if base not in avoid:
        return base
    for i in itertools.count(1):
        cand = f"{base}{i}"
        if cand not in avoid:
            return cand


# -- substitution ------------------------------------------------------------

def substitute(node: Node, mapping: dict) -> Node:
    """Capture-avoiding simultaneous substitution of terms for free variables.

    Binders whose names clash with a free variable of an inserted term are
    renamed to a fresh name.
    """
    if not mapping:
        return node
    fv_repl = frozenset().union(*(free_vars(t) for t in mapping.values()))
    return _subst(node, dict(mapping), fv_repl, {})


def _rebind(names, body_parts, mapping, fv_repl):
    """Drop shadowed keys and rename binders that would capture."""
    inner = {k: v for k, v in mapping.items() if k not in names}
    if not inner:
        return list(names), inner, False
    body_fv = frozenset().union(*(free_vars(b) for b in body_parts))
    if not any(k in body_fv for k in inner):
        return list(names), {}, False
    new_names = []
    avoid = set(fv_repl) | set(body_fv) | set(inner)
    for b in body_parts:
        avoid |= all_var_names(b)
    for n in names:
        if n in fv_repl:
            fresh = fresh_name(n, avoid)
            avoid.add(fresh)
            inner[n] = Var(fresh)
            new_names.append(fresh)
        else:
            new_names.append(n)
    return new_names, inner, True


def _subst(node, mapping, fv_repl, memo):
    if not mapping:
        return node
    key = id(node)
    if key in memo:
        return memo[key][1]
    match node:
        case Var(name):
            out = mapping.get(name, node)
        case Nil() | UrConst():
            out = node
        case ListLit(items):
            out = ListLit(tuple(_subst(i, mapping, fv_repl, memo) for i in items))
        case Head(a):
            out = Head(_subst(a, mapping, fv_repl, memo))
        case Tail(a):
            out = Tail(_subst(a, mapping, fv_repl, memo))
        case Cons(l, r):
            out = Cons(_subst(l, mapping, fv_repl, memo), _subst(r, mapping, fv_repl, memo))
        case Conc(l, r):
            out = Conc(_subst(l, mapping, fv_repl, memo), _subst(r, mapping, fv_repl, memo))
        case Eq(l, r):
            out = Eq(_subst(l, mapping, fv_repl, memo), _subst(r, mapping, fv_repl, memo))
        case Mem(l, r):
            out = Mem(_subst(l, mapping, fv_repl, memo), _subst(r, mapping, fv_repl, memo))
        case Seg(l, r):
            out = Seg(_subst(l, mapping, fv_repl, memo), _subst(r, mapping, fv_repl, memo))
        case Pred(name, args):
            out = Pred(name, tuple(_subst(a, mapping, fv_repl, memo) for a in args))
        case Not(a):
            out = Not(_subst(a, mapping, fv_repl, memo))
        case And(l, r):
            out = And(_subst(l, mapping, fv_repl, memo), _subst(r, mapping, fv_repl, memo))
        case Or(l, r):
            out = Or(_subst(l, mapping, fv_repl, memo), _subst(r, mapping, fv_repl, memo))
        case BSearch(mode, v, body, bound):
            (nv,), inner, _ = _rebind((v,), (body,), mapping, fv_repl)
            out = BSearch(mode, nv, _subst(body, inner, fv_repl, {}),
                          _subst(bound, mapping, fv_repl, memo))
        case Iter(count, rep, base, v, step):
            (nv,), inner, _ = _rebind((v,), (step,), mapping, fv_repl)
            out = Iter(count, rep, _subst(base, mapping, fv_repl, memo), nv,
                       _subst(step, inner, fv_repl, {}))
        case Rec(base, acc, elem, step, bound):
            (na, ne), inner, _ = _rebind((acc, elem), (step,), mapping, fv_repl)
            out = Rec(_subst(base, mapping, fv_repl, memo), na, ne,
                      _subst(step, inner, fv_repl, {}), _subst(bound, mapping, fv_repl, memo))
        case Quant(kind, v, mode, bound, body):
            (nv,), inner, _ = _rebind((v,), (body,), mapping, fv_repl)
            out = Quant(kind, nv, mode, _subst(bound, mapping, fv_repl, memo),
                        _subst(body, inner, fv_repl, {}))
        case _:
            raise TypeError(f"not a syntax node: {node!r}")
    memo[key] = (node, out)
    return out


# -- values as terms ---------------------------------------------------------

def value_to_term(v: Value) -> Term:
    if isinstance(v, Ur):
        return UrConst(v.name)
    if not v:
        return Nil()
    return ListLit(tuple(value_to_term(x) for x in v))


def term_to_value(t: Term) -> Value:
    """Convert a constant term (``nil``, urelements, list literals) to a value."""
    match t:
        case Nil():
            return ()
        case UrConst(name):
            return Ur(name)
        case ListLit(items):
            return tuple(term_to_value(i) for i in items)
    raise ValueError(f"not a constant term: {t!r}")

"""Syntactic measures: rank, size, flat/explicit classification, validation."""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import (
    And, BSearch, Conc, Cons, Eq, Head, Iter, ListLit, Mem, Nil, Not, Or, Pred,
    Quant, Rec, Seg, Tail, UrConst, Var, children, free_vars, walk,
)


def rank(node) -> int:
    """Nesting depth of search/iteration/recursion terms; 0 for plain terms."""
    memo: dict = {}

    def go(n):
        key = id(n)
        if key in memo:
            return memo[key]
        inner = max((go(c) for c in children(n)), default=0)
        r = inner + 1 if isinstance(n, (BSearch, Iter, Rec)) else inner
        memo[key] = r
        return r

    return go(node)


def numeral_size(count: int, rep: str) -> int:
    return count if rep == "u" else count.bit_length()


def size(node) -> int:
    """Length of the canonical printed form.

    An iteration count contributes ``i`` symbols in unary and
    ``ceil(log2(i + 1))`` in binary instead of its decimal spelling.
    Computed structurally so shared subterms are not re-printed.
    """
    memo: dict = {}

    def go(n):
        key = id(n)
        if key in memo:
            return memo[key][1]
        match n:
            case Nil():
                s = 3
            case UrConst(name) | Var(name):
                s = 1 + len(name)
            case ListLit(items):
                s = 2 + sum(go(i) for i in items) + 2 * max(len(items) - 1, 0)
            case Head(a) | Tail(a):
                s = 6 + go(a)
            case Cons(a, b) | Conc(a, b):
                s = 8 + go(a) + go(b)
            case BSearch(mode, var, body, bound):
                s = len(f"bsearch_{mode}(${var}. ") + go(body) + 2 + go(bound) + 1
            case Iter(count, rep, base, var, step):
                s = (len("iter<,") + numeral_size(count, rep) + len(rep) + 2
                     + go(base) + len(f"; ${var}. ") + go(step) + 1)
            case Rec(base, acc, elem, step, bound):
                s = (4 + go(base) + len(f"; ${acc}, ${elem}. ") + go(step)
                     + 2 + go(bound) + 1)
            case Eq(a, b):
                s = go(a) + 3 + go(b)
            case Mem(a, b):
                s = go(a) + 4 + go(b)
            case Seg(a, b):
                s = go(a) + 5 + go(b)
            case Pred(name, args):
                s = len(name) + 2 + sum(go(a) for a in args) + 2 * (len(args) - 1)
            case Not(a):
                s = 1 + go(a) + (2 if isinstance(a, (And, Or, Quant)) else 0)
            case And(a, b):
                s = (go(a) + (2 if isinstance(a, (Or, Quant)) else 0) + 3
                     + go(b) + (2 if isinstance(b, (And, Or, Quant)) else 0))
            case Or(a, b):
                s = (go(a) + (2 if isinstance(a, Quant) else 0) + 3
                     + go(b) + (2 if isinstance(b, (Or, Quant)) else 0))
            case Quant(kind, var, mode, bound, body):
                s = len(f"{kind} ${var} {mode} ") + go(bound) + 3 + go(body)
            case _:
                raise TypeError(f"not a syntax node: {n!r}")
        memo[key] = (n, s)
        return s

    return go(node)


@dataclass(frozen=True)
class Classification:
    is_flat: bool
    is_explicit: bool


def classify(node) -> Classification:
    """Flat: every Iter/Rec has plain base and step. Explicit: every Rec bound is ground."""
    flat = explicit = True
    for n in walk(node):
        if isinstance(n, (Iter, Rec)) and (rank(n.base) or rank(n.step)):
            flat = False
        if isinstance(n, Rec) and free_vars(n.bound):
            explicit = False
    return Classification(flat, explicit)


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str

    def __str__(self):
        return f"{self.kind}: {self.message}"


def _list_positions(n):
    match n:
        case Head(a) | Tail(a):
            return (a,)
        case Cons(a, _):
            return (a,)
        case Conc(a, b):
            return (a, b)
        case Mem(_, b) | Seg(_, b):
            return (b,)
        case BSearch(_, _, _, bound) | Rec(_, _, _, _, bound) | Quant(_, _, _, bound, _):
            return (bound,)
    return ()


def validate(formula, sig=None) -> list[Diagnostic]:
    """Static checks; returns a (possibly empty) list of diagnostics.

    ``sig`` is a :class:`~looplogic.structures.Signature`; predicate checks
    are skipped when it is ``None``.
    """
    from .parser import format_node

    diags: list[Diagnostic] = []
    for v in sorted(free_vars(formula)):
        diags.append(Diagnostic("unbound", f"variable ${v} is not bound by any quantifier or binder"))
    for n in walk(formula):
        if isinstance(n, Quant) and free_vars(n.bound):
            names = ", ".join("$" + v for v in sorted(free_vars(n.bound)))
            diags.append(Diagnostic(
                "nonground-bound",
                f"bound of quantifier over ${n.var} mentions {names}: {format_node(n.bound)}"))
        if isinstance(n, Pred) and sig is not None:
            arity = sig.predicates.get(n.name)
            if arity is None:
                diags.append(Diagnostic("unknown-predicate", f"{n.name} is not in the signature"))
            elif arity != len(n.args):
                diags.append(Diagnostic(
                    "arity", f"{n.name} has arity {arity} but is applied to {len(n.args)} arguments"))
        for pos in _list_positions(n):
            if isinstance(pos, UrConst):
                diags.append(Diagnostic(
                    "sort", f"urelement '{pos.name} used where a list is required in {format_node(n)}"))
    return diags

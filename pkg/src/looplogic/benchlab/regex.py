"""Star-free regular expressions with exponentiation, as list terms.

A language is encoded as a list of words, each word a list of urelements:
a symbol ``a`` becomes ``[['a]]``, union becomes ``conc``, concatenation
becomes the list product and a power ``E^m`` the ``m``-fold product. Two
expressions denote different languages iff the formula

    exists $x in list(E1) . !$x in list(E2) | exists $x in list(E2) . !$x in list(E1)

holds, in any structure.

Text syntax: ``a`` (symbol), ``(E|E)``, ``(E.E)``, ``(E^m)``, ``(E^^k,n)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
import typing

from ..errors import ParseError, ResourceError
from ..syntax import Conc, ListLit, Mem, Nil, Not, Or, Quant, UrConst, Var
from ..values import Ur
from .succinct import epsilon_term, expn, power_of, times_of


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Union:
    left: "RegExpr"
    right: "RegExpr"


@dataclass(frozen=True)
class Concat:
    left: "RegExpr"
    right: "RegExpr"


@dataclass(frozen=True)
class Power:
    arg: "RegExpr"
    exponent: typing.Union[int, tuple]   # literal m, or (k, n) for expn(k, n)

    def __post_init__(self):
        e = self.exponent
        if isinstance(e, tuple):
            k, n = e
            if k < 1 or n < 0:
                raise ValueError("tower exponent needs k >= 1 and n >= 0")
        elif e < 1:
            raise ValueError("power exponent must be at least 1")


RegExpr = typing.Union[Sym, "Union", Concat, Power]


def format_regex(e) -> str:
    match e:
        case Sym(a):
            return a
        case Union(l, r):
            return f"({format_regex(l)}|{format_regex(r)})"
        case Concat(l, r):
            return f"({format_regex(l)}.{format_regex(r)})"
        case Power(a, (k, n)):
            return f"({format_regex(a)}^^{k},{n})"
        case Power(a, m):
            return f"({format_regex(a)}^{m})"
    raise TypeError(f"not a regular expression: {e!r}")


_RX_TOKEN = re.compile(r"\s*(?:(\^\^)|([A-Za-z_][A-Za-z0-9_]*)|([0-9]+)|([()|.^,]))")


def parse_regex(text: str):
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _RX_TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} in expression", 1, pos + 1)
        toks.append((m.group(m.lastindex), pos + 1))
        pos = m.end()
    toks.append(("", len(text) + 1))
    i = 0

    def expect(s):
        nonlocal i
        tok, col = toks[i]
        if tok != s:
            raise ParseError(f"expected {s!r}, found {tok or 'end of input'!r}", 1, col)
        i += 1

    def number():
        nonlocal i
        tok, col = toks[i]
        if not tok.isdigit():
            raise ParseError(f"expected a number, found {tok or 'end of input'!r}", 1, col)
        i += 1
        return int(tok)

    def expr():
        nonlocal i
        tok, col = toks[i]
        if tok and (tok[0].isalpha() or tok[0] == "_"):
            i += 1
            return Sym(tok)
        expect("(")
        left = expr()
        op, col = toks[i]
        i += 1
        if op == "|":
            out = Union(left, expr())
        elif op == ".":
            out = Concat(left, expr())
        elif op == "^":
            m = number()
            if m < 1:
                raise ParseError("power exponent must be at least 1", 1, col)
            out = Power(left, m)
        elif op == "^^":
            k = number()
            expect(",")
            out = Power(left, (k, number()))
        else:
            raise ParseError(f"expected an operator, found {op or 'end of input'!r}", 1, col)
        expect(")")
        return out

    e = expr()
    if toks[i][0]:
        raise ParseError(f"unexpected trailing input {toks[i][0]!r}", 1, toks[i][1])
    return e


def regex_size(e) -> int:
    return len(format_regex(e))


def operator_count(e) -> int:
    match e:
        case Sym():
            return 0
        case Union(l, r) | Concat(l, r):
            return 1 + operator_count(l) + operator_count(r)
        case Power(a, _):
            return 1 + operator_count(a)
    raise TypeError(e)


def alphabet(e) -> set:
    match e:
        case Sym(a):
            return {a}
        case Union(l, r) | Concat(l, r):
            return alphabet(l) | alphabet(r)
        case Power(a, _):
            return alphabet(a)
    raise TypeError(e)


# -- reduction -----------------------------------------------------------------

def _power_bound(exponent):
    if isinstance(exponent, tuple):
        return epsilon_term(*exponent)
    return ListLit((Nil(),) * exponent)


def regex_list_term(e):
    """Ground term whose value lists the words of ``L(e)`` (possibly with repeats)."""
    match e:
        case Sym(a):
            return ListLit((ListLit((UrConst(a),)),))
        case Union(l, r):
            return Conc(regex_list_term(l), regex_list_term(r))
        case Concat(l, r):
            return times_of(regex_list_term(l), regex_list_term(r))
        case Power(a, exponent):
            return power_of(regex_list_term(a), _power_bound(exponent))
    raise TypeError(f"not a regular expression: {e!r}")


def regex_ineq_formula(e1, e2):
    """Closed formula that holds iff ``L(e1) != L(e2)``."""
    l1, l2 = regex_list_term(e1), regex_list_term(e2)
    x = Var("x")
    return Or(Quant("exists", "x", "in", l1, Not(Mem(x, l2))),
              Quant("exists", "x", "in", l2, Not(Mem(x, l1))))


# -- oracle --------------------------------------------------------------------

def oracle_lang(e, max_words: int = 100_000, max_length: int = 256) -> frozenset:
    """The exact language of ``e`` as a set of words (tuples of symbols)."""

    def guard(words):
        if len(words) > max_words:
            raise ResourceError(f"language exceeds {max_words} words")
        if any(len(w) > max_length for w in words):
            raise ResourceError(f"language has words longer than {max_length}")
        return words

    def concat(a, b):
        if len(a) * len(b) > max_words * 4:
            raise ResourceError(f"language exceeds {max_words} words")
        return guard(frozenset(u + v for u, v in product(a, b)))

    def lang(x):
        match x:
            case Sym(a):
                return frozenset({(a,)})
            case Union(l, r):
                return guard(lang(l) | lang(r))
            case Concat(l, r):
                return concat(lang(l), lang(r))
            case Power(a, exponent):
                m = expn(*exponent) if isinstance(exponent, tuple) else exponent
                base = lang(a)
                shortest = min(len(w) for w in base)
                if shortest * m > max_length:
                    raise ResourceError(f"language has words longer than {max_length}")
                out = base
                for _ in range(m - 1):
                    out = concat(out, base)
                return out
        raise TypeError(f"not a regular expression: {x!r}")

    return lang(e)


def word_to_value(word) -> tuple:
    return tuple(Ur(a) for a in word)

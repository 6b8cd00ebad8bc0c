"""Surface syntax: tokenizer, recursive-descent parser and canonical printer.

Grammar (``$x`` variables, ``'a`` urelement constants)::

    formula := formula '->' formula | formula '|' formula | formula '&' formula
             | '!' formula | '(' formula ')' | quant | atom
    quant   := ('forall' | 'exists') VAR ('in' | 'sub') term '.' formula
    atom    := term ('=' | 'in' | 'sub') term | IDENT '(' term {',' term} ')'
    term    := 'nil' | URCONST | VAR | '[' [term {',' term}] ']'
             | ('head' | 'tail') '(' term ')' | ('cons' | 'conc') '(' term ',' term ')'
             | 'bsearch_in' '(' VAR '.' formula ',' term ')'
             | 'bsearch_sub' '(' VAR '.' formula ',' term ')'
             | 'iter' '<' NAT ',' ('u' | 'b') '>' '(' term ';' VAR '.' term ')'
             | 'rec' '(' term ';' VAR ',' VAR '.' term ';' term ')'

Precedence is ``!`` > ``&`` > ``|`` > ``->``; binary connectives associate to
the left except ``->`` which associates to the right. A quantifier body
extends as far right as possible. ``a -> b`` is read as ``!a | b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .syntax import (
    And, BSearch, Conc, Cons, Eq, Head, Iter, ListLit, Mem, Nil, Not, Or,
    Pred, Quant, Rec, Seg, Tail, UrConst, Var, term_to_value,
)
from .values import Value

__all__ = [
    "parse_term", "parse_formula", "parse_value",
    "format_term", "format_formula", "format_node",
]

KEYWORDS = {
    "nil", "head", "tail", "cons", "conc", "bsearch_in", "bsearch_sub",
    "iter", "rec", "forall", "exists", "in", "sub",
}

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<arrow>->)
  | (?P<var>\$[A-Za-z_][A-Za-z0-9_]*)
  | (?P<ur>'[A-Za-z0-9_]+)
  | (?P<nat>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()\[\],.;<>=!&|])
""", re.VERBOSE)


@dataclass(slots=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        tok = m.group()
        if kind == "ws":
            nl = tok.count("\n")
            if nl:
                line += nl
                line_start = pos + tok.rfind("\n") + 1
        else:
            if kind == "ident" and tok in KEYWORDS:
                kind = "kw"
            elif kind in ("punct", "arrow"):
                kind = tok
            tokens.append(Token(kind, tok, line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    # -- token helpers --

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        found = tok.text or "end of input"
        raise ParseError(f"{msg}, found {found!r}", tok.line, tok.col)

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def at_kw(self, *words) -> bool:
        return self.tok.kind == "kw" and self.tok.text in words

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        if self.at(kind, text):
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> Token:
        t = self.accept(kind, text)
        if t is None:
            self.error(f"expected {what or text or kind}")
        return t

    def expect_var(self) -> str:
        return self.expect("var", what="a $variable").text[1:]

    def finish(self):
        if not self.at("eof"):
            self.error("unexpected trailing input")

    # -- formulas --

    def formula(self):
        left = self.disjunction()
        if self.accept("->"):
            right = self.formula()
            return Or(Not(left), right)
        return left

    def disjunction(self):
        f = self.conjunction()
        while self.accept("|"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self):
        f = self.unary()
        while self.accept("&"):
            f = And(f, self.unary())
        return f

    def unary(self):
        if self.accept("!"):
            return Not(self.unary())
        if self.at_kw("forall", "exists"):
            return self.quantifier()
        if self.accept("("):
            f = self.formula()
            self.expect(")")
            return f
        return self.atom()

    def quantifier(self):
        kind = self.tok.text
        self.i += 1
        var = self.expect_var()
        if not self.at_kw("in", "sub"):
            self.error("expected 'in' or 'sub'")
        mode = self.tok.text
        self.i += 1
        bound = self.term()
        self.expect(".")
        return Quant(kind, var, mode, bound, self.formula())

    def atom(self):
        if self.at("ident"):
            name = self.tok.text
            self.i += 1
            self.expect("(")
            args = [self.term()]
            while self.accept(","):
                args.append(self.term())
            self.expect(")")
            return Pred(name, tuple(args))
        left = self.term()
        if self.accept("="):
            return Eq(left, self.term())
        if self.accept("kw", "in"):
            return Mem(left, self.term())
        if self.accept("kw", "sub"):
            return Seg(left, self.term())
        self.error("expected '=', 'in' or 'sub' after term")

    # -- terms --

    def term(self):
        t = self.tok
        if t.kind == "var":
            self.i += 1
            return Var(t.text[1:])
        if t.kind == "ur":
            self.i += 1
            return UrConst(t.text[1:])
        if self.accept("["):
            items = []
            if not self.at("]"):
                items.append(self.term())
                while self.accept(","):
                    items.append(self.term())
            self.expect("]")
            return ListLit(tuple(items))
        if t.kind != "kw":
            self.error("expected a term")
        word = t.text
        self.i += 1
        if word == "nil":
            return Nil()
        if word in ("head", "tail"):
            self.expect("(")
            arg = self.term()
            self.expect(")")
            return Head(arg) if word == "head" else Tail(arg)
        if word in ("cons", "conc"):
            self.expect("(")
            a = self.term()
            self.expect(",")
            b = self.term()
            self.expect(")")
            return Cons(a, b) if word == "cons" else Conc(a, b)
        if word in ("bsearch_in", "bsearch_sub"):
            self.expect("(")
            var = self.expect_var()
            self.expect(".")
            body = self.formula()
            self.expect(",")
            bound = self.term()
            self.expect(")")
            return BSearch("in" if word == "bsearch_in" else "sub", var, body, bound)
        if word == "iter":
            self.expect("<")
            count = int(self.expect("nat", what="an iteration count").text)
            self.expect(",")
            rep = self.tok
            if rep.kind != "ident" or rep.text not in ("u", "b"):
                self.error("expected numeral representation 'u' or 'b'")
            self.i += 1
            self.expect(">")
            self.expect("(")
            base = self.term()
            self.expect(";")
            var = self.expect_var()
            self.expect(".")
            step = self.term()
            self.expect(")")
            return Iter(count, rep.text, base, var, step)
        if word == "rec":
            self.expect("(")
            base = self.term()
            self.expect(";")
            acc = self.expect_var()
            self.expect(",")
            elem = self.expect_var()
            if acc == elem:
                self.error("recursion binders must be distinct", self.toks[self.i - 1])
            self.expect(".")
            step = self.term()
            self.expect(";")
            bound = self.term()
            self.expect(")")
            return Rec(base, acc, elem, step, bound)
        self.error("expected a term", t)


def parse_term(text: str):
    p = Parser(text)
    t = p.term()
    p.finish()
    return t


def parse_formula(text: str):
    p = Parser(text)
    f = p.formula()
    p.finish()
    return f


def parse_value(text: str) -> Value:
    """Parse a value literal such as ``[nil, 'a, ['b]]``."""
    t = parse_term(text)
    try:
        return term_to_value(t)
    except ValueError:
        raise ParseError(f"not a value literal: {text!r}") from None


# -- printing ----------------------------------------------------------------

def format_term(t) -> str:
    parts: list[str] = []
    _emit_term(t, parts)
    return "".join(parts)


def format_formula(f) -> str:
    parts: list[str] = []
    _emit_formula(f, parts)
    return "".join(parts)


def format_node(n) -> str:
    if isinstance(n, (Eq, Mem, Seg, Pred, Not, And, Or, Quant)):
        return format_formula(n)
    return format_term(n)


def _emit_term(t, out: list):
    match t:
        case Nil():
            out.append("nil")
        case UrConst(name):
            out.append("'" + name)
        case Var(name):
            out.append("$" + name)
        case ListLit(items):
            out.append("[")
            for k, item in enumerate(items):
                if k:
                    out.append(", ")
                _emit_term(item, out)
            out.append("]")
        case Head(a) | Tail(a):
            out.append("head(" if isinstance(t, Head) else "tail(")
            _emit_term(a, out)
            out.append(")")
        case Cons(a, b) | Conc(a, b):
            out.append("cons(" if isinstance(t, Cons) else "conc(")
            _emit_term(a, out)
            out.append(", ")
            _emit_term(b, out)
            out.append(")")
        case BSearch(mode, var, body, bound):
            out.append(f"bsearch_{mode}(${var}. ")
            _emit_formula(body, out)
            out.append(", ")
            _emit_term(bound, out)
            out.append(")")
        case Iter(count, rep, base, var, step):
            out.append(f"iter<{count},{rep}>(")
            _emit_term(base, out)
            out.append(f"; ${var}. ")
            _emit_term(step, out)
            out.append(")")
        case Rec(base, acc, elem, step, bound):
            out.append("rec(")
            _emit_term(base, out)
            out.append(f"; ${acc}, ${elem}. ")
            _emit_term(step, out)
            out.append("; ")
            _emit_term(bound, out)
            out.append(")")
        case _:
            raise TypeError(f"not a term: {t!r}")


def _emit_wrapped(f, out, wrap: bool):
    if wrap:
        out.append("(")
        _emit_formula(f, out)
        out.append(")")
    else:
        _emit_formula(f, out)


def _emit_formula(f, out: list):
    match f:
        case Eq(a, b) | Mem(a, b) | Seg(a, b):
            _emit_term(a, out)
            out.append({Eq: " = ", Mem: " in ", Seg: " sub "}[type(f)])
            _emit_term(b, out)
        case Pred(name, args):
            out.append(name + "(")
            for k, a in enumerate(args):
                if k:
                    out.append(", ")
                _emit_term(a, out)
            out.append(")")
        case Not(a):
            out.append("!")
            _emit_wrapped(a, out, isinstance(a, (And, Or, Quant)))
        case And(a, b):
            _emit_wrapped(a, out, isinstance(a, (Or, Quant)))
            out.append(" & ")
            _emit_wrapped(b, out, isinstance(b, (And, Or, Quant)))
        case Or(a, b):
            _emit_wrapped(a, out, isinstance(a, Quant))
            out.append(" | ")
            _emit_wrapped(b, out, isinstance(b, (Or, Quant)))
        case Quant(kind, var, mode, bound, body):
            out.append(f"{kind} ${var} {mode} ")
            _emit_term(bound, out)
            out.append(" . ")
            _emit_formula(body, out)
        case _:
            raise TypeError(f"not a formula: {f!r}")

"""Hereditarily finite list values.

A value is either an urelement (:class:`Ur`) or a finite list of values.
Lists are plain Python tuples, so equality and hashing are structural for
free and ``()`` is ``nil``.

The list functions follow the "last element" convention: ``head`` is the
last element and ``tail`` drops it, while ``cons`` appends on the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import SortError

__all__ = [
    "Ur", "Value", "NIL", "is_list", "head", "tail", "cons", "conc",
    "mem", "initseg", "segments", "length", "format_value", "urelements_of",
]


@dataclass(frozen=True, slots=True)
class Ur:
    """An urelement. Distinct names denote distinct elements."""

    name: str

    def __repr__(self) -> str:
        return f"'{self.name}"


Value = Union[Ur, tuple]

NIL: tuple = ()


def is_list(v: Value) -> bool:
    return isinstance(v, tuple)


def _need_list(v, op: str) -> tuple:
    if not isinstance(v, tuple):
        raise SortError(f"{op} expects a list, got urelement {format_value(v)}")
    return v


def head(l: Value) -> Value:
    l = _need_list(l, "head")
    return l[-1] if l else NIL


def tail(l: Value) -> tuple:
    l = _need_list(l, "tail")
    return l[:-1]


def cons(l: Value, x: Value) -> tuple:
    return _need_list(l, "cons") + (x,)


def conc(l1: Value, l2: Value) -> tuple:
    return _need_list(l1, "conc") + _need_list(l2, "conc")


def mem(x: Value, l: Value) -> bool:
    return x in _need_list(l, "mem")


def initseg(x: Value, l: Value) -> bool:
    """True iff ``x`` is a non-empty initial segment of ``l`` (reflexive)."""
    l = _need_list(l, "initseg")
    if not isinstance(x, tuple) or not x:
        return False
    return len(x) <= len(l) and l[:len(x)] == x


def segments(l: Value):
    """Yield the non-empty initial segments of ``l``, shortest first."""
    l = _need_list(l, "segments")
    for k in range(1, len(l) + 1):
        yield l[:k]


def length(l: Value) -> int:
    return len(_need_list(l, "len"))


def format_value(v: Value) -> str:
    """Canonical text form: ``nil``, ``'a``, ``[v1, v2]``."""
    if isinstance(v, Ur):
        return f"'{v.name}"
    if not v:
        return "nil"
    return "[" + ", ".join(format_value(x) for x in v) + "]"


def urelements_of(v: Value, acc: set | None = None) -> set:
    acc = set() if acc is None else acc
    stack = [v]
    while stack:
        x = stack.pop()
        if isinstance(x, Ur):
            acc.add(x.name)
        else:
            stack.extend(x)
    return acc

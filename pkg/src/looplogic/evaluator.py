"""Term evaluation and model checking by bounded quantifier elimination.

Quantifiers are eliminated one candidate at a time: the ground bound is
evaluated to a list, each element (or non-empty initial segment) is bound in
turn and the body is checked under that binding. Nothing is expanded up
front.

Recursion and iteration are evaluated as explicit loops, so the Python call
stack does not grow with the length of the lists involved. Every list
operation and loop step is charged against a step budget.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, asdict

from . import values as hv
from .errors import ResourceError, SortError, UnboundVariable
from .structures import EMPTY, Structure
from .syntax import (
    And, BSearch, Conc, Cons, Eq, Head, Iter, ListLit, Mem, Nil, Not, Or, Pred,
    Quant, Rec, Seg, Tail, UrConst, Var, free_vars, walk,
)
from .values import Ur, Value

DEFAULT_MAX_STEPS = int(os.environ.get("LOOPLOGIC_MAX_STEPS", 10_000_000))
# longest list conc may build; keeps doubling loops from exhausting memory
DEFAULT_MAX_LENGTH = int(os.environ.get("LOOPLOGIC_MAX_LIST_LENGTH", 1 << 22))

# lists at least this long get a hashed membership index
_MEMBER_INDEX_MIN = 32


@dataclass
class Counters:
    steps: int = 0           # list operations and loop iterations charged to the budget
    loop_steps: int = 0      # applications of an Iter/Rec step term
    bindings: int = 0        # candidate values bound by quantifiers
    substitutions: int = 0   # quantifier-free instances produced by elimination
    atoms: int = 0           # atomic formulas evaluated

    def as_dict(self) -> dict:
        return asdict(self)


def _candidates(mode: str, l: Value):
    if not isinstance(l, tuple):
        raise SortError(f"bound must be a list, got urelement {hv.format_value(l)}")
    if mode == "in":
        return l
    return hv.segments(l)


class Evaluator:
    """Evaluates terms and formulas against one structure.

    Values of ground subterms are computed once per evaluator and reused.
    """

    def __init__(self, structure: Structure | None = None, *, max_steps: int | None = None,
                 max_length: int | None = None, short_circuit: bool = False):
        self.structure = EMPTY if structure is None else structure
        self.max_steps = DEFAULT_MAX_STEPS if max_steps is None else max_steps
        self.max_length = DEFAULT_MAX_LENGTH if max_length is None else max_length
        self.short_circuit = short_circuit
        self.stats = Counters()
        self._fv: dict = {}
        self._ground: dict = {}
        self._qfree: dict = {}
        self._index: dict = {}

    def _tick(self, n: int = 1):
        self.stats.steps += n
        if self.stats.steps > self.max_steps:
            raise ResourceError(f"evaluation exceeded the step budget of {self.max_steps}")

    def _is_ground(self, t) -> bool:
        return not free_vars(t, self._fv)

    def _quantifier_free(self, f) -> bool:
        key = id(f)
        hit = self._qfree.get(key)
        if hit is None:
            hit = (f, not any(isinstance(n, Quant) for n in walk(f)))
            self._qfree[key] = hit
        return hit[1]

    # -- terms --

    def term(self, t, env: dict) -> Value:
        match t:
            case Var(name):
                try:
                    return env[name]
                except KeyError:
                    raise UnboundVariable(f"variable ${name} has no value") from None
            case Nil():
                return ()
            case UrConst(name):
                return Ur(name)
        key = id(t)
        hit = self._ground.get(key)
        if hit is not None:
            return hit[1]
        v = self._term(t, env)
        if self._is_ground(t):
            self._ground[key] = (t, v)
        return v

    def _term(self, t, env: dict) -> Value:
        match t:
            case ListLit(items):
                return tuple(self.term(i, env) for i in items)
            case Head(a):
                self._tick()
                return hv.head(self.term(a, env))
            case Tail(a):
                self._tick()
                return hv.tail(self.term(a, env))
            case Cons(a, b):
                self._tick()
                return hv.cons(self.term(a, env), self.term(b, env))
            case Conc(a, b):
                self._tick()
                left, right = self.term(a, env), self.term(b, env)
                if (isinstance(left, tuple) and isinstance(right, tuple)
                        and len(left) + len(right) > self.max_length):
                    raise ResourceError(
                        f"list of {len(left) + len(right)} elements exceeds the length "
                        f"ceiling of {self.max_length}")
                return hv.conc(left, right)
            case Iter(count, _, base, var, step):
                acc = self.term(base, env)
                inner = dict(env)
                for _ in range(count):
                    self._tick()
                    self.stats.loop_steps += 1
                    inner[var] = acc
                    acc = self.term(step, inner)
                return acc
            case Rec(base, acc_name, elem_name, step, bound):
                l = self.term(bound, env)
                if not isinstance(l, tuple):
                    raise SortError(f"recursion bound must be a list, got {hv.format_value(l)}")
                acc = self.term(base, env)
                inner = dict(env)
                # fold over the chain nil, l[:1], ..., l; the newest element is l[k]
                for elem in l:
                    self._tick()
                    self.stats.loop_steps += 1
                    inner[acc_name] = acc
                    inner[elem_name] = elem
                    acc = self.term(step, inner)
                return acc
            case BSearch(mode, var, body, bound):
                l = self.term(bound, env)
                inner = dict(env)
                for cand in _candidates(mode, l):
                    self._tick()
                    inner[var] = cand
                    if self.holds(body, inner):
                        return cand
                return l
        raise TypeError(f"not a term: {t!r}")

    # -- formulas --

    def _member(self, x: Value, l: Value) -> bool:
        if not isinstance(l, tuple):
            raise SortError(f"right side of 'in' must be a list, got {hv.format_value(l)}")
        if len(l) < _MEMBER_INDEX_MIN:
            return x in l
        key = id(l)
        hit = self._index.get(key)
        if hit is None or hit[0] is not l:
            hit = (l, frozenset(l))
            self._index[key] = hit
        return x in hit[1]

    def holds(self, f, env: dict) -> bool:
        match f:
            case Eq(a, b):
                self.stats.atoms += 1
                return self.term(a, env) == self.term(b, env)
            case Mem(a, b):
                self.stats.atoms += 1
                self._tick()
                return self._member(self.term(a, env), self.term(b, env))
            case Seg(a, b):
                self.stats.atoms += 1
                self._tick()
                return hv.initseg(self.term(a, env), self.term(b, env))
            case Pred(name, args):
                self.stats.atoms += 1
                return self.structure.atom_holds(name, tuple(self.term(a, env) for a in args))
            case Not(a):
                return not self.holds(a, env)
            case And(a, b):
                if self.short_circuit:
                    return self.holds(a, env) and self.holds(b, env)
                left, right = self.holds(a, env), self.holds(b, env)
                return left and right
            case Or(a, b):
                if self.short_circuit:
                    return self.holds(a, env) or self.holds(b, env)
                left, right = self.holds(a, env), self.holds(b, env)
                return left or right
            case Quant(kind, var, mode, bound, body):
                return self._quantifier(kind, var, mode, bound, body, env)
        raise TypeError(f"not a formula: {f!r}")

    def _quantifier(self, kind, var, mode, bound, body, env) -> bool:
        l = self.term(bound, env)
        leaf = self._quantifier_free(body)
        inner = dict(env)
        want = kind == "exists"
        result = not want
        for cand in _candidates(mode, l):
            self._tick()
            self.stats.bindings += 1
            if leaf:
                self.stats.substitutions += 1
            inner[var] = cand
            if self.holds(body, inner) == want:
                result = want
                if self.short_circuit:
                    break
        return result


def eval_term(t, env: dict | None = None, structure: Structure | None = None, **kw) -> Value:
    return Evaluator(structure, **kw).term(t, dict(env or {}))


def check(f, structure: Structure | None = None, env: dict | None = None, **kw) -> bool:
    return Evaluator(structure, **kw).holds(f, dict(env or {}))


def check_with_stats(f, structure: Structure | None = None, env: dict | None = None,
                     **kw) -> tuple[bool, Counters]:
    ev = Evaluator(structure, **kw)
    verdict = ev.holds(f, dict(env or {}))
    return verdict, ev.stats

"""Satisfiability by grounding and propositional abstraction.

A closed formula is grounded by expanding every bounded quantifier over its
candidate values and evaluating every list term to a constant. Atoms built
from ``=``, ``in`` and ``sub`` then have a fixed truth value; each distinct
ground predicate atom ``P(v1, ..., vk)`` becomes one propositional variable.
The result is satisfiable iff the original formula is, and a model of the
propositional formula yields a closed-world witness structure.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .errors import PreconditionError, ResourceError
from .evaluator import Evaluator, _candidates
from .metrics import classify, validate
from .parser import format_node
from .structures import Structure
from .syntax import (
    And, BSearch, Eq, Mem, Not, Or, Pred, Quant, Seg, UrConst, walk,
)
from .values import format_value, urelements_of

DEFAULT_MAX_INSTANCES = int(os.environ.get("LOOPLOGIC_MAX_INSTANCES", 1_000_000))


# -- propositional formulas --------------------------------------------------

@dataclass(frozen=True, slots=True)
class PConst:
    value: bool


@dataclass(frozen=True, slots=True)
class PVar:
    id: int


@dataclass(frozen=True, slots=True)
class PNot:
    arg: "PropFormula"


@dataclass(frozen=True, slots=True)
class PAnd:
    args: tuple


@dataclass(frozen=True, slots=True)
class POr:
    args: tuple


PropFormula = Union[PConst, PVar, PNot, PAnd, POr]
TRUE, FALSE = PConst(True), PConst(False)


def p_not(a):
    if isinstance(a, PConst):
        return FALSE if a.value else TRUE
    if isinstance(a, PNot):
        return a.arg
    return PNot(a)


def p_and(args):
    out = []
    for a in args:
        if a == FALSE:
            return FALSE
        if a == TRUE:
            continue
        out.extend(a.args if isinstance(a, PAnd) else (a,))
    if not out:
        return TRUE
    return out[0] if len(out) == 1 else PAnd(tuple(out))


def p_or(args):
    out = []
    for a in args:
        if a == TRUE:
            return TRUE
        if a == FALSE:
            continue
        out.extend(a.args if isinstance(a, POr) else (a,))
    if not out:
        return FALSE
    return out[0] if len(out) == 1 else POr(tuple(out))


def prop_vars(p) -> set[int]:
    out, stack = set(), [p]
    while stack:
        n = stack.pop()
        match n:
            case PVar(i):
                out.add(i)
            case PNot(a):
                stack.append(a)
            case PAnd(args) | POr(args):
                stack.extend(args)
    return out


def eval_prop(p, assignment: dict) -> bool:
    match p:
        case PConst(v):
            return v
        case PVar(i):
            return assignment.get(i, False)
        case PNot(a):
            return not eval_prop(a, assignment)
        case PAnd(args):
            return all(eval_prop(a, assignment) for a in args)
        case POr(args):
            return any(eval_prop(a, assignment) for a in args)
    raise TypeError(f"not a propositional formula: {p!r}")


class GroundAtom(NamedTuple):
    pred: str
    args: tuple

    def __str__(self):
        return f"{self.pred}({', '.join(format_value(v) for v in self.args)})"


class AtomMap:
    """Bijection between variable ids (from 1) and ground predicate atoms."""

    def __init__(self):
        self._ids: dict[GroundAtom, int] = {}
        self._atoms: list[GroundAtom] = []

    def var(self, atom: GroundAtom) -> int:
        i = self._ids.get(atom)
        if i is None:
            self._atoms.append(atom)
            i = self._ids[atom] = len(self._atoms)
        return i

    def atom(self, i: int) -> GroundAtom:
        return self._atoms[i - 1]

    def __len__(self):
        return len(self._atoms)

    def __iter__(self):
        return iter(enumerate(self._atoms, 1))


@dataclass
class Grounding:
    prop: PropFormula
    atoms: AtomMap
    instances: int = 0   # quantifier-free instances produced by expansion
    bindings: int = 0


# -- grounding ---------------------------------------------------------------

def check_fragment(f) -> None:
    """Raise :class:`PreconditionError` unless ``f`` can be grounded soundly."""
    problems = [d for d in validate(f) if d.kind in ("unbound", "nonground-bound")]
    if problems:
        raise PreconditionError("; ".join(str(d) for d in problems))
    c = classify(f)
    if not c.is_flat:
        raise PreconditionError("formula has a non-flat iteration or recursion term")
    if not c.is_explicit:
        raise PreconditionError("formula has a recursion term with a non-ground bound")
    for n in walk(f):
        if isinstance(n, BSearch) and any(isinstance(m, Pred) for m in walk(n.body)):
            raise PreconditionError(f"search term depends on predicates: {format_node(n)}")


class _Grounder:
    def __init__(self, max_instances, max_steps):
        self.ev = Evaluator(max_steps=max_steps)
        self.atoms = AtomMap()
        self.max_instances = max_instances
        self.instances = 0
        self.bindings = 0

    def ground(self, f, env):
        match f:
            case Eq() | Mem() | Seg():
                return TRUE if self.ev.holds(f, env) else FALSE
            case Pred(name, args):
                vals = tuple(self.ev.term(a, env) for a in args)
                return PVar(self.atoms.var(GroundAtom(name, vals)))
            case Not(a):
                return p_not(self.ground(a, env))
            case And(a, b):
                return p_and((self.ground(a, env), self.ground(b, env)))
            case Or(a, b):
                return p_or((self.ground(a, env), self.ground(b, env)))
            case Quant(kind, var, mode, bound, body):
                l = self.ev.term(bound, env)
                leaf = self.ev._quantifier_free(body)
                inner = dict(env)
                parts = []
                for cand in _candidates(mode, l):
                    self.bindings += 1
                    if leaf:
                        self.instances += 1
                    if self.bindings > self.max_instances:
                        raise ResourceError(
                            f"quantifier expansion exceeded {self.max_instances} instances")
                    inner[var] = cand
                    parts.append(self.ground(body, inner))
                return p_and(parts) if kind == "forall" else p_or(parts)
        raise TypeError(f"not a formula: {f!r}")


def ground_to_prop(f, *, max_instances: int | None = None,
                   max_steps: int | None = None) -> Grounding:
    check_fragment(f)
    g = _Grounder(DEFAULT_MAX_INSTANCES if max_instances is None else max_instances, max_steps)
    prop = g.ground(f, {})
    return Grounding(prop, g.atoms, g.instances, g.bindings)


# -- CNF and DPLL ------------------------------------------------------------

def _nnf(p, positive=True):
    match p:
        case PConst(v):
            return PConst(v == positive)
        case PVar():
            return p if positive else PNot(p)
        case PNot(a):
            return _nnf(a, not positive)
        case PAnd(args):
            parts = tuple(_nnf(a, positive) for a in args)
            return p_and(parts) if positive else p_or(parts)
        case POr(args):
            parts = tuple(_nnf(a, positive) for a in args)
            return p_or(parts) if positive else p_and(parts)
    raise TypeError(f"not a propositional formula: {p!r}")


def to_cnf(p, first_aux: int) -> tuple[list[list[int]], int]:
    """Clauses over integer literals, with auxiliary variables from ``first_aux``.

    Works on the negation normal form; a conjunction nested under a
    disjunction is named by a fresh variable that implies it.
    Returns the clauses and the highest variable id used.
    """
    clauses: list[list[int]] = []
    top = [first_aux - 1]

    def lit(n):
        return n.id if isinstance(n, PVar) else -n.arg.id

    def name_of(n) -> int:
        if isinstance(n, (PVar, PNot)):
            return lit(n)
        top[0] += 1
        a = top[0]
        for c in clauses_of(n):
            clauses.append([-a] + c)
        return a

    def clauses_of(n) -> list[list[int]]:
        match n:
            case PConst(True):
                return []
            case PConst(False):
                return [[]]
            case PVar() | PNot():
                return [[lit(n)]]
            case PAnd(args):
                out = []
                for a in args:
                    out.extend(clauses_of(a))
                return out
            case POr(args):
                return [[name_of(a) for a in args]]
        raise TypeError(n)

    clauses.extend(clauses_of(_nnf(p)))
    return clauses, top[0]


def solve_cnf(clauses: list[list[int]], nvars: int, order=None) -> dict[int, bool] | None:
    """DPLL with unit propagation, pure literals and ordered branching.

    Branches on the first variable in ``order`` (default ``1..nvars``) that
    occurs in a not-yet-satisfied clause, trying ``True`` first. Returns a
    (partial) satisfying assignment or ``None``.
    """
    order = list(range(1, nvars + 1)) if order is None else list(order)
    rank_of = {v: k for k, v in enumerate(order)}
    assign = [0] * (nvars + 1)
    trail: list[int] = []
    watches: dict[int, list[int]] = {}
    cls: list[list[int]] = []
    units: list[int] = []
    for c in clauses:
        c = list(dict.fromkeys(c))
        if not c:
            return None
        if any(-l in c for l in c):
            continue
        if len(c) == 1:
            units.append(c[0])
            continue
        ci = len(cls)
        cls.append(c)
        watches.setdefault(c[0], []).append(ci)
        watches.setdefault(c[1], []).append(ci)

    def value(l):
        a = assign[abs(l)]
        return a if l > 0 else -a

    def enqueue(l) -> bool:
        v = value(l)
        if v:
            return v == 1
        assign[abs(l)] = 1 if l > 0 else -1
        trail.append(l)
        return True

    qhead = 0

    def propagate() -> bool:
        nonlocal qhead
        while qhead < len(trail):
            false_lit = -trail[qhead]
            qhead += 1
            ws = watches.get(false_lit)
            if not ws:
                continue
            keep = []
            for k, ci in enumerate(ws):
                c = cls[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                if value(c[0]) == 1:
                    keep.append(ci)
                    continue
                for j in range(2, len(c)):
                    if value(c[j]) != -1:
                        c[1], c[j] = c[j], c[1]
                        watches.setdefault(c[1], []).append(ci)
                        break
                else:
                    keep.append(ci)
                    if value(c[0]) == -1:
                        keep.extend(ws[k + 1:])
                        watches[false_lit] = keep
                        return False
                    enqueue(c[0])
            watches[false_lit] = keep
        return True

    def undo(n):
        nonlocal qhead
        while len(trail) > n:
            assign[abs(trail.pop())] = 0
        qhead = min(qhead, n)

    def open_literals():
        occ = set()
        for c in cls:
            if any(value(l) == 1 for l in c):
                continue
            occ.update(l for l in c if not value(l))
        return occ

    for u in units:
        if not enqueue(u):
            return None
    stack: list[tuple[int, int, bool]] = []
    while True:
        ok = propagate()
        if ok:
            occ = open_literals()
            pure = [l for l in occ if -l not in occ]
            if pure:
                for l in pure:
                    enqueue(l)
                continue
            if not occ:
                return {v: assign[v] == 1 for v in range(1, nvars + 1) if assign[v]}
            var = min({abs(l) for l in occ}, key=lambda v: rank_of.get(v, len(order) + v))
            stack.append((len(trail), var, True))
            enqueue(var)
            continue
        while stack:
            mark, var, first = stack.pop()
            undo(mark)
            if first:
                stack.append((mark, var, False))
                enqueue(-var)
                break
        else:
            return None


def dpll(p: PropFormula) -> dict[int, bool] | None:
    """Satisfying assignment of ``p`` over its variables, or ``None`` if unsatisfiable.

    The assignment is total on the variables of ``p``; variables the search
    left open are reported as ``False``.
    """
    pv = prop_vars(p)
    n = max(pv, default=0)
    clauses, top = to_cnf(p, n + 1)
    model = solve_cnf(clauses, top, order=sorted(pv))
    if model is None:
        return None
    out = {v: model.get(v, False) for v in sorted(pv)}
    assert eval_prop(p, out), "solver returned a non-model"
    return out


def brute_force_sat(p: PropFormula) -> dict[int, bool] | None:
    """Exhaustive assignment enumeration; exponential, for cross-checking."""
    pv = sorted(prop_vars(p))
    for bits in range(1 << len(pv)):
        a = {v: bool(bits >> k & 1) for k, v in enumerate(pv)}
        if eval_prop(p, a):
            return a
    return None


# -- satisfiability of formulas ----------------------------------------------

@dataclass
class SatResult:
    satisfiable: bool
    witness: Structure | None = None
    assignment: dict = field(default_factory=dict)
    grounding: Grounding | None = None

    def __bool__(self):
        return self.satisfiable


def _signature_of(f) -> tuple[dict, set]:
    preds: dict[str, int] = {}
    urs: set[str] = set()
    for n in walk(f):
        if isinstance(n, Pred):
            if preds.setdefault(n.name, len(n.args)) != len(n.args):
                raise PreconditionError(f"predicate {n.name} is used with different arities")
        elif isinstance(n, UrConst):
            urs.add(n.name)
    return preds, urs


def witness_structure(f, grounding: Grounding, assignment: dict) -> Structure:
    preds, urs = _signature_of(f)
    ext: dict[str, list] = {name: [] for name in preds}
    for i, atom in grounding.atoms:
        for v in atom.args:
            urelements_of(v, urs)
        if assignment.get(i, False):
            ext[atom.pred].append(atom.args)
    return Structure(urs, preds, ext)


def sat_check(f, *, max_instances: int | None = None, max_steps: int | None = None) -> SatResult:
    """Decide whether some list superstructure satisfies the closed formula ``f``."""
    _signature_of(f)
    g = ground_to_prop(f, max_instances=max_instances, max_steps=max_steps)
    model = dpll(g.prop)
    if model is None:
        return SatResult(False, grounding=g)
    return SatResult(True, witness_structure(f, g, model), model, g)

"""Short terms for long lists, and the list product and power terms.

``explist_term(k, n, flavor)`` is a ground term of size linear in ``n`` (and
``k``) whose value is a list of ``expn(k, n)`` copies of ``nil``:

* ``rec``: a chain of ``k`` recursion terms, each doubling an accumulator
  once per element of the previous list. The innermost bound is a chain of
  ``n`` conses onto ``nil`` (``n`` elements), so ``k = 1`` gives ``2**n``.
* ``iter_u``: ``n`` doublings with the count in unary (``k = 1`` only).
* ``iter_b``: the count ``2**n`` in binary, which takes ``n + 1`` digits.
  With a doubling step this gives ``expn(2, n)``; with a one-element append
  step it gives ``expn(1, n)``.

``times_term`` has free variables ``$x1``, ``$x2`` and evaluates to the list
of ``conc(b, c)`` for ``b`` in ``x1`` (outer) and ``c`` in ``x2`` (inner).
``power_term(k, n)`` has free variable ``$x`` and evaluates to the
``expn(k, n)``-fold product of ``x`` with itself.
"""

from __future__ import annotations

from ..errors import PreconditionError, ResourceError
from ..syntax import Conc, Cons, Iter, ListLit, Nil, Rec, Tail, Head, Var, substitute

DEFAULT_CEILING = 2 ** 20

FLAVORS = ("rec", "iter_u", "iter_b")


def expn(k: int, n: int, ceiling: int = DEFAULT_CEILING) -> int:
    """Tower of twos: ``expn(1, n) = 2**n``, ``expn(k + 1, n) = 2**expn(k, n)``."""
    if k < 1 or n < 0:
        raise ValueError("expn needs k >= 1 and n >= 0")
    value = n
    for _ in range(k):
        if value >= ceiling.bit_length():
            raise ResourceError(f"expn({k}, {n}) exceeds the ceiling {ceiling}")
        value = 2 ** value
    if value > ceiling:
        raise ResourceError(f"expn({k}, {n}) exceeds the ceiling {ceiling}")
    return value


_SINGLETON_NIL = ListLit((Nil(),))
_DOUBLE = Conc(Var("g"), Var("g"))


def nil_chain(n: int):
    """``cons(...cons(nil, nil)..., nil)``: a list of ``n`` nils built by ``n`` conses."""
    t = Nil()
    for _ in range(n):
        t = Cons(t, Nil())
    return t


def epsilon_term(k: int, n: int):
    """Recursion-only term for a list of ``expn(k, n)`` nils."""
    if k < 1 or n < 0:
        raise PreconditionError("epsilon_term needs k >= 1 and n >= 0")
    t = nil_chain(n)
    for _ in range(k):
        t = Rec(_SINGLETON_NIL, "g", "b", _DOUBLE, t)
    return t


def explist_term(k: int, n: int, flavor: str = "rec"):
    if n < 0 or k < 1:
        raise PreconditionError("explist_term needs k >= 1 and n >= 0")
    if flavor == "rec":
        return epsilon_term(k, n)
    if flavor == "iter_u" and k == 1:
        return Iter(n, "u", _SINGLETON_NIL, "y", Conc(Var("y"), Var("y")))
    if flavor == "iter_b" and k == 1:
        return Iter(2 ** n, "b", Nil(), "y", Cons(Var("y"), Nil()))
    if flavor == "iter_b" and k == 2:
        return Iter(2 ** n, "b", _SINGLETON_NIL, "y", Conc(Var("y"), Var("y")))
    raise PreconditionError(f"flavor {flavor!r} does not support k={k}")


def explist_info(k: int, n: int, flavor: str) -> dict:
    """Metadata describing how a generated list term is calibrated."""
    notes = {
        "rec": "innermost bound holds n elements (n conses onto nil), so each "
               "recursion level doubles exactly expn(k-1, n) times",
        "iter_u": "count n in unary, doubling step",
        "iter_b": ("count 2**n in binary, append-one step" if k == 1
                   else "count 2**n in binary, doubling step"),
    }
    try:
        expected = expn(k, n, ceiling=2 ** 64)
    except ResourceError:
        expected = None
    return {"k": k, "n": n, "flavor": flavor,
            "expected_length": expected,
            "calibration": notes.get(flavor, "")}


# -- product and power ---------------------------------------------------------

# list of conc(x, b) for b in y; appends each product with cons
_MULTIPLY_ELEMENT = Rec(Nil(), "g", "b", Cons(Var("g"), Conc(Var("x"), Var("b"))), Var("y"))


def multiply_element_term(x, y):
    return substitute(_MULTIPLY_ELEMENT, {"x": x, "y": y})


def times_term():
    step = Conc(Var("g"), multiply_element_term(Var("b"), Var("x2")))
    return Rec(Nil(), "g", "b", step, Var("x1"))


def times_of(a, b):
    """``times_term`` instantiated with ``a`` and ``b``."""
    return substitute(times_term(), {"x1": a, "x2": b})


def power_term(k: int, n: int):
    """``rec($x; $g, $b. times($g, $x); tail(epsilon_k))``."""
    return Rec(Var("x"), "g", "b", times_of(Var("g"), Var("x")), Tail(epsilon_term(k, n)))


def power_of(base, bound):
    """``base`` raised to ``len(bound)`` with ``base`` written only once.

    The accumulator is the pair ``[base, P]`` with ``P`` starting at
    ``[nil]``, the unit of the product; every step replaces ``P`` by
    ``times(P, base)``. Keeps nested powers linear in size.
    """
    g = Var("g")
    step = Cons(Tail(g), times_of(Head(g), Head(Tail(g))))
    pair = ListLit((Var("s"), _SINGLETON_NIL))
    return substitute(Head(Rec(pair, "g", "b", step, bound)), {"s": base})

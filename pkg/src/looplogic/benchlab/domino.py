"""Domino systems, their tiling theories, and a backtracking tiling oracle.

Grid coordinates are initial segments of a side list ``e`` of length ``m``:
coordinate ``z`` (1-based) is the segment with ``m - z + 1`` elements, so
``e`` itself is row/column 1 and ``tail`` steps one coordinate forward.
Predicate ``T<i>(y, x)`` says that tile ``i`` sits in row ``y``, column ``x``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import PreconditionError, ResourceError
from ..evaluator import eval_term
from ..structures import Structure
from ..syntax import And, Eq, Not, Pred, Quant, Tail, Var, conj, disj
from ..values import urelements_of


@dataclass(frozen=True)
class DominoSystem:
    tiles: int
    H: frozenset
    V: frozenset
    init: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "H", frozenset(tuple(p) for p in self.H))
        object.__setattr__(self, "V", frozenset(tuple(p) for p in self.V))
        object.__setattr__(self, "init", tuple(self.init))
        if self.tiles < 1:
            raise PreconditionError("a domino system needs at least one tile")
        ok = range(1, self.tiles + 1)
        for rel in (self.H, self.V):
            for pair in rel:
                if len(pair) != 2 or pair[0] not in ok or pair[1] not in ok:
                    raise PreconditionError(f"bad tile pair {pair} for {self.tiles} tiles")
        if any(t not in ok for t in self.init):
            raise PreconditionError(f"initial condition {self.init} names an unknown tile")

    @property
    def size(self) -> int:
        return len(self.init) + len(self.H) + len(self.V) + self.tiles

    def to_dict(self) -> dict:
        return {"tiles": self.tiles, "H": sorted(map(list, self.H)),
                "V": sorted(map(list, self.V)), "init": list(self.init)}


def load_domino(text: str) -> DominoSystem:
    data = json.loads(text)
    try:
        return DominoSystem(data["tiles"], data.get("H", []), data.get("V", []),
                            data.get("init", []))
    except (KeyError, TypeError) as exc:
        raise PreconditionError(f"malformed domino system: {exc}") from None


def tile_pred(i: int) -> str:
    return f"T{i}"


def domino_theory(d: DominoSystem, side_term) -> list:
    """The tiling axioms for ``d`` over the grid spanned by ``side_term``.

    In order: every cell carries a tile; no cell carries two distinct tiles
    (one axiom per ordered pair); the initial row condition (only if ``init``
    is non-empty); the vertical and the horizontal matching constraints (one
    axiom per forbidden pair).
    """
    side = eval_term(side_term)
    if not isinstance(side, tuple):
        raise PreconditionError("side term must evaluate to a list")
    if len(side) < max(len(d.init), 1):
        raise PreconditionError(
            f"side list has {len(side)} elements, need at least {max(len(d.init), 1)}")
    E = side_term
    x, y, x1, x2, y1, y2 = (Var(n) for n in ("x", "y", "x1", "x2", "y1", "y2"))
    T = lambda i, a, b: Pred(tile_pred(i), (a, b))
    tiles = range(1, d.tiles + 1)

    def every(names, body):
        for n in reversed(names):
            body = Quant("forall", n, "sub", E, body)
        return body

    axioms = [every(("x", "y"), disj(T(i, y, x) for i in tiles))]
    for i in tiles:
        for j in tiles:
            if i != j:
                axioms.append(every(("x", "y"), Not(And(T(i, y, x), T(j, y, x)))))
    if d.init:
        atoms, col = [], E
        for t in d.init:
            atoms.append(T(t, E, col))
            col = Tail(col)
        axioms.append(conj(atoms))
    for i in tiles:
        for j in tiles:
            if (j, i) not in d.V:
                axioms.append(every(("x", "y1", "y2"),
                                    Not(conj((Eq(y1, Tail(y2)), T(i, y1, x), T(j, y2, x))))))
    for i in tiles:
        for j in tiles:
            if (j, i) not in d.H:
                axioms.append(every(("x1", "x2", "y"),
                                    Not(conj((Eq(x1, Tail(x2)), T(i, y, x1), T(j, y, x2))))))
    return axioms


def seg(side: tuple, z: int) -> tuple:
    """The initial segment of ``side`` at coordinate ``z``: ``len(side) - z + 1`` elements."""
    return side[:len(side) - z + 1]


def is_tiling(d: DominoSystem, t) -> bool:
    m = len(t)
    if any(len(row) != m for row in t):
        return False
    if len(d.init) > m:
        return False
    for yy in range(m):
        for xx in range(m):
            if t[yy][xx] not in range(1, d.tiles + 1):
                return False
            if yy and (t[yy - 1][xx], t[yy][xx]) not in d.V:
                return False
            if xx and (t[yy][xx - 1], t[yy][xx]) not in d.H:
                return False
    return all(t[0][k] == tile for k, tile in enumerate(d.init))


def oracle_tiling(d: DominoSystem, m: int, max_side: int = 6, max_tiles: int = 4):
    """A tiling of the ``m`` x ``m`` grid as a tuple of rows, or ``None``.

    Exhaustive backtracking in row-major order.
    """
    if m > max_side or d.tiles > max_tiles:
        raise ResourceError(f"oracle limited to side <= {max_side} and <= {max_tiles} tiles")
    if m < 1:
        raise PreconditionError("grid side must be positive")
    if len(d.init) > m:
        return None
    grid = [[0] * m for _ in range(m)]
    cells = [(r, c) for r in range(m) for c in range(m)]

    def fits(r, c, tile):
        if r == 0 and c < len(d.init) and d.init[c] != tile:
            return False
        if r and (grid[r - 1][c], tile) not in d.V:
            return False
        if c and (grid[r][c - 1], tile) not in d.H:
            return False
        return True

    def place(k):
        if k == len(cells):
            return True
        r, c = cells[k]
        for tile in range(1, d.tiles + 1):
            if fits(r, c, tile):
                grid[r][c] = tile
                if place(k + 1):
                    return True
        grid[r][c] = 0
        return False

    if place(0):
        return tuple(tuple(row) for row in grid)
    return None


def domino_model(d: DominoSystem, tiling, side: tuple) -> Structure:
    """The structure in which ``T<k>(seg^y, seg^x)`` holds iff the tiling puts ``k`` at ``(y, x)``."""
    m = len(tiling)
    if len(side) != m:
        raise PreconditionError("side list length must equal the tiling size")
    ext = {tile_pred(i): [] for i in range(1, d.tiles + 1)}
    for yy in range(1, m + 1):
        for xx in range(1, m + 1):
            ext[tile_pred(tiling[yy - 1][xx - 1])].append((seg(side, yy), seg(side, xx)))
    preds = {tile_pred(i): 2 for i in range(1, d.tiles + 1)}
    return Structure(urelements_of(side), preds, ext)


def tiling_from_model(d: DominoSystem, s: Structure, side: tuple):
    """Read a grid off a model: ``t(y, x) = k`` iff ``T<k>(seg^y, seg^x)`` holds.

    Returns ``None`` if some cell carries no tile or more than one.
    """
    m = len(side)
    rows = []
    for yy in range(1, m + 1):
        row = []
        for xx in range(1, m + 1):
            args = (seg(side, yy), seg(side, xx))
            found = [i for i in range(1, d.tiles + 1)
                     if tile_pred(i) in s.predicates and s.atom_holds(tile_pred(i), args)]
            if len(found) != 1:
                return None
            row.append(found[0])
        rows.append(tuple(row))
    return tuple(rows)

"""
Tiling a grid by satisfiability
===============================

A domino system lists which tiles may sit to the right of or below each
other, and which tiles must start the first row. Its tiling theory over an
``m``-element side list is satisfiable exactly when the ``m x m`` grid can be
tiled; a satisfying structure spells out the tiling.
"""

from looplogic import check, eval_term, sat_check
from looplogic.benchlab import (
    DominoSystem, domino_theory, oracle_tiling, tiling_from_model,
)
from looplogic.syntax import ListLit, Nil, conj

# tile 1 may only sit above tile 2; rows must be uniform
d = DominoSystem(tiles=2, H={(1, 1), (2, 2)}, V={(1, 2)}, init=(1,))

for m in (2, 3):
    side = ListLit((Nil(),) * m)
    axioms = domino_theory(d, side)
    r = sat_check(conj(axioms))
    print(f"m={m}: {len(axioms)} axioms, {len(r.grounding.atoms)} atoms, "
          f"{'SAT' if r else 'UNSAT'}; oracle: {oracle_tiling(d, m)}")
    if r:
        assert all(check(ax, r.witness) for ax in axioms)
        for row in tiling_from_model(d, r.witness, eval_term(side)):
            print("   ", " ".join(map(str, row)))

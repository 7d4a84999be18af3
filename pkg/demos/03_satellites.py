"""
Legendrian satellites
=====================

The n-copy of a knot front is n push-offs stacked in the z direction.
Splicing an annular pattern into the copies of one rightward strand gives
the Legendrian satellite, whose invariants obey

    tb(P(K)) = w(P)^2 tb(K) + tb(P),     rot(P(K)) = w(P) rot(K) + rot(P).
"""
import time
import warnings

from legfront import (TwistedSatelliteWarning, check_composition, compute, generate,
                      invariants_of, legendrian_satellite, parallel_copies)
from legfront.satellite import admissible_cuts, block_sizes

trefoil = generate("trefoil")
copies = parallel_copies(trefoil, 2)
r = invariants_of(copies)
print(f"2-copy of the trefoil: {len(copies)} events, per-copy tb {r.component_tb}, "
      f"linking {r.linking[0][1]}")

# K is built, not drawn: the Whitehead pattern over a stabilised trefoil
W, J = generate("W"), generate("J")
K = legendrian_satellite(W, J)
print("K = W(J):", compute(K).as_knot(), "with", len(K.word), "events")

# any rightward strand of the companion works as the cut
for cut in admissible_cuts(J)[:4]:
    print("cut", cut, "->", compute(legendrian_satellite(W, J, *cut)).as_knot())

# a companion with tb != 0 gives a twisted satellite, with a warning
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    twisted = legendrian_satellite(generate("twist-pattern"), trefoil)
print("twisted satellite:", compute(twisted).as_knot(), "|", caught[0].message)

for name, i in (("P", 4), ("Q", 3), ("L", 2)):
    c = check_composition(generate(name, i), generate("K"))
    print(f"{name}_{i}(K): winding {c.winding}, tb {c.tb_direct} = {c.tb_formula}, "
          f"rot {c.rot_direct} = {c.rot_formula}")

# the blow-up grows quadratically in the pattern's seam count
with warnings.catch_warnings():
    warnings.simplefilter("ignore", TwistedSatelliteWarning)
    for i in (10, 25, 50):
        pattern = generate("L", i)
        t0 = time.perf_counter()
        front = legendrian_satellite(pattern, generate("K"))
        rep = compute(front)
        dt = time.perf_counter() - t0
        predicted = int(block_sizes(generate("K"), pattern.seam).sum()) + len(pattern)
        print(f"L_{i}(K): {len(front.word):>7} events (predicted {predicted}), "
              f"tb {rep.tb}, linking {rep.linking[0][1]}, {dt:.3f} s")

"""
Slice-genus bounds by propagation
=================================

Lower bounds come from the slice-Bennequin inequality applied to the
satellite fronts.  Upper bounds come from explicit surfaces and
cobordisms.  Propagating both across crossing changes and band moves pins
the 4-genus of every satellite, and a split-link hypothesis is refuted by
a contradiction.
"""
from legfront import propagate
from legfront.proofs import (clasp_graph, link_tau_graph, reorientation_bound, split_verdicts,
                             link_graph)

fix = propagate(clasp_graph(4))
print(fix.table())
print()
print("how g4(Q4) was pinned:")
print(fix.derivation.format(fix.support("Q4", "g4")))

print()
fix = propagate(link_graph(6))
for i in range(7):
    print(f"l{i}: g4 {fix.g4(f'l{i}')}")
print()
print("support of g4(l6):")
print(fix.derivation.format(fix.support("l6", "g4")))

# every derivation replays from scratch to the same intervals
assert fix.derivation.replay() == fix.intervals

print()
for v in split_verdicts(3):
    print(v)

print()
fix = propagate(link_tau_graph(6))
print("tau(l_i):", [str(fix.tau(f"l{i}")) for i in range(7)])

print()
for i in range(5):
    b = reorientation_bound(i)
    print(f"reversing one component of l{i}: g4 >= {b.lower} (versus g4(l{i}) = {i})")

"""
Legendrian moves leave tb and rot alone
=======================================

The three front moves (plus planar commutation of far-apart events) are
applied at random.  tb, rot and linking numbers never change, while the
word itself wanders off.
"""
import random

from legfront import apply_tracked, find_sites, generate, invariants_of, perturb
from legfront.render import to_ascii

word = generate("trefoil")
sites = find_sites(word)
print(len(sites), "sites on the trefoil, by kind:",
      {m: sum(s.move == m for s in sites) for m in ("R1", "R2", "R3", "C")})

rng = random.Random(0)
for step in range(8):
    site = rng.choice(find_sites(word))
    word, component_map = apply_tracked(word, site)
    r = invariants_of(word)
    print(f"{site.move} {site.variant:<16} -> {len(word):>3} events, tb {r.tb}, rot {r.rot}")
print(to_ascii(word))

# a two-component link: the component map follows each component
link = generate("L", 1)
base = invariants_of(link)
moved = perturb(link, 25, seed=4)
after = invariants_of(moved)
print("linking before/after:", base.linking, after.linking)
print("per-component tb before/after:", base.component_tb, after.component_tb)

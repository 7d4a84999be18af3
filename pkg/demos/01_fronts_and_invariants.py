"""
Fronts as event words
=====================

A front is read left to right as a word of events acting on numbered
levels: ``L<i>`` opens a cusp, ``R<i>`` closes one, ``X<i>`` crosses the
strands at levels i and i+1.  This script builds a few words, checks them,
orients them and computes their classical invariants.
"""
from legfront import FrontWord, invariants_of, trace_components, validate
from legfront.dsl import parse, render_text
from legfront.render import to_ascii

# the max-tb right-handed trefoil
trefoil = FrontWord.knot("L1 L3 X2 X2 X2 R1 R1")
print(to_ascii(trefoil))
print("valid:", validate(trefoil).ok)

# a broken word reports the first event that cannot happen
print(validate(FrontWord.knot("X1")))

# orientation: the earliest strand of each component points right
front = trace_components(trefoil)
print("strand directions:", front.directions.tolist())
for index, over, under in front.crossings:
    print(f"crossing at event {index}: over strand {over}, under strand {under}")

report = invariants_of(trefoil)
print(report.to_text())

# reversing the orientation flips rot and keeps tb
reversed_report = invariants_of(trefoil.with_orientations([(0, "L")]))
print("reversed (tb, rot):", reversed_report.tb, reversed_report.rot)

# stabilisations lower tb by one and move rot by one
for word in ("L1 R1", "L1 L1 R2 R1", "L1 L2 R1 R1"):
    r = invariants_of(FrontWord.knot(word))
    print(f"{word:<14} tb {r.tb:>2}  rot {r.rot:>2}")

# annular patterns carry a winding number
pattern = FrontWord.pattern(3, "X1 X2")
print("pattern winding:", invariants_of(pattern).winding)

# the text format round-trips
text = render_text(pattern.with_orientations([(0, "L")]))
print(text.decode())
assert parse(text) == pattern.with_orientations([(0, "L")])

"""
The diagram families and their captions
=======================================

Every named diagram is generated as a word and certified against its
tabulated (tb, rot, winding, components).
"""
from legfront import certify, generate
from legfront.render import to_ascii

for name in ("unknot", "trefoil", "twist-pattern", "twist-satellite", "W", "J", "K"):
    c = certify(name)
    cells = ", ".join(f"{k} {e}" for k, e, _ in c.rows)
    print(f"{name:<15} {'ok ' if c.ok else 'BAD'} {cells}")

print()
print(f"{'i':>3} {'P_i':>14} {'Q_i':>14} {'L_i':>18}")
for i in range(1, 11):
    row = []
    for name in ("P", "Q", "L"):
        r = certify(name, i).report
        row.append(f"({r.tb}, {r.rot}, {r.winding})" + (f" x{r.components}"
                                                         if r.components > 1 else ""))
    print(f"{i:>3} {row[0]:>14} {row[1]:>14} {row[2]:>18}")

print()
print("Q_2 pattern:")
print(to_ascii(generate("Q", 2)))
print("L_1 pattern:")
print(to_ascii(generate("L", 1)))

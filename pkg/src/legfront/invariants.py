"""Classical invariants of oriented fronts.

    tb  = writhe - (number of cusps) / 2
    rot = (down cusps - up cusps) / 2

A crossing is positive exactly when both strands point the same way in x.
To see this, rotate a front crossing by 45 degrees: the descending (over)
strand and the ascending strand, both oriented rightward, become the
standard positive crossing.  Reversing one strand changes the sign.

A left cusp moves downward when its lower branch points rightward; a right
cusp moves downward when its upper branch points rightward.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .front import FrontWord, OrientedFront, RIGHTWARD, trace_components

__all__ = ["InvariantReport", "NotConnected", "crossing_sign", "compute", "invariants_of"]


class NotConnected(ValueError):
    """Knot invariants were requested for a front with several components."""


def crossing_sign(over_dir: int, under_dir: int) -> int:
    return 1 if over_dir == under_dir else -1


@dataclass(frozen=True)
class InvariantReport:
    writhe: int
    cusps_total: int
    cusps_down: int
    cusps_up: int
    tb: int
    rot: int
    winding: int | None
    components: int
    linking: tuple
    component_tb: tuple
    component_rot: tuple

    def as_knot(self):
        """``(tb, rot)`` of a connected front."""
        if self.components != 1:
            raise NotConnected(f"front has {self.components} components")
        return self.tb, self.rot

    def to_dict(self):
        d = asdict(self)
        d["linking"] = [list(r) for r in self.linking]
        d["component_tb"] = list(self.component_tb)
        d["component_rot"] = list(self.component_rot)
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self):
        lines = [f"writhe {self.writhe}", f"cusps_down {self.cusps_down}",
                 f"cusps_up {self.cusps_up}", f"tb {self.tb}", f"rot {self.rot}",
                 f"winding {'-' if self.winding is None else self.winding}",
                 f"components {self.components}"]
        for row in self.linking:
            lines.append("linking " + " ".join(str(v) for v in row))
        return "\n".join(lines) + "\n"


def compute(front: OrientedFront) -> InvariantReport:
    t = front.trace
    d = front.directions.astype(np.int64)
    comp = front.component_of
    ncomp = front.n_components

    signs = d[t.over] * d[t.under]
    writhe = int(signs.sum())
    left_down = d[t.lcusp_lower] == RIGHTWARD
    right_down = d[t.rcusp_upper] == RIGHTWARD
    n_left, n_right = len(t.lcusp_lower), len(t.rcusp_upper)
    down = int(left_down.sum() + right_down.sum())
    total = n_left + n_right
    up = total - down
    if total % 2 or (down - up) % 2:
        raise AssertionError("cusp parity violated; the front is malformed")

    co, cu = comp[t.over], comp[t.under]
    same = co == cu
    comp_writhe = np.bincount(co[same], weights=signs[same], minlength=ncomp)
    cusp_comp = np.concatenate((comp[t.lcusp_lower], comp[t.rcusp_upper]))
    cusp_down = np.concatenate((left_down, right_down)).astype(np.int64)
    comp_cusps = np.bincount(cusp_comp, minlength=ncomp)
    comp_down = np.bincount(cusp_comp, weights=cusp_down, minlength=ncomp)
    comp_tb = tuple(int(w - c // 2) for w, c in zip(comp_writhe.astype(np.int64), comp_cusps))
    comp_rot = tuple(int(2 * dn - c) // 2 for dn, c in zip(comp_down.astype(np.int64), comp_cusps))

    link2 = np.zeros((ncomp, ncomp), dtype=np.int64)
    mixed = ~same
    np.add.at(link2, (co[mixed], cu[mixed]), signs[mixed])
    link2 = link2 + link2.T
    if np.any(link2 % 2):
        raise AssertionError("odd crossing count between components")
    linking = tuple(tuple(int(v) for v in row) for row in link2 // 2)

    return InvariantReport(
        writhe=writhe, cusps_total=total, cusps_down=down, cusps_up=up,
        tb=writhe - total // 2, rot=(down - up) // 2, winding=front.winding,
        components=ncomp, linking=linking, component_tb=comp_tb, component_rot=comp_rot)


def invariants_of(word: FrontWord) -> InvariantReport:
    """Trace and compute in one step."""
    return compute(trace_components(word))

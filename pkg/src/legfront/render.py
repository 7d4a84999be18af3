"""SVG and ASCII pictures of front words.

Columns run left to right, level 1 is drawn at the bottom.  At a crossing
the strand descending from the upper level is drawn on top and the other
one is broken; fronts carry no over/under data, so this is presentation
only.

The ASCII form uses a 4-character cell per event::

    cusp L      cusp R      crossing X
     /--        --\\         -\\/-
     \\--        --/         -/\\-

and parses back with :func:`from_ascii`.
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .front import FrontWord, RIGHTWARD, trace_components

__all__ = ["RenderSpec", "render", "to_svg", "to_ascii", "from_ascii"]

_PALETTE = ("#1f4e9a", "#b3261e", "#2e7d32", "#8e44ad", "#e67e22", "#00838f")
_CELLS = {0: (" /--", " \\--"), 1: ("--\\ ", "--/ "), 2: ("-\\/-", "-/\\-")}
_PLAIN = "----"
_BLANK = "    "


@dataclass(frozen=True)
class RenderSpec:
    format: str = "svg"
    scale: float = 1.0
    labels: bool = False          # event tokens above the columns
    levels: bool = False          # level numbers on the left edge
    color: bool = True            # one colour per component

    def __post_init__(self):
        if self.format not in ("svg", "ascii"):
            raise ValueError(f"unknown format {self.format!r}")
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def render(word: FrontWord, spec: RenderSpec = RenderSpec()) -> str:
    return to_svg(word, spec) if spec.format == "svg" else to_ascii(word)


def _walk(word):
    """Yield (column, kind, level, stack before, stack after) with strand ids."""
    stack = list(range(word.initial_strands))
    nxt = len(stack)
    for c, (k, lv) in enumerate(zip(word.kinds.tolist(), word.levels.tolist())):
        before = list(stack)
        i = lv - 1
        if k == 0:
            stack[i:i] = (nxt, nxt + 1)
            nxt += 2
        elif k == 1:
            del stack[i:i + 2]
        else:
            stack[i], stack[i + 1] = stack[i + 1], stack[i]
        yield c, k, lv, before, stack


def to_svg(word: FrontWord, spec: RenderSpec = RenderSpec(format="svg")) -> str:
    front = trace_components(word)
    rows = max(int(word.strand_counts().max()), 1)
    w, h = 24.0 * spec.scale, 16.0 * spec.scale
    left = (20.0 if spec.levels else 6.0) * spec.scale
    top = (18.0 if spec.labels else 6.0) * spec.scale
    width = left + w * max(len(word), 1) + 6.0 * spec.scale
    height = top + h * rows + 6.0 * spec.scale

    def y(level):
        return top + h * (rows - level + 0.5)

    def colour(s):
        if not spec.color:
            return "#000"
        return _PALETTE[int(front.component_of[s]) % len(_PALETTE)]

    def seg(s, x0, y0, x1, y1, cls="strand"):
        return (f'<line class="{cls}" x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" '
                f'y2="{y1:.2f}" stroke="{colour(s)}"/>')

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" '
           f'height="{height:.2f}" viewBox="0 0 {width:.2f} {height:.2f}">',
           f'<g fill="none" stroke-width="{1.6 * spec.scale:.2f}" stroke-linecap="round">']
    for c, k, lv, before, after in _walk(word):
        x0, x1 = left + c * w, left + (c + 1) * w
        if k == 0:
            passing = [(j, j if j < lv else j + 2) for j in range(1, len(before) + 1)]
            cx, cy = x0 + 0.3 * w, (y(lv) + y(lv + 1)) / 2
            d = 0.35 * w
            lo, hi = after[lv - 1], after[lv]
            out.append(f'<path class="cusp" d="M{cx:.2f},{cy:.2f} C{cx + d:.2f},{cy:.2f} '
                       f'{x1 - d:.2f},{y(lv + 1):.2f} {x1:.2f},{y(lv + 1):.2f}" '
                       f'stroke="{colour(hi)}"/>')
            out.append(f'<path class="cusp-branch" d="M{cx:.2f},{cy:.2f} C{cx + d:.2f},{cy:.2f} '
                       f'{x1 - d:.2f},{y(lv):.2f} {x1:.2f},{y(lv):.2f}" stroke="{colour(lo)}"/>')
        elif k == 1:
            passing = [(j if j < lv else j + 2, j) for j in range(1, len(after) + 1)]
            cx, cy = x1 - 0.3 * w, (y(lv) + y(lv + 1)) / 2
            d = 0.35 * w
            lo, hi = before[lv - 1], before[lv]
            out.append(f'<path class="cusp" d="M{x0:.2f},{y(lv + 1):.2f} C{x0 + d:.2f},'
                       f'{y(lv + 1):.2f} {cx - d:.2f},{cy:.2f} {cx:.2f},{cy:.2f}" '
                       f'stroke="{colour(hi)}"/>')
            out.append(f'<path class="cusp-branch" d="M{x0:.2f},{y(lv):.2f} C{x0 + d:.2f},'
                       f'{y(lv):.2f} {cx - d:.2f},{cy:.2f} {cx:.2f},{cy:.2f}" '
                       f'stroke="{colour(lo)}"/>')
        else:
            passing = [(j, j) for j in range(1, len(before) + 1) if j not in (lv, lv + 1)]
            over, under = before[lv], before[lv - 1]
            out.append(seg(over, x0, y(lv + 1), x1, y(lv), "over"))
            ym = (y(lv) + y(lv + 1)) / 2
            gap = 0.18 * w
            xm = (x0 + x1) / 2
            out.append(seg(under, x0, y(lv), xm - gap, ym + (y(lv) - ym) * 2 * gap / w, "under"))
            out.append(seg(under, xm + gap, ym - (y(lv) - ym) * 2 * gap / w, x1, y(lv + 1),
                           "under"))
        for jb, ja in passing:
            out.append(seg(before[jb - 1], x0, y(jb), x1, y(ja)))
        if spec.labels:
            tok = f"{'LRX'[k]}{lv}"
            out.append(f'<text x="{(x0 + x1) / 2:.2f}" y="{top * 0.7:.2f}" font-size='
                       f'"{8 * spec.scale:.1f}" text-anchor="middle" fill="#444" '
                       f'stroke="none">{escape(tok)}</text>')
    if spec.levels:
        for lv in range(1, rows + 1):
            out.append(f'<text x="{left * 0.4:.2f}" y="{y(lv) + 3 * spec.scale:.2f}" '
                       f'font-size="{8 * spec.scale:.1f}" text-anchor="middle" fill="#444" '
                       f'stroke="none">{lv}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_ascii(word: FrontWord) -> str:
    counts = word.strand_counts().tolist()
    rows = max(max(counts), 1)
    grid = [[] for _ in range(rows)]          # grid[level - 1]
    for c, (k, lv) in enumerate(zip(word.kinds.tolist(), word.levels.tolist())):
        # each column is drawn in the coordinates of its wider side
        n = max(counts[c], counts[c + 1])
        upper, lower = _CELLS[k]
        for j in range(1, rows + 1):
            if j == lv + 1:
                cell = upper
            elif j == lv:
                cell = lower
            else:
                cell = _PLAIN if j <= n else _BLANK
            grid[j - 1].append(cell)
    header = "knot" if word.is_closed else f"pattern {word.seam}"
    lines = [header] + ["".join(r).rstrip() for r in reversed(grid)]
    lines += [f"orient {comp} {'R' if d == RIGHTWARD else 'L'}" for comp, d in word.orientations]
    return "\n".join(lines) + "\n"


def from_ascii(text: str) -> FrontWord:
    """Parse the output of :func:`to_ascii` back into a word."""
    lines = text.rstrip("\n").split("\n")
    if not lines or not lines[0].strip():
        raise ValueError("missing header")
    head = lines[0].split()
    seam = None
    if head[0] == "pattern" and len(head) == 2:
        seam = int(head[1])
    elif head != ["knot"]:
        raise ValueError(f"bad header {lines[0]!r}")
    body = [ln for ln in lines[1:] if not ln.startswith("orient ")]
    orient = [ln.split() for ln in lines[1:] if ln.startswith("orient ")]
    width = max((len(r) for r in body), default=0)
    ncols = -(-width // 4)
    body = [r.ljust(ncols * 4) for r in body]
    rows = len(body)
    lookup = {cell: (k, part) for k, pair in _CELLS.items() for part, cell in enumerate(pair)}
    events = []
    for c in range(ncols):
        found = {}
        for r, line in enumerate(body):
            cell = line[4 * c:4 * c + 4]
            if cell in (_PLAIN, _BLANK):
                continue
            if cell not in lookup:
                raise ValueError(f"column {c}: unknown cell {cell!r}")
            k, part = lookup[cell]
            found[part] = (k, rows - r)
        if set(found) != {0, 1} or found[0][0] != found[1][0] or found[0][1] != found[1][1] + 1:
            raise ValueError(f"column {c}: no single event")
        k, lv = found[1]
        events.append(f"{'LRX'[k]}{lv}")
    orientations = [(int(o[1]), o[2]) for o in orient]
    return FrontWord(events, seam, orientations)

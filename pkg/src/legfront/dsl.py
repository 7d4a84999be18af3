"""Plain-text format for front words.

::

    # right-handed trefoil, maximal tb
    knot
    L1 L3 X2 X2 X2 R1 R1

    pattern 4
    X1 X3
    orient 1 L

The first non-comment line is ``knot`` or ``pattern <seam strands>``.  Event
tokens follow, separated by any whitespace.  A line ``orient <component>
<R|L>`` sets the direction of a component's reference strand.  ``#`` starts
a comment that runs to the end of the line.
"""
from __future__ import annotations

import re

from .front import Event, FrontWord, LEFTWARD, RIGHTWARD

__all__ = ["ParseError", "FrontSyntaxError", "UnknownDirective", "ArityError",
           "parse", "render_text", "load", "dump"]

_EVENT = re.compile(r"[LRX][1-9][0-9]*\Z")
_WORD = re.compile(r"[A-Za-z][A-Za-z_-]*\Z")


class ParseError(ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class FrontSyntaxError(ParseError):
    pass


class UnknownDirective(ParseError):
    pass


class ArityError(ParseError):
    pass


def _tokens(line):
    for m in re.finditer(r"\S+", line):
        yield m.group(), m.start() + 1


def parse(text) -> FrontWord:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    seam = header = None
    events, orientations = [], []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        first, col = toks[0]
        if header is None:
            if first == "knot":
                if len(toks) != 1:
                    raise ArityError("'knot' takes no arguments", lineno, toks[1][1])
            elif first == "pattern":
                if len(toks) != 2:
                    raise ArityError("'pattern' takes one argument", lineno, col)
                arg, acol = toks[1]
                if not arg.isdigit():
                    raise FrontSyntaxError(f"bad seam count {arg!r}", lineno, acol)
                seam = int(arg)
            elif _WORD.match(first):
                raise UnknownDirective(f"unknown header {first!r}", lineno, col)
            else:
                raise FrontSyntaxError("expected 'knot' or 'pattern <n>'", lineno, col)
            header = first
            continue
        if first == "orient":
            if len(toks) != 3:
                raise ArityError("'orient' takes a component and a direction", lineno, col)
            (comp, ccol), (d, dcol) = toks[1], toks[2]
            if not comp.isdigit():
                raise FrontSyntaxError(f"bad component index {comp!r}", lineno, ccol)
            if d not in ("R", "L"):
                raise FrontSyntaxError(f"direction must be R or L, got {d!r}", lineno, dcol)
            orientations.append((int(comp), RIGHTWARD if d == "R" else LEFTWARD))
            continue
        for tok, tcol in toks:
            if _EVENT.match(tok):
                events.append(Event.parse(tok))
            elif tok in ("knot", "pattern") or _WORD.match(tok):
                raise UnknownDirective(f"unexpected directive {tok!r}", lineno, tcol)
            else:
                raise FrontSyntaxError(f"unknown token {tok!r}", lineno, tcol)
    if header is None:
        raise FrontSyntaxError("missing 'knot' or 'pattern' header", last_line + 1, 1)
    return FrontWord(events, seam, orientations)


def render_text(word: FrontWord, per_line: int = 20) -> bytes:
    lines = ["knot" if word.is_closed else f"pattern {word.seam}"]
    toks = [f"{'LRX'[k]}{lv}" for k, lv in zip(word.kinds.tolist(), word.levels.tolist())]
    for i in range(0, len(toks), per_line):
        lines.append(" ".join(toks[i:i + per_line]))
    for comp, d in word.orientations:
        lines.append(f"orient {comp} {'R' if d == RIGHTWARD else 'L'}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def load(path) -> FrontWord:
    with open(path, "rb") as fh:
        return parse(fh.read())


def dump(word: FrontWord, path):
    with open(path, "wb") as fh:
        fh.write(render_text(word))

"""Event-word encoding of Legendrian front projections.

A front is read left to right as a sequence of columns.  Between two
consecutive columns exactly one elementary event happens:

* ``L<i>``  a left cusp is born; two new strands appear at levels i, i+1
* ``R<i>``  the strands at levels i, i+1 meet in a right cusp and disappear
* ``X<i>``  the strands at levels i, i+1 cross and exchange levels

Level 1 is the lowest strand (smallest z).  No over/under data is stored:
in a front the strand of lesser slope is in front, so at ``X<i>`` the strand
that descends from level i+1 to level i is the over strand.

A *closed* word starts and ends with no strands and describes a knot or
link in R^3.  An *annular* word starts and ends with ``seam`` strands at
levels 1..seam; the right edge is glued to the left edge level by level,
giving a pattern in the solid torus.

Strands (arcs of the front between cusps, cut at the seam) are numbered in
order of first appearance: seam strands first, then the lower and upper
strand of each left cusp in event order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

__all__ = [
    "Kind", "Event", "FrontWord", "OrientedFront", "ValidationReport",
    "FrontError", "InvalidFront", "OverrideOutOfRange",
    "RIGHTWARD", "LEFTWARD", "validate", "trace_components",
]

RIGHTWARD = 1
LEFTWARD = -1


class FrontError(ValueError):
    """Base class for malformed front data."""


class InvalidFront(FrontError):
    pass


class OverrideOutOfRange(FrontError):
    pass


class Kind(enum.IntEnum):
    LEFT_CUSP = 0
    RIGHT_CUSP = 1
    CROSSING = 2

    @property
    def letter(self):
        return "LRX"[self]


_LETTER_TO_KIND = {"L": Kind.LEFT_CUSP, "R": Kind.RIGHT_CUSP, "X": Kind.CROSSING}
_DELTA = np.array([2, -2, 0])


class Event(NamedTuple):
    kind: Kind
    level: int

    def __str__(self):
        return f"{Kind(self.kind).letter}{self.level}"

    @classmethod
    def parse(cls, token: str) -> "Event":
        kind = _LETTER_TO_KIND.get(token[:1])
        if kind is None or not token[1:].isdigit() or int(token[1:]) < 1:
            raise ValueError(f"not an event token: {token!r}")
        return cls(kind, int(token[1:]))


def _direction(value) -> int:
    if value in (RIGHTWARD, "R", "r", "right", "Rightward"):
        return RIGHTWARD
    if value in (LEFTWARD, "L", "l", "left", "Leftward"):
        return LEFTWARD
    raise ValueError(f"not a direction: {value!r}")


class FrontWord:
    """An immutable sequence of front events, closed or annular.

    Events are held as two read-only integer arrays (``kinds`` and
    ``levels``) so that words with millions of events stay cheap.
    ``orientations`` is a sorted tuple of ``(component, direction)``
    overrides applied after tracing.
    """

    __slots__ = ("seam", "kinds", "levels", "orientations")

    def __init__(self, events: Iterable = (), seam: int | None = None,
                 orientations: Iterable = ()):
        if isinstance(events, str):
            events = events.split()
        kinds, levels = [], []
        for ev in events:
            if isinstance(ev, str):
                ev = Event.parse(ev)
            kinds.append(int(ev[0]))
            levels.append(int(ev[1]))
        self._init(np.array(kinds, dtype=np.int8),
                   np.array(levels, dtype=np.int64), seam, orientations)

    def _init(self, kinds, levels, seam, orientations):
        if seam is not None and seam < 0:
            raise ValueError("seam strand count must be non-negative")
        kinds = np.ascontiguousarray(kinds, dtype=np.int8)
        levels = np.ascontiguousarray(levels, dtype=np.int64)
        if kinds.shape != levels.shape or kinds.ndim != 1:
            raise ValueError("kinds and levels must be 1-d arrays of equal length")
        kinds.flags.writeable = False
        levels.flags.writeable = False
        merged = {}
        for comp, d in orientations:
            merged[int(comp)] = _direction(d)
        object.__setattr__(self, "seam", seam)
        object.__setattr__(self, "kinds", kinds)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "orientations", tuple(sorted(merged.items())))

    def __setattr__(self, name, value):
        raise AttributeError("FrontWord is immutable")

    @classmethod
    def from_arrays(cls, kinds, levels, seam=None, orientations=()):
        word = cls.__new__(cls)
        word._init(kinds, levels, seam, orientations)
        return word

    @classmethod
    def knot(cls, events="", orientations=()):
        return cls(events, None, orientations)

    @classmethod
    def pattern(cls, seam, events="", orientations=()):
        return cls(events, seam, orientations)

    @property
    def is_closed(self):
        return self.seam is None

    @property
    def initial_strands(self):
        return 0 if self.seam is None else self.seam

    @property
    def events(self):
        return tuple(Event(Kind(k), int(l)) for k, l in zip(self.kinds.tolist(), self.levels.tolist()))

    def __len__(self):
        return len(self.kinds)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return self.events[index]
        return Event(Kind(int(self.kinds[index])), int(self.levels[index]))

    def __iter__(self):
        return iter(self.events)

    def __eq__(self, other):
        if not isinstance(other, FrontWord):
            return NotImplemented
        return (self.seam == other.seam and self.orientations == other.orientations
                and np.array_equal(self.kinds, other.kinds)
                and np.array_equal(self.levels, other.levels))

    def __hash__(self):
        return hash((self.seam, self.orientations, self.kinds.tobytes(), self.levels.tobytes()))

    def tokens(self):
        return " ".join(str(e) for e in self.events)

    def __repr__(self):
        body = self.tokens()
        if len(body) > 60:
            body = body[:57] + "..."
        head = "knot(" if self.is_closed else f"pattern({self.seam}, "
        extra = f", orientations={self.orientations}" if self.orientations else ""
        return f"FrontWord.{head}{body!r}{extra})"

    def with_orientations(self, overrides):
        """Copy of the word with its orientation overrides replaced."""
        return FrontWord.from_arrays(self.kinds, self.levels, self.seam, overrides)

    def with_events(self, kinds, levels):
        return FrontWord.from_arrays(kinds, levels, self.seam, self.orientations)

    def strand_counts(self):
        """Number of strands in every column (length ``len(self) + 1``)."""
        deltas = _DELTA[np.clip(self.kinds, 0, 2)] if len(self) else np.zeros(0, dtype=np.int64)
        return self.initial_strands + np.concatenate(([0], np.cumsum(deltas)))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def validate(word: FrontWord) -> ValidationReport:
    """Replay the word and report the first event whose precondition fails."""
    n = len(word)
    counts = word.strand_counts()
    if n:
        before = counts[:-1]
        kinds, levels = word.kinds, word.levels
        bad_kind = (kinds < 0) | (kinds > 2)
        nonpos = levels < 1
        left_bad = (kinds == Kind.LEFT_CUSP) & (levels > before + 1)
        right_bad = (kinds == Kind.RIGHT_CUSP) & (levels + 1 > before)
        cross_bad = (kinds == Kind.CROSSING) & (levels + 1 > before)
        reasons = [
            (bad_kind, "unknown event kind"),
            (nonpos, "level must be positive"),
            (left_bad, "left cusp level above the strand stack"),
            (right_bad, "right cusp needs two strands"),
            (cross_bad, "crossing needs two strands"),
        ]
        first, why = n, ""
        for mask, text in reasons:
            hits = np.flatnonzero(mask)
            if hits.size and hits[0] < first:
                first, why = int(hits[0]), text
        if first < n:
            return ValidationReport(False, first, why)
    if counts[-1] != word.initial_strands:
        return ValidationReport(
            False, n, f"strand count ends at {int(counts[-1])}, expected {word.initial_strands}")
    return ValidationReport(True)


@dataclass(frozen=True, eq=False)
class Replay:
    """Raw strand bookkeeping from one pass over a word."""
    n_strands: int
    born: np.ndarray          # event index of the creating left cusp, -1 for seam strands
    born_level: np.ndarray    # level at creation (lower/upper cusp branch, or seam level)
    died: np.ndarray          # event index of the closing right cusp, len(word) at the seam
    left_link: np.ndarray     # strand glued at the left end
    right_link: np.ndarray    # strand glued at the right end
    left_is_cusp: np.ndarray
    right_is_cusp: np.ndarray
    cross_index: np.ndarray   # event index of every crossing
    over: np.ndarray          # descending (front) strand of every crossing
    under: np.ndarray
    lcusp_lower: np.ndarray
    lcusp_upper: np.ndarray
    rcusp_lower: np.ndarray
    rcusp_upper: np.ndarray
    probes: tuple = ()


def replay(word: FrontWord, probes=()) -> Replay:
    """Follow every strand through the word.

    ``probes`` is a sequence of ``(column, level)`` positions; the strand
    occupying each one is reported in ``Replay.probes``.  Column ``c`` is
    the state after the first ``c`` events.
    """
    report = validate(word)
    if not report:
        raise InvalidFront(f"event {report.index}: {report.reason}")
    kinds = word.kinds.tolist()
    levels = word.levels.tolist()
    s0 = word.initial_strands
    alive = list(range(s0))
    born = [-1] * s0
    born_level = list(range(1, s0 + 1))
    died = [len(kinds)] * s0
    left_link = [-1] * s0
    right_link = [-1] * s0
    left_cusp = [False] * s0
    right_cusp = [False] * s0
    xi, xo, xu = [], [], []
    lcl, lcu, rcl, rcu = [], [], [], []
    nxt = s0

    order = sorted(range(len(probes)), key=lambda j: probes[j][0])
    answers = [None] * len(probes)
    stops = [probes[j][0] for j in order] + [len(kinds)]
    pos = 0
    pj = 0
    for stop in stops:
        if stop < pos or stop > len(kinds):
            raise ValueError(f"probe column {stop} outside 0..{len(kinds)}")
        for idx in range(pos, stop):
            k = kinds[idx]
            i = levels[idx] - 1
            if k == 2:
                a = alive[i]
                b = alive[i + 1]
                alive[i] = b
                alive[i + 1] = a
                xi.append(idx)
                xo.append(b)
                xu.append(a)
            elif k == 0:
                lo = nxt
                hi = nxt + 1
                nxt += 2
                alive[i:i] = (lo, hi)
                born += (idx, idx)
                born_level += (i + 1, i + 2)
                died += (-1, -1)
                left_link += (hi, lo)
                right_link += (-1, -1)
                left_cusp += (True, True)
                right_cusp += (False, False)
                lcl.append(lo)
                lcu.append(hi)
            else:
                lo = alive[i]
                hi = alive[i + 1]
                del alive[i:i + 2]
                died[lo] = idx
                died[hi] = idx
                right_link[lo] = hi
                right_link[hi] = lo
                right_cusp[lo] = right_cusp[hi] = True
                rcl.append(lo)
                rcu.append(hi)
        pos = stop
        while pj < len(order) and probes[order[pj]][0] == stop:
            col, lev = probes[order[pj]]
            if not 1 <= lev <= len(alive):
                raise ValueError(f"no strand at level {lev} in column {col}")
            answers[order[pj]] = alive[lev - 1]
            pj += 1
    for lev, s in enumerate(alive):
        right_link[s] = lev
        left_link[lev] = s

    def arr(x):
        return np.array(x, dtype=np.int64)

    return Replay(nxt, arr(born), arr(born_level), arr(died), arr(left_link), arr(right_link),
                  np.array(left_cusp, dtype=bool), np.array(right_cusp, dtype=bool),
                  arr(xi), arr(xo), arr(xu), arr(lcl), arr(lcu), arr(rcl), arr(rcu),
                  tuple(answers))


@dataclass(frozen=True, eq=False)
class OrientedFront:
    """A front word together with a direction for every strand.

    ``directions[s]`` is +1 (rightward) or -1 (leftward) for strand ``s``;
    ``components[c]`` lists the strands of component ``c`` in the order they
    are traversed.  Component ``c``'s reference strand is ``components[c][0]``,
    the earliest strand of that component.
    """
    word: FrontWord
    directions: np.ndarray
    components: tuple
    component_of: np.ndarray
    trace: Replay = field(repr=False)

    @property
    def n_components(self):
        return len(self.components)

    def reference_strand(self, component):
        return self.components[component][0]

    @property
    def crossings(self):
        """``(event_index, over_strand, under_strand)`` for every crossing."""
        t = self.trace
        return list(zip(t.cross_index.tolist(), t.over.tolist(), t.under.tolist()))

    @property
    def winding(self):
        """Signed count of seam strands, or None for closed fronts."""
        if self.word.is_closed:
            return None
        return int(self.directions[: self.word.seam].sum())

    def reoriented(self, overrides) -> "OrientedFront":
        """Same front with different orientation overrides (no replay)."""
        word = self.word.with_orientations(overrides)
        return _orient(word, self.trace)


def _orient(word: FrontWord, trace: Replay) -> OrientedFront:
    n = trace.n_strands
    left_link = trace.left_link.tolist()
    right_link = trace.right_link.tolist()
    left_cusp = trace.left_is_cusp.tolist()
    right_cusp = trace.right_is_cusp.tolist()
    direction = [0] * n
    comp_of = [-1] * n
    components = []
    for start in range(n):
        if comp_of[start] != -1:
            continue
        c = len(components)
        cycle = []
        s, d = start, RIGHTWARD
        while comp_of[s] == -1:
            comp_of[s] = c
            direction[s] = d
            cycle.append(s)
            if d == RIGHTWARD:
                nxt, flip = right_link[s], right_cusp[s]
            else:
                nxt, flip = left_link[s], left_cusp[s]
            s, d = nxt, (-d if flip else d)
        components.append(cycle)
    direction = np.array(direction, dtype=np.int8)
    comp_of = np.array(comp_of, dtype=np.int64)
    for c, d in word.orientations:
        if not 0 <= c < len(components):
            raise OverrideOutOfRange(
                f"orientation override names component {c}, front has {len(components)}")
        if d != RIGHTWARD:
            direction[comp_of == c] *= -1
            cyc = components[c]
            components[c] = [cyc[0]] + cyc[:0:-1]
    return OrientedFront(word, direction, tuple(tuple(c) for c in components), comp_of, trace)


def trace_components(word: FrontWord) -> OrientedFront:
    """Split a valid word into oriented components.

    By default the earliest strand of each component points rightward; the
    word's orientation overrides then set that strand's direction.
    """
    return _orient(word, replay(word))


def strands_at(word: FrontWord, column: int) -> list:
    """Strand ids present in ``column``, bottom to top."""
    counts = word.strand_counts()
    probes = [(column, lev) for lev in range(1, int(counts[column]) + 1)]
    return list(replay(word, probes).probes)

"""Legendrian Reidemeister moves on event words.

Variant catalog (``k`` is ``MoveSite.level``):

R1, a cusp pair with one crossing (a "fish") on the strand at level k::

    add-up / del-up        (nothing)  <->  L(k+1) X(k) R(k+1)
    add-down / del-down    (nothing)  <->  L(k) X(k+1) R(k)

R2, a strand slides across a cusp::

    left-desc   L(k+1)  <->  L(k) X(k+1) X(k)       strand above the cusp sinks through it
    left-asc    L(k)    <->  L(k+1) X(k) X(k+1)     strand below the cusp rises through it
    right-desc  R(k)    <->  X(k+1) X(k) R(k+1)
    right-asc   R(k+1)  <->  X(k) X(k+1) R(k)

R3, a strand passes a crossing::

    lower / upper   X(k) X(k+1) X(k)  <->  X(k+1) X(k) X(k+1)

C, planar isotopy: two adjacent events acting on disjoint strands swap,
with the level shift caused by the other event.

Two plane crossings ``X(k) X(k)`` are *not* removable in a front, so the
smooth Reidemeister II move has no counterpart here.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .front import FrontWord, Kind, RIGHTWARD, _orient, replay, trace_components

__all__ = ["MoveSite", "StaleSite", "find_sites", "apply", "apply_tracked", "inverse_site",
           "perturb"]

L, R, X = int(Kind.LEFT_CUSP), int(Kind.RIGHT_CUSP), int(Kind.CROSSING)
_WIDTH = {L: (0, 2), R: (2, 0), X: (2, 2)}


class StaleSite(ValueError):
    pass


@dataclass(frozen=True, order=True)
class MoveSite:
    move: str
    index: int
    variant: str
    level: int


# variant -> (old events, new events) as functions of k
_RULES = {
    ("R1", "add-up"): (lambda k: [], lambda k: [(L, k + 1), (X, k), (R, k + 1)]),
    ("R1", "add-down"): (lambda k: [], lambda k: [(L, k), (X, k + 1), (R, k)]),
    ("R2", "left-desc-add"): (lambda k: [(L, k + 1)], lambda k: [(L, k), (X, k + 1), (X, k)]),
    ("R2", "left-asc-add"): (lambda k: [(L, k)], lambda k: [(L, k + 1), (X, k), (X, k + 1)]),
    ("R2", "right-desc-add"): (lambda k: [(R, k)], lambda k: [(X, k + 1), (X, k), (R, k + 1)]),
    ("R2", "right-asc-add"): (lambda k: [(R, k + 1)], lambda k: [(X, k), (X, k + 1), (R, k)]),
    ("R3", "lower"): (lambda k: [(X, k), (X, k + 1), (X, k)],
                      lambda k: [(X, k + 1), (X, k), (X, k + 1)]),
}
for (_m, _v), (_old, _new) in list(_RULES.items()):
    if _v.endswith("add"):
        _RULES[(_m, _v[:-3] + "del")] = (_new, _old)
    elif _v.startswith("add"):
        _RULES[(_m, "del" + _v[3:])] = (_new, _old)
_RULES[("R3", "upper")] = (_RULES[("R3", "lower")][1], _RULES[("R3", "lower")][0])

_INVERSE = {}
for (_m, _v) in _RULES:
    if _m == "R3":
        _INVERSE[(_m, _v)] = "upper" if _v == "lower" else "lower"
    elif "add" in _v:
        _INVERSE[(_m, _v)] = _v.replace("add", "del")
    else:
        _INVERSE[(_m, _v)] = _v.replace("del", "add")


def _commute(e1, e2):
    """Swapped pair for two adjacent events on disjoint strands, else None."""
    (k1, a), (k2, b) = e1, e2
    in1, out1 = _WIDTH[k1]
    in2, out2 = _WIDTH[k2]
    if b + in2 <= a:
        return (k2, b), (k1, a + out2 - in2)
    if b >= a + out1:
        return (k2, b - (out1 - in1)), (k1, a)
    return None


def _events(word):
    return list(zip(word.kinds.tolist(), word.levels.tolist()))


def find_sites(word: FrontWord) -> list:
    """Every applicable move site, in a fixed order."""
    ev = _events(word)
    counts = word.strand_counts().tolist()
    sites = []
    for c, cnt in enumerate(counts):
        for k in range(1, cnt + 1):
            sites.append(MoveSite("R1", c, "add-up", k))
            sites.append(MoveSite("R1", c, "add-down", k))
    n = len(ev)
    for j, (kind, lev) in enumerate(ev):
        before = counts[j]
        if kind == L:
            if lev >= 2:
                sites.append(MoveSite("R2", j, "left-desc-add", lev - 1))
            if lev <= before:
                sites.append(MoveSite("R2", j, "left-asc-add", lev))
        elif kind == R:
            if lev + 2 <= before:
                sites.append(MoveSite("R2", j, "right-desc-add", lev))
            if lev >= 2:
                sites.append(MoveSite("R2", j, "right-asc-add", lev - 1))
        if j + 2 < n:
            window = ev[j:j + 3]
            for (move, variant), (old, _new) in _RULES.items():
                if variant.endswith("add") or variant.startswith("add"):
                    continue
                k = _guess_level(move, variant, window)
                if k is not None and k >= 1 and old(k) == window:
                    sites.append(MoveSite(move, j, variant, k))
        if j + 1 < n and _commute(ev[j], ev[j + 1]) is not None:
            sites.append(MoveSite("C", j, "swap", 0))
    return sites


def _guess_level(move, variant, window):
    """The k for which ``window`` could match the removal/R3 rule."""
    first_level = window[0][1]
    if move == "R3":
        return first_level if variant == "lower" else first_level - 1
    if variant in ("del-up", "left-desc-del"):
        return first_level - 1 if variant == "del-up" else first_level
    if variant in ("del-down", "left-asc-del"):
        return first_level if variant == "del-down" else first_level - 1
    if variant == "right-desc-del":
        return first_level - 1
    if variant == "right-asc-del":
        return first_level
    return None


def _rewrite(word, site):
    ev = _events(word)
    j = site.index
    if site.move == "C":
        if j + 1 >= len(ev):
            raise StaleSite(f"no event pair at {j}")
        swapped = _commute(ev[j], ev[j + 1])
        if swapped is None:
            raise StaleSite(f"events {j}, {j + 1} do not commute")
        return j, 2, list(swapped)
    rule = _RULES.get((site.move, site.variant))
    if rule is None:
        raise StaleSite(f"unknown move {site.move}/{site.variant}")
    old = rule[0](site.level)
    new = rule[1](site.level)
    if site.level < 1 or ev[j:j + len(old)] != old:
        raise StaleSite(f"{site} does not match the word")
    if site.move == "R1" and not old:
        counts = word.strand_counts()
        if not 0 <= j < len(counts) or site.level > counts[j]:
            raise StaleSite(f"no strand at level {site.level} in column {j}")
    if site.move == "R2" and site.variant in ("left-asc-add", "right-desc-add"):
        need = site.level if site.variant == "left-asc-add" else site.level + 2
        if word.strand_counts()[j] < need:
            raise StaleSite(f"{site} has no strand to slide")
    return j, len(old), new


def inverse_site(site: MoveSite) -> MoveSite:
    """The site in the moved word that undoes ``site``."""
    if site.move == "C":
        return site
    return MoveSite(site.move, site.index, _INVERSE[(site.move, site.variant)], site.level)


def apply_tracked(word: FrontWord, site: MoveSite):
    """Apply a move; return the new word and the old-to-new component map.

    Orientation overrides are recomputed so that every component keeps its
    direction through the move.
    """
    start, old_len, new = _rewrite(word, site)
    kinds = word.kinds.tolist()
    levels = word.levels.tolist()
    kinds[start:start + old_len] = [k for k, _ in new]
    levels[start:start + old_len] = [lv for _, lv in new]
    moved = FrontWord.from_arrays(np.array(kinds, dtype=np.int8),
                                  np.array(levels, dtype=np.int64), word.seam)

    counts = word.strand_counts()
    end = start + old_len
    delta = len(new) - old_len
    edge = [(start, lv) for lv in range(1, int(counts[start]) + 1)]
    edge += [(end, lv) for lv in range(1, int(counts[end]) + 1)]
    t = replay(word, edge)
    old_front = _orient(word, t)
    # where a strand can be found in both words: the move's boundary columns,
    # or the birth column of a strand created outside the move
    where = {}
    for (col, lv), s in zip(edge, t.probes):
        where.setdefault(s, (col if col == start else start + len(new), lv))
    probes, wanted = [], []
    for comp in old_front.components:
        for s in comp:
            born = int(t.born[s])
            if s in where:
                pos = where[s]
            elif born < start:
                pos = (born + 1, int(t.born_level[s]))
            elif born >= end:
                pos = (born + 1 + delta, int(t.born_level[s]))
            else:
                continue
            probes.append(pos)
            wanted.append(int(old_front.directions[s]))
            break
        else:
            raise AssertionError("component lives entirely inside the move")
    trace = replay(moved, probes)
    default = _orient(moved, trace)
    overrides, comp_map = {}, {}
    for c, (s, w) in enumerate(zip(trace.probes, wanted)):
        nc = int(default.component_of[s])
        comp_map[c] = nc
        if default.directions[s] != w:
            overrides[nc] = -RIGHTWARD
    return moved.with_orientations(overrides.items()), comp_map


def apply(word: FrontWord, site: MoveSite) -> FrontWord:
    return apply_tracked(word, site)[0]


def perturb(word: FrontWord, steps: int, seed: int) -> FrontWord:
    """Apply ``steps`` moves, each chosen uniformly among the available sites."""
    rng = random.Random(seed)
    for _ in range(steps):
        sites = find_sites(word)
        if not sites:
            break
        word = apply(word, rng.choice(sites))
    return word

"""Legendrian satellites built directly on event words.

The n-copy of a closed front is the union of n translates of it in the z
direction, copy j sitting j-1 levels above copy 1 everywhere.  In the word
this becomes a block substitution:

* a crossing becomes an n x n bundle crossing (n**2 crossings, every copy
  of the descending strand in front),
* a cusp becomes n stacked cusps plus the n(n-1)/2 crossings in which the
  branches of neighbouring copies pass each other near the cusp.

Those cusp crossings are what make the copies Legendrian push-offs of each
other, so consecutive copies link tb(K) times and the satellite of a pattern
P satisfies ``tb(P(K)) = w(P)**2 tb(K) + tb(P)`` exactly.

The pattern is spliced into the bundle of one rightward companion strand,
pattern seam level i meeting copy i.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .front import (FrontError, FrontWord, Kind, OrientedFront, RIGHTWARD, _orient,
                    replay, trace_components)
from .invariants import compute

__all__ = ["SpliceSpec", "SpliceMismatch", "TwistedSatelliteWarning", "parallel_copies",
           "admissible_cuts", "legendrian_satellite", "check_composition",
           "CompositionCheck", "block_sizes", "satellite"]


class SpliceMismatch(FrontError):
    pass


class TwistedSatelliteWarning(UserWarning):
    """The companion has tb != 0, so the result is a twisted satellite."""


@lru_cache(maxsize=None)
def _templates(n):
    """Relative (kinds, levels) blocks for cusps and crossings of an n-copy.

    Levels are offsets from the lowest copy level of the event's bundle.
    """
    L, R, X = int(Kind.LEFT_CUSP), int(Kind.RIGHT_CUSP), int(Kind.CROSSING)
    left = [(L, 2 * j) for j in range(n)]
    # sort  A1 B1 A2 B2 ... into  A1..An B1..Bn  by sinking each lower branch
    for j in range(2, n + 1):
        left += [(X, lev) for lev in range(2 * j - 3, j - 2, -1)]
    right = []
    # interleave  A1..An B1..Bn  into  A1 B1 ... An Bn  by sinking each upper branch
    for m in range(1, n + 1):
        right += [(X, lev) for lev in range(n + m - 2, 2 * m - 2, -1)]
    right += [(R, 2 * j) for j in range(n - 1, -1, -1)]
    cross = []
    for u in range(1, n + 1):
        cross += [(X, lev) for lev in range(n + u - 2, u - 2, -1)]
    out = {}
    for kind, block in ((L, left), (R, right), (X, cross)):
        arr = np.array(block, dtype=np.int64).reshape(-1, 2)
        k = arr[:, 0].astype(np.int8)
        lv = arr[:, 1]
        k.flags.writeable = False
        lv.flags.writeable = False
        out[kind] = (k, lv)
    return out


def block_sizes(word: FrontWord, n: int) -> np.ndarray:
    """Number of n-copy events produced by each event of ``word``."""
    cusp = n + n * (n - 1) // 2
    return np.where(word.kinds == Kind.CROSSING, n * n, cusp).astype(np.int64)


def _copy_arrays(companion: FrontWord, n: int):
    tpl = _templates(n)
    kinds, levels = [], []
    for k, lev in zip(companion.kinds.tolist(), companion.levels.tolist()):
        tk, tl = tpl[k]
        kinds.append(tk)
        levels.append(tl + ((lev - 1) * n + 1))
    if not kinds:
        return np.zeros(0, dtype=np.int8), np.zeros(0, dtype=np.int64)
    return np.concatenate(kinds), np.concatenate(levels)


def parallel_copies(companion: FrontWord, n: int) -> FrontWord:
    """The n-copy of a closed front; every copy keeps the companion's orientation."""
    if not companion.is_closed:
        raise ValueError("parallel copies are taken of closed fronts")
    if n < 1:
        raise ValueError("need at least one copy")
    if n == 1:
        return companion
    kinds, levels = _copy_arrays(companion, n)
    # copies of component c are components c*n .. c*n+n-1, in copy order
    overrides = [(c * n + j, d) for c, d in companion.orientations for j in range(n)]
    return FrontWord.from_arrays(kinds, levels, None, overrides)


def admissible_cuts(companion: FrontWord) -> list:
    """All ``(column, level)`` positions of rightward companion strands."""
    front = trace_components(companion)
    counts = companion.strand_counts().tolist()
    probes = [(c, lev) for c, cnt in enumerate(counts) for lev in range(1, cnt + 1)]
    strands = replay(companion, probes).probes
    return [pos for pos, s in zip(probes, strands) if front.directions[s] == RIGHTWARD]


@dataclass(frozen=True)
class SpliceSpec:
    pattern: FrontWord
    companion: FrontWord
    cut_index: int | None = None
    level: int | None = None


def _resolve_cut(companion, cut_index, level):
    cuts = admissible_cuts(companion)
    if cut_index is None:
        if not cuts:
            raise SpliceMismatch("companion has no rightward strand")
        return cuts[0]
    here = [lev for c, lev in cuts if c == cut_index]
    if level is None:
        if not here:
            raise SpliceMismatch(f"no rightward companion strand in column {cut_index}")
        return cut_index, here[0]
    if level not in here:
        raise SpliceMismatch(f"column {cut_index} level {level} is not a rightward strand")
    return cut_index, level


def legendrian_satellite(pattern, companion=None, cut_index=None, level=None) -> OrientedFront:
    """Splice an annular ``pattern`` into the n-copy of a knot front.

    Accepts either a :class:`SpliceSpec` or ``(pattern, companion, ...)``.
    Orientations of the result follow the pattern's orientation.
    """
    if isinstance(pattern, SpliceSpec):
        pattern, companion, cut_index, level = (pattern.pattern, pattern.companion,
                                                pattern.cut_index, pattern.level)
    if pattern.is_closed or pattern.seam < 1:
        raise ValueError("pattern must be annular with at least one seam strand")
    if not companion.is_closed:
        raise ValueError("companion must be a closed front")
    cfront = trace_components(companion)
    if cfront.n_components != 1:
        raise SpliceMismatch("companion must be a knot")
    ctb = compute(cfront).tb
    if ctb != 0:
        warnings.warn(f"companion has tb = {ctb}; the smooth type is the {ctb}-twisted satellite",
                      TwistedSatelliteWarning, stacklevel=2)
    column, level = _resolve_cut(companion, cut_index, level)
    n = pattern.seam

    ck, cl = _copy_arrays(companion, n)
    p = int(block_sizes(companion, n)[:column].sum())
    q = (level - 1) * n
    kinds = np.concatenate((ck[:p], pattern.kinds, ck[p:]))
    levels = np.concatenate((cl[:p], pattern.levels + q, cl[p:]))
    word = FrontWord.from_arrays(kinds, levels)

    pfront = trace_components(pattern)
    ptrace = pfront.trace
    probes, wanted = [], []
    for comp in pfront.components:
        ref = comp[0]
        if ref < n:
            probes.append((p, q + ref + 1))
        else:
            probes.append((p + int(ptrace.born[ref]) + 1, q + int(ptrace.born_level[ref])))
        wanted.append(int(pfront.directions[ref]))
    trace = replay(word, probes)
    default = _orient(word, trace)
    overrides = {}
    for s, w in zip(trace.probes, wanted):
        if default.directions[s] != w:
            overrides[int(default.component_of[s])] = -RIGHTWARD
    return _orient(word.with_orientations(overrides.items()), trace)


satellite = legendrian_satellite


@dataclass(frozen=True)
class CompositionCheck:
    winding: int
    tb_direct: int
    tb_formula: int
    rot_direct: int
    rot_formula: int

    @property
    def ok(self):
        return self.tb_direct == self.tb_formula and self.rot_direct == self.rot_formula


def check_composition(pattern, companion, cut_index=None, level=None) -> CompositionCheck:
    """Compare the satellite's invariants with w^2 tb(K) + tb(P) and w rot(K) + rot(P)."""
    prep = compute(trace_components(pattern))
    krep = compute(trace_components(companion))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TwistedSatelliteWarning)
        sat = compute(legendrian_satellite(pattern, companion, cut_index, level))
    w = prep.winding
    return CompositionCheck(w, sat.tb, w * w * krep.tb + prep.tb,
                            sat.rot, w * krep.rot + prep.rot)

"""Reproducible checks of every headline number, as a table.

Each check returns ``(name, expected, computed, ok)`` rows.  Everything is
deterministic: randomised checks use fixed seeds.
"""
from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass

from .bounds import propagate
from .families import certify, generate
from .front import FrontWord
from .invariants import compute, invariants_of
from .moves import apply_tracked, find_sites, perturb
from .proofs import (clasp_graph, cable_graph, link_tau_graph, reorientation_bound,
                     split_verdicts, link_graph)
from .satellite import TwistedSatelliteWarning, block_sizes, check_composition, legendrian_satellite

__all__ = ["Row", "CHECKS", "run_checks", "format_table", "composition_cases", "move_chain"]


@dataclass(frozen=True)
class Row:
    check: str
    expected: str
    computed: str
    ok: bool
    seconds: float = 0.0


def _row(check, expected, computed, seconds=0.0):
    return Row(check, str(expected), str(computed), expected == computed, seconds)


def captions():
    rows = []
    for name in ("twist-pattern", "trefoil", "twist-satellite", "W", "J", "K"):
        c = certify(name)
        rows.append(_row(f"caption {name} (tb, rot, winding)",
                         tuple(e for _, e, _ in c.rows[:3]), tuple(v for _, _, v in c.rows[:3])))
    for name, lo in (("P", 1), ("Q", 1), ("L", 0)):
        bad = [i for i in range(lo, 31) if not certify(name, i).ok]
        rows.append(_row(f"caption {name}_i, i = {lo}..30", "all match",
                         "all match" if not bad else f"mismatch at {bad}"))
    return rows


def _pairs():
    patterns = [generate("twist-pattern"), generate("W")]
    patterns += [generate("P", i) for i in range(1, 5)]
    patterns += [generate("Q", i) for i in range(1, 4)]
    patterns += [generate("L", i) for i in range(0, 3)]
    companions = [generate(n) for n in ("unknot", "trefoil", "J", "K")]
    return [(p, k) for p in patterns for k in companions]


def composition_cases(n=200, seed=2024):
    """``n`` (perturbed pattern, perturbed companion) pairs from a fixed seed."""
    rng = random.Random(seed)
    pairs = _pairs()
    out = []
    for _ in range(n):
        p, k = rng.choice(pairs)
        p = perturb(p, rng.randrange(0, 6), rng.randrange(2 ** 32))
        k = perturb(k, rng.randrange(0, 6), rng.randrange(2 ** 32))
        out.append((p, k))
    return out


def composition():
    bad_pairs = [(p, k) for p, k in _pairs() if not check_composition(p, k).ok]
    bad_rand = [j for j, (p, k) in enumerate(composition_cases())
                if not check_composition(p, k).ok]
    return [_row("composition law on generator pairs", 0, len(bad_pairs)),
            _row("composition law on 200 randomised pairs", 0, len(bad_rand))]


_MOVE_BASES = ("L1 R1", "L1 L3 X2 X2 X2 R1 R1", "L1 L1 R2 L3 X2 X2 X2 R1 R1")


def move_chain(total=1000, seed=7, restart=30):
    """Yield ``(before, after, component map)`` for ``total`` random moves.

    Chains restart from small base words every ``restart`` moves so the words
    stay small.
    """
    rng = random.Random(seed)
    bases = [FrontWord.knot(b) for b in _MOVE_BASES]
    bases += [generate("L", 1), generate("W"), FrontWord.pattern(3, "X1 X2 X1"),
              generate("Q", 2), FrontWord.knot("L1 L1 X2 X2 R1 R1")]
    word = None
    for step in range(total):
        if step % restart == 0:
            word = bases[(step // restart) % len(bases)]
        site = rng.choice(find_sites(word))
        new, cmap = apply_tracked(word, site)
        yield word, new, cmap, site
        word = new


def _same(a, b, cmap):
    if a.components != b.components:
        return False
    for c, nc in cmap.items():
        if a.component_tb[c] != b.component_tb[nc] or a.component_rot[c] != b.component_rot[nc]:
            return False
        for d, nd in cmap.items():
            if a.linking[c][d] != b.linking[nc][nd]:
                return False
    return a.tb == b.tb and a.rot == b.rot


def reidemeister():
    bad = 0
    kinds = set()
    for old, new, cmap, site in move_chain():
        kinds.add(site.move)
        if not _same(invariants_of(old), invariants_of(new), cmap):
            bad += 1
    return [_row("invariants unchanged over 1000 moves", 0, bad),
            _row("move kinds exercised", "C R1 R2 R3", " ".join(sorted(kinds)))]


def cables_and_clasps(n=20):
    fp, fq = propagate(cable_graph(n)), propagate(clasp_graph(n))
    rows = []
    for tag, fix, nid in (("P_i(K)", fp, "P"), ("Q_i(K)", fq, "Q")):
        bad = [i for i in range(1, n + 1)
               if not (fix.g4(f"{nid}{i}").exact and fix.g4(f"{nid}{i}").lo == i
                       and fix.tau(f"{nid}{i}").exact and fix.tau(f"{nid}{i}").lo == i)]
        rows.append(_row(f"g4 = tau = i for {tag}, i = 1..{n}", [], bad))
    return rows


def links(n=20):
    fix = propagate(link_graph(n))
    g4 = [(fix.g4(f"l{i}").lo, fix.g4(f"l{i}").hi) for i in range(n + 1)]
    verdicts = split_verdicts(n)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TwistedSatelliteWarning)
        K = generate("K")
        lk = [compute(legendrian_satellite(generate("L", i), K)).linking[0][1]
              for i in range(n + 1)]
    return [_row(f"g4(l_i) = [i, i], i = 0..{n}", [(i, i) for i in range(n + 1)], g4),
            _row("split hypothesis contradicted for every l_i", n + 1,
                 sum(v.contradiction for v in verdicts)),
            _row("linking number of l_i components", [0] * (n + 1), lk)]


def links_tau(n=20):
    fix = propagate(link_tau_graph(n))
    tau = [(fix.tau(f"l{i}").lo, fix.tau(f"l{i}").hi) for i in range(n + 1)]
    return [_row(f"tau(l_i) = [i+1, i+1], i = 0..{n}",
                 [(i + 1, i + 1) for i in range(n + 1)], tau)]


def reorientation(n=20):
    lows = [reorientation_bound(i).lower for i in range(n + 1)]
    return [_row(f"g4(l'_i) >= 2i+1, i = 0..{n}", [2 * i + 1 for i in range(n + 1)], lows),
            _row("g4(l'_i) lower bound exceeds g4(l_i) = i for i >= 1", True,
                 all(lows[i] > i for i in range(1, n + 1)))]


def performance(i=50):
    t0 = time.perf_counter()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TwistedSatelliteWarning)
        pattern, K = generate("L", i), generate("K")
        front = legendrian_satellite(pattern, K)
        rep = compute(front)
    dt = time.perf_counter() - t0
    size = int(block_sizes(K, pattern.seam).sum()) + len(pattern)
    return [_row(f"L_{i}(K) event count", size, len(front.word), dt),
            _row(f"L_{i}(K) (tb, rot)", (2 * i, 0), (rep.tb, rep.rot), dt),
            _row(f"L_{i}(K) build + report under 2 s", True, dt < 2.0, dt)]


def calibration():
    rep = invariants_of(generate("trefoil"))
    return [_row("trefoil (writhe, tb, rot)", (3, 1, 0), (rep.writhe, rep.tb, rep.rot))]


CHECKS = (("captions", captions), ("composition", composition),
          ("reidemeister", reidemeister), ("cables-clasps", cables_and_clasps),
          ("links", links), ("links-tau", links_tau), ("reorientation", reorientation),
          ("performance", performance), ("calibration", calibration))


def run_checks(names=None):
    rows = []
    for name, fn in CHECKS:
        if names and name not in names:
            continue
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        rows += [Row(f"[{name}] {r.check}", r.expected, r.computed, r.ok, r.seconds or dt)
                 for r in out]
    return rows


def _clip(s, n=48):
    return s if len(s) <= n else s[:n - 3] + "..."


def format_table(rows):
    w = max(len(r.check) for r in rows)
    lines = [f"{'check':<{w}}  {'expected':<48}  {'computed':<48}  result"]
    for r in rows:
        lines.append(f"{r.check:<{w}}  {_clip(r.expected):<48}  {_clip(r.computed):<48}  "
                     f"{'PASS' if r.ok else 'FAIL'}")
    return "\n".join(lines) + "\n"

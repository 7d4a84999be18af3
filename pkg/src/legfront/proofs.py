"""Bound graphs for the slice-genus computations on the satellite families.

Node names: ``K`` is the companion, ``P{i}``, ``Q{i}`` are the knots P_i(K)
and Q_i(K), ``l{i}`` is the 2-component link L_i(K) and ``l'{i}`` the same
link with one component reversed.

Slice-Bennequin inputs come from the actual satellite fronts by default
(``method="front"``); ``method="formula"`` uses the satellite composition
law on the pattern and companion reports instead, which agrees exactly.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from .bounds import BoundGraph, Fixpoint, propagate, split_obstruction
from .families import generate
from .invariants import compute, invariants_of
from .satellite import TwistedSatelliteWarning, legendrian_satellite

__all__ = ["satellite_data", "cable_graph", "clasp_graph", "link_graph", "link_tau_graph",
           "split_verdicts", "reorientation_bound", "ReorientationBound",
           "CABLE_UPPER", "CLASP_UPPER", "ANNULUS_UPPER", "COMPANION_TAU"]


def CABLE_UPPER(i):
    return (f"{i} parallel copies of a genus-1 slice surface for K, joined along the "
            f"{i - 1} bands that turn the ({i},0) cable into P_{i}(K)")


CLASP_UPPER = "Q_1(K) is the positive clasped Whitehead double of K, Seifert genus 1"
ANNULUS_UPPER = "the two antiparallel push-offs in L_0(K) cobound an annulus"
COMPANION_TAU = "companion chosen with tau(K) = g4(K) = g3(K) = 1"


@lru_cache(maxsize=None)
def satellite_data(name, i, method="front"):
    """(tb, rot, components) of the satellite of pattern ``name(i)`` over K."""
    pattern = generate(name, i)
    if method == "formula":
        p = invariants_of(pattern)
        k = invariants_of(generate("K"))
        return p.winding ** 2 * k.tb + p.tb, p.winding * k.rot + p.rot, p.components
    if method != "front":
        raise ValueError(f"unknown method {method!r}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TwistedSatelliteWarning)
        rep = compute(legendrian_satellite(pattern, generate("K")))
    return rep.tb, rep.rot, rep.components


def _sb(graph, nid, name, i, method):
    tb, rot, _ = satellite_data(name, i, method)
    graph.slice_bennequin(nid, tb, rot, source=f"{name}_{i}(K) front" if method == "front"
                          else "composition law")


def _companion(graph):
    graph.add_node("K", 1, note="companion")
    graph.assert_tau("K", 1, 1, COMPANION_TAU)
    graph.assert_upper("K", 1, COMPANION_TAU)


def cable_graph(n, method="front", graph=None):
    """P_1(K) .. P_n(K): slice-Bennequin plus the parallel-copies upper bound."""
    g = graph or BoundGraph()
    if "K" not in g.nodes:
        _companion(g)
    for i in range(1, n + 1):
        nid = f"P{i}"
        if nid in g.nodes:
            continue
        g.add_node(nid, 1, note=f"P_{i}(K)")
        _sb(g, nid, "P", i, method)
        g.assert_upper(nid, i, CABLE_UPPER(i))
    return g


def clasp_graph(n, method="front", graph=None):
    """Q_1(K) .. Q_n(K): slice-Bennequin, the Q_1 upper bound, crossing changes."""
    g = graph or BoundGraph()
    for i in range(1, n + 1):
        nid = f"Q{i}"
        if nid in g.nodes:
            continue
        g.add_node(nid, 1, note=f"Q_{i}(K)")
        _sb(g, nid, "Q", i, method)
        if i == 1:
            g.assert_upper(nid, 1, CLASP_UPPER)
        else:
            g.crossing_change(nid, f"Q{i - 1}",
                              f"one crossing change turns Q_{i}(K) into Q_{i - 1}(K)")
    return g


def link_graph(n, method="front", cables=True):
    """Q_1 .. Q_{n+1} and l0 .. l{n} joined by band moves.

    With ``cables`` the graph also holds P_1 .. P_{n+1} for the split check.
    """
    g = clasp_graph(n + 1, method)
    if cables:
        cable_graph(n + 1, method, g)
    for i in range(0, n + 1):
        nid = f"l{i}"
        g.add_node(nid, 2, note=f"L_{i}(K)")
        if i == 0:
            g.assert_upper(nid, 0, ANNULUS_UPPER)
        else:
            g.band(nid, f"Q{i}", f"one band turns L_{i}(K) into Q_{i}(K)")
        g.band(nid, f"Q{i + 1}", f"one band turns L_{i}(K) into Q_{i + 1}(K)")
    return g


def link_tau_graph(n, method="front"):
    """The link graph plus the 2-component slice-Bennequin bound on each l{i}."""
    g = link_graph(n, method)
    for i in range(0, n + 1):
        _sb(g, f"l{i}", "L", i, method)
    return g


def split_verdicts(n, method="front"):
    """Split-obstruction verdict for each l{i}, with cable P_{i+1}(K)."""
    g = link_graph(n, method)
    return [split_obstruction(g, f"l{i}", f"P{i + 1}") for i in range(0, n + 1)]


@dataclass(frozen=True)
class ReorientationBound:
    i: int
    lower: int
    fixpoint: Fixpoint


def reorientation_bound(i, method="front") -> ReorientationBound:
    """g4 lower bound for L_i(K) with one component reversed.

    Reversing one component turns the two antiparallel cables into parallel
    ones, and one band merges them into P_{2i+2}(K).
    """
    if i < 0:
        raise ValueError("i must be non-negative")
    m = 2 * i + 2
    g = BoundGraph()
    g.add_node(f"P{m}", 1, note=f"P_{m}(K)")
    _sb(g, f"P{m}", "P", m, method)
    nid = f"l'{i}"
    g.add_node(nid, 2, note=f"L_{i}(K) with one component reversed")
    g.band(nid, f"P{m}", f"one band merges the components of {nid} into P_{m}(K)")
    fix = propagate(g)
    return ReorientationBound(i, int(fix.g4(nid).lo), fix)

"""Interval bookkeeping for smooth 4-genus and tau.

Every node of a :class:`BoundGraph` carries two integer intervals, ``g4`` and
``tau``.  Facts and edges are compiled into linear *rules*

    target  >=  offset + sum(coef * source)      (target is a lower end)
    target  <=  offset + sum(coef * source)      (target is an upper end)

and :func:`propagate` applies them until nothing tightens.  Every
tightening is logged as a :class:`Step`; replaying the steps from scratch
reproduces the final intervals, re-evaluating each rule on the way.

Genus bookkeeping uses connected surfaces, g = (2 - chi - b) / 2.  One band
changes chi by one, so across a band move the genus goes up by one when
boundary components merge and stays put when they split.  A crossing change
is a genus-one cobordism between knots.

tau is axiomatic: for knots ``|tau| <= g4`` and the slice-Bennequin bound
``tb + |rot| <= 2 tau - 1``; for 2-component links ``tau <= g4 + 1`` and
``tb + |rot| <= 2 tau - 2 <= 2 g4``.  Connected sum adds tau and reversal
preserves it.
"""
from __future__ import annotations

import copy
import math
from dataclasses import dataclass, field

__all__ = ["INF", "Interval", "LinkNode", "Rule", "Step", "Derivation", "BoundGraph",
           "Fixpoint", "Contradiction", "Verdict", "UnsupportedComponents", "MissingFacts",
           "propagate", "slice_bennequin_bounds", "split_obstruction", "tau_interval_sum"]

INF = math.inf


class UnsupportedComponents(ValueError):
    pass


class MissingFacts(ValueError):
    pass


@dataclass(frozen=True)
class Interval:
    lo: float = -INF
    hi: float = INF

    @property
    def exact(self):
        return self.lo == self.hi

    @property
    def empty(self):
        return self.lo > self.hi

    def __add__(self, other):
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __str__(self):
        lo = "-inf" if self.lo == -INF else str(int(self.lo))
        hi = "+inf" if self.hi == INF else str(int(self.hi))
        return f"[{lo}, {hi}]"


def tau_interval_sum(a: Interval, b: Interval) -> Interval:
    return a + b


def _ceil_half(x):
    return -((-x) // 2)


@dataclass
class LinkNode:
    id: str
    components: int
    front: object = None
    note: str = ""


@dataclass(frozen=True)
class Rule:
    target: tuple                 # (node, "g4"|"tau", "lo"|"hi")
    terms: tuple = ()             # ((node, quantity, side, coef), ...)
    offset: int = 0
    name: str = "fact"
    provenance: str = ""
    axiom: bool = False

    def evaluate(self, state):
        value = self.offset
        for node, q, side, coef in self.terms:
            v = state[(node, q, side)]
            if math.isinf(v):
                return None
            value += coef * v
        return value

    def describe(self):
        node, q, side = self.target
        rel = ">=" if side == "lo" else "<="
        parts = [f"{q}({n}).{s}" if c == 1 else f"{c}*{q}({n}).{s}"
                 for n, q, s, c in self.terms]
        rhs = " + ".join(parts) if parts else str(self.offset)
        if parts and self.offset:
            rhs += f" {'+' if self.offset > 0 else '-'} {abs(self.offset)}"
        return f"{q}({node}) {rel} {rhs}"


@dataclass(frozen=True)
class Step:
    target: tuple
    before: float
    value: int
    rule: Rule
    inputs: tuple                 # ((node, quantity, side), value) pairs read


@dataclass(frozen=True)
class Contradiction:
    node: str
    quantity: str
    interval: Interval
    step: Step


def _initial_state(node_ids):
    state = {}
    for nid in node_ids:
        for q in ("g4", "tau"):
            state[(nid, q, "lo")] = -INF
            state[(nid, q, "hi")] = INF
    return state


def _tighter(side, value, current):
    return value > current if side == "lo" else value < current


@dataclass(frozen=True)
class Derivation:
    node_ids: tuple
    steps: tuple

    def replay(self) -> dict:
        """Re-evaluate every step from scratch; return the resulting intervals.

        Raises AssertionError if a step no longer reproduces its value.
        """
        state = _initial_state(self.node_ids)
        for st in self.steps:
            value = st.rule.evaluate(state)
            if value != st.value or not _tighter(st.target[2], value, state[st.target]):
                raise AssertionError(f"step does not replay: {st.rule.describe()}")
            state[st.target] = value
        return {(n, q): Interval(state[(n, q, "lo")], state[(n, q, "hi")])
                for n in self.node_ids for q in ("g4", "tau")}

    def support(self, node, quantity=None) -> list:
        """Steps that the final bounds of ``node`` depend on, in order."""
        latest, producer = {}, []
        for st in self.steps:
            # for each input, the step that last wrote it before this one
            producer.append([latest[src] for src, _v in st.inputs if src in latest])
            latest[st.target] = len(producer) - 1
        work = [k for key, k in latest.items()
                if key[0] == node and (quantity is None or key[1] == quantity)]
        needed = set()
        while work:
            k = work.pop()
            if k not in needed:
                needed.add(k)
                work.extend(producer[k])
        return [self.steps[k] for k in sorted(needed)]

    def format(self, steps=None):
        lines = []
        for st in (self.steps if steps is None else steps):
            node, q, side = st.target
            tag = " [axiom]" if st.rule.axiom else ""
            prov = f"  -- {st.rule.provenance}" if st.rule.provenance else ""
            lines.append(f"{q}({node}).{side} = {st.value}   by {st.rule.name}{tag}: "
                         f"{st.rule.describe()}{prov}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Fixpoint:
    node_ids: tuple
    intervals: dict
    derivation: Derivation
    contradiction: Contradiction | None = None

    def g4(self, node) -> Interval:
        return self.intervals[(node, "g4")]

    def tau(self, node) -> Interval:
        return self.intervals[(node, "tau")]

    @property
    def contradictory(self):
        return self.contradiction is not None

    def support(self, node, quantity=None):
        return self.derivation.support(node, quantity)

    def table(self):
        return "\n".join(f"{n}: g4 {self.g4(n)}  tau {self.tau(n)}" for n in self.node_ids)


class BoundGraph:
    """Nodes with g4/tau facts, cobordism edges, and the rules they induce."""

    def __init__(self):
        self.nodes = {}
        self.rules = []
        self.edges = []

    def copy(self):
        g = BoundGraph()
        g.nodes = dict(self.nodes)
        g.rules = list(self.rules)
        g.edges = list(self.edges)
        return g

    def _rule(self, *args, **kw):
        r = Rule(*args, **kw)
        self.rules.append(r)
        return r

    def _need(self, nid):
        if nid not in self.nodes:
            raise KeyError(f"unknown node {nid!r}")
        return self.nodes[nid]

    def add_node(self, nid, components, front=None, note=""):
        if nid in self.nodes:
            raise ValueError(f"node {nid!r} already exists")
        if components < 1:
            raise ValueError("a link has at least one component")
        self.nodes[nid] = LinkNode(nid, components, front, note)
        self._rule((nid, "g4", "lo"), (), 0, "genus is non-negative")
        if components == 1:
            self._rule((nid, "tau", "hi"), ((nid, "g4", "hi", 1),), 0, "tau <= g4")
            self._rule((nid, "g4", "lo"), ((nid, "tau", "lo", 1),), 0, "tau <= g4")
            self._rule((nid, "tau", "lo"), ((nid, "g4", "hi", -1),), 0, "-g4 <= tau")
            self._rule((nid, "g4", "lo"), ((nid, "tau", "hi", -1),), 0, "-g4 <= tau")
        elif components == 2:
            self._rule((nid, "tau", "hi"), ((nid, "g4", "hi", 1),), 1, "link tau <= g4 + 1")
            self._rule((nid, "g4", "lo"), ((nid, "tau", "lo", 1),), -1, "link tau <= g4 + 1")
        return self.nodes[nid]

    # facts -----------------------------------------------------------------

    def slice_bennequin(self, nid, tb=None, rot=None, source=""):
        """Lower bounds on tau and g4 from a Legendrian representative."""
        node = self._need(nid)
        if tb is None:
            if node.front is None:
                raise MissingFacts(f"node {nid!r} has neither a front nor tb/rot values")
            from .invariants import compute, invariants_of
            from .front import FrontWord
            rep = (invariants_of(node.front) if isinstance(node.front, FrontWord)
                   else compute(node.front))
            if rep.components != node.components:
                raise ValueError(f"front of {nid!r} has {rep.components} components")
            tb, rot = rep.tb, rep.rot
            source = source or "computed from the front"
        tau_lo, g4_lo, name = slice_bennequin_bounds(tb, rot, node.components)
        prov = f"tb={tb}, rot={rot}" + (f" ({source})" if source else "")
        return [self._rule((nid, "tau", "lo"), (), tau_lo, name, prov),
                self._rule((nid, "g4", "lo"), (), g4_lo, name, prov)]

    def assert_upper(self, nid, value, provenance):
        self._need(nid)
        return self._rule((nid, "g4", "hi"), (), int(value), "asserted upper bound", provenance)

    def assert_lower(self, nid, value, provenance):
        self._need(nid)
        return self._rule((nid, "g4", "lo"), (), int(value), "asserted lower bound", provenance)

    def assert_tau(self, nid, lo, hi, provenance):
        self._need(nid)
        out = []
        if lo is not None and lo != -INF:
            out.append(self._rule((nid, "tau", "lo"), (), int(lo), "tau fact", provenance))
        if hi is not None and hi != INF:
            out.append(self._rule((nid, "tau", "hi"), (), int(hi), "tau fact", provenance))
        return out

    # edges -----------------------------------------------------------------

    def _symmetric(self, a, b, cost, name, provenance=""):
        for x, y in ((a, b), (b, a)):
            self._rule((x, "g4", "hi"), ((y, "g4", "hi", 1),), cost, name, provenance)
            self._rule((x, "g4", "lo"), ((y, "g4", "lo", 1),), -cost, name, provenance)

    def crossing_change(self, a, b, provenance=""):
        """Genus-one cobordism between two knots differing by a crossing change."""
        for nid in (a, b):
            if self._need(nid).components != 1:
                raise ValueError("crossing-change edges join knots")
        self.edges.append(("crossing-change", a, b, 1))
        self._symmetric(a, b, 1, "crossing change", provenance)

    def cobordism(self, a, b, genus, provenance=""):
        self._need(a), self._need(b)
        self.edges.append(("cobordism", a, b, genus))
        self._symmetric(a, b, genus, f"genus-{genus} cobordism", provenance)

    def band(self, a, b, provenance=""):
        """One band move between links whose component counts differ by one."""
        na, nb = self._need(a), self._need(b)
        if abs(na.components - nb.components) != 1:
            raise ValueError("band move endpoints must differ by one component")
        more, fewer = (a, b) if na.components > nb.components else (b, a)
        self.edges.append(("band", a, b, None))
        # surface for `fewer` plus the band bounds `more`: components split, genus kept
        self._rule((more, "g4", "hi"), ((fewer, "g4", "hi", 1),), 0, "band (split)", provenance)
        self._rule((fewer, "g4", "lo"), ((more, "g4", "lo", 1),), 0, "band (split)", provenance)
        # surface for `more` plus the band bounds `fewer`: components merge, genus +1
        self._rule((fewer, "g4", "hi"), ((more, "g4", "hi", 1),), 1, "band (merge)", provenance)
        self._rule((more, "g4", "lo"), ((fewer, "g4", "lo", 1),), -1, "band (merge)", provenance)

    def connected_sum(self, nid, a, b):
        """Node ``nid`` = a # b, with tau additive."""
        for x in (a, b):
            if self._need(x).components != 1:
                raise ValueError("connected sum is taken of knots")
        if nid not in self.nodes:
            self.add_node(nid, 1, note=f"{a} # {b}")
        self._rule((nid, "tau", "lo"), ((a, "tau", "lo", 1), (b, "tau", "lo", 1)), 0,
                   "tau additivity")
        self._rule((nid, "tau", "hi"), ((a, "tau", "hi", 1), (b, "tau", "hi", 1)), 0,
                   "tau additivity")
        return self.nodes[nid]

    def reverse(self, nid, a):
        """Node ``nid`` = a with reversed orientation."""
        src = self._need(a)
        if nid not in self.nodes:
            self.add_node(nid, src.components, note=f"reverse of {a}")
        for x, y in ((nid, a), (a, nid)):
            for q in ("tau", "g4"):
                name = "tau reversal invariance" if q == "tau" else "g4 reversal invariance"
                self._rule((x, q, "lo"), ((y, q, "lo", 1),), 0, name)
                self._rule((x, q, "hi"), ((y, q, "hi", 1),), 0, name)
        return self.nodes[nid]

    def tau_algebra(self, facts):
        """Apply ``("sum", id, a, b)`` and ``("reverse", id, a)`` facts."""
        for fact in facts:
            if fact[0] == "sum":
                self.connected_sum(*fact[1:])
            elif fact[0] == "reverse":
                self.reverse(*fact[1:])
            else:
                raise ValueError(f"unknown tau fact {fact[0]!r}")


def slice_bennequin_bounds(tb, rot, components):
    """``(tau lower, g4 lower, rule name)`` from tb and rot of a front."""
    s = tb + abs(rot)
    if components == 1:
        b = _ceil_half(s + 1)
        return b, b, "slice-Bennequin"
    if components == 2:
        return _ceil_half(s + 2), _ceil_half(s), "slice-Bennequin (2-component)"
    raise UnsupportedComponents(
        f"slice-Bennequin bounds are used for knots and 2-component links, not {components}")


def propagate(graph: BoundGraph, max_passes=None) -> Fixpoint:
    """Apply all rules until no interval tightens (or a contradiction appears)."""
    ids = tuple(graph.nodes)
    state = _initial_state(ids)
    steps = []
    contradiction = None
    limit = max_passes or 4 * (len(graph.rules) + 4)
    for _ in range(limit):
        changed = False
        for rule in graph.rules:
            value = rule.evaluate(state)
            if value is None or not _tighter(rule.target[2], value, state[rule.target]):
                continue
            inputs = tuple(((n, q, s), state[(n, q, s)]) for n, q, s, _c in rule.terms)
            st = Step(rule.target, state[rule.target], int(value), rule, inputs)
            steps.append(st)
            state[rule.target] = int(value)
            changed = True
            node, q, _side = rule.target
            if state[(node, q, "lo")] > state[(node, q, "hi")]:
                contradiction = Contradiction(
                    node, q, Interval(state[(node, q, "lo")], state[(node, q, "hi")]), st)
                break
        if contradiction is not None or not changed:
            break
    else:
        raise RuntimeError("bound propagation did not reach a fixpoint")
    intervals = {(n, q): Interval(state[(n, q, "lo")], state[(n, q, "hi")])
                 for n in ids for q in ("g4", "tau")}
    return Fixpoint(ids, intervals, Derivation(ids, tuple(steps)), contradiction)


@dataclass(frozen=True)
class Verdict:
    outcome: str                  # "contradiction" or "inconclusive"
    link: str
    cable: str
    link_g4: int
    sum_tau: int
    fixpoint: Fixpoint = field(repr=False)

    @property
    def contradiction(self):
        return self.outcome == "contradiction"

    def __str__(self):
        rel = ">" if self.contradiction else "<="
        return (f"{self.link}: split hypothesis gives g4(C # rC) = {self.link_g4} "
                f"but tau(C # rC) = {self.sum_tau} {rel} {self.link_g4} "
                f"(C = {self.cable}) -> {self.outcome}")


SPLIT_AXIOM = ("a link concordant to a split link C u rC has the 4-genus of C # rC "
               "(split union vs connected sum)")


def split_obstruction(source, link, cable) -> Verdict:
    """Test the hypothesis that ``link`` is concordant to ``cable`` u r(``cable``).

    ``source`` is a :class:`BoundGraph` (propagated first) whose fixpoint pins
    g4 of the link and tau of the cable exactly.
    """
    graph = source if isinstance(source, BoundGraph) else None
    if graph is None:
        raise TypeError("split_obstruction takes a BoundGraph")
    fix = propagate(graph)
    if link not in graph.nodes or cable not in graph.nodes:
        raise MissingFacts("link or cable node missing")
    g, t = fix.g4(link), fix.tau(cable)
    if not g.exact or not t.exact:
        raise MissingFacts(f"need exact g4({link}) and tau({cable}); have {g} and {t}")
    hyp = graph.copy()
    rc, s = f"r({cable})", f"{cable} # r({cable})"
    if rc not in hyp.nodes:
        hyp.reverse(rc, cable)
    if s not in hyp.nodes:
        hyp.connected_sum(s, cable, rc)
    hyp._rule((s, "g4", "hi"), ((link, "g4", "hi", 1),), 0, "split hypothesis",
              SPLIT_AXIOM, axiom=True)
    hyp._rule((s, "g4", "lo"), ((link, "g4", "lo", 1),), 0, "split hypothesis",
              SPLIT_AXIOM, axiom=True)
    hfix = propagate(hyp)
    outcome = "contradiction" if hfix.contradictory else "inconclusive"
    return Verdict(outcome, link, cable, int(g.lo), int(2 * t.lo), hfix)

"""Text scenarios for the bounds engine.

::

    node Q1 components 1 front q1.front
    node Q2 components 1
    node l1 components 2
    sb Q1
    sb Q2 tb 3 rot 0
    upper Q1 1 "clasped Whitehead double, Seifert genus 1"
    xchange Q2 Q1
    band l1 Q1
    band l1 Q2
    tau K 1 1 "given"
    connectsum S = K # K
    reverse rK = r K
    cobordism A B 2 "explicit genus-2 cobordism"
    split-check l1 P2

A line whose first non-blank character is ``#`` is a comment.  Quoted
strings follow shell rules.  ``front`` paths are relative to the scenario
file.  Bounds may be written ``-inf`` / ``+inf``.
"""
from __future__ import annotations

import math
import os
import shlex
from dataclasses import dataclass, field

from .bounds import BoundGraph, Fixpoint, MissingFacts, propagate, split_obstruction
from .dsl import ArityError, FrontSyntaxError, ParseError, UnknownDirective, load

__all__ = ["Scenario", "ScenarioResult", "parse_scenario", "run_scenario", "format_result"]


@dataclass
class Scenario:
    graph: BoundGraph
    split_checks: list = field(default_factory=list)     # (link, cable, line)


@dataclass
class ScenarioResult:
    scenario: Scenario
    fixpoint: Fixpoint
    verdicts: list                                        # Verdict or error text


def _int(tok, lineno, allow_inf=False):
    if allow_inf and tok in ("-inf", "inf", "+inf"):
        return -math.inf if tok.startswith("-") else math.inf
    try:
        return int(tok)
    except ValueError:
        raise FrontSyntaxError(f"expected an integer, got {tok!r}", lineno, 1) from None


def _arity(toks, n, lineno, usage):
    if len(toks) not in (n if isinstance(n, tuple) else (n,)):
        raise ArityError(f"usage: {usage}", lineno, 1)


def parse_scenario(text, base_dir=".") -> Scenario:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    g = BoundGraph()
    sc = Scenario(g)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            toks = shlex.split(line)
        except ValueError as exc:
            raise FrontSyntaxError(str(exc), lineno, 1) from None
        cmd, args = toks[0], toks[1:]
        try:
            if cmd == "node":
                _arity(args, (3, 5), lineno, "node <id> components <n> [front <file>]")
                if args[1] != "components" or (len(args) == 5 and args[3] != "front"):
                    raise FrontSyntaxError("expected 'components' / 'front' keywords", lineno, 1)
                front = None
                if len(args) == 5:
                    front = load(os.path.join(base_dir, args[4]))
                g.add_node(args[0], _int(args[2], lineno), front)
            elif cmd == "sb":
                _arity(args, (1, 5), lineno, "sb <id> [tb <t> rot <r>]")
                if len(args) == 5:
                    if args[1] != "tb" or args[3] != "rot":
                        raise FrontSyntaxError("expected 'tb <t> rot <r>'", lineno, 1)
                    g.slice_bennequin(args[0], _int(args[2], lineno), _int(args[4], lineno),
                                      source="given")
                else:
                    g.slice_bennequin(args[0])
            elif cmd == "upper":
                _arity(args, 3, lineno, 'upper <id> <g> "<provenance>"')
                g.assert_upper(args[0], _int(args[1], lineno), args[2])
            elif cmd == "lower":
                _arity(args, 3, lineno, 'lower <id> <g> "<provenance>"')
                g.assert_lower(args[0], _int(args[1], lineno), args[2])
            elif cmd == "tau":
                _arity(args, 4, lineno, 'tau <id> <lo> <hi> "<provenance>"')
                g.assert_tau(args[0], _int(args[1], lineno, True), _int(args[2], lineno, True),
                             args[3])
            elif cmd == "band":
                _arity(args, 2, lineno, "band <a> <b>")
                g.band(*args)
            elif cmd == "xchange":
                _arity(args, 2, lineno, "xchange <a> <b>")
                g.crossing_change(*args)
            elif cmd == "cobordism":
                _arity(args, (3, 4), lineno, 'cobordism <a> <b> <genus> ["<provenance>"]')
                g.cobordism(args[0], args[1], _int(args[2], lineno), *args[3:])
            elif cmd == "connectsum":
                _arity(args, 5, lineno, "connectsum <id> = <a> # <b>")
                if args[1] != "=" or args[3] != "#":
                    raise FrontSyntaxError("expected '<id> = <a> # <b>'", lineno, 1)
                g.connected_sum(args[0], args[2], args[4])
            elif cmd == "reverse":
                _arity(args, 4, lineno, "reverse <id> = r <a>")
                if args[1] != "=" or args[2] != "r":
                    raise FrontSyntaxError("expected '<id> = r <a>'", lineno, 1)
                g.reverse(args[0], args[3])
            elif cmd == "split-check":
                _arity(args, 2, lineno, "split-check <link> <cable>")
                sc.split_checks.append((args[0], args[1], lineno))
            else:
                raise UnknownDirective(f"unknown directive {cmd!r}", lineno, 1)
        except ParseError:
            raise
        except (KeyError, ValueError, OSError) as exc:
            msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
            raise ParseError(msg, lineno, 1) from None
    for link, cable, lineno in sc.split_checks:
        for nid in (link, cable):
            if nid not in g.nodes:
                raise ParseError(f"unknown node {nid!r}", lineno, 1)
    return sc


def run_scenario(text, base_dir=".") -> ScenarioResult:
    sc = parse_scenario(text, base_dir)
    fix = propagate(sc.graph)
    verdicts = []
    for link, cable, _line in sc.split_checks:
        try:
            verdicts.append(split_obstruction(sc.graph, link, cable))
        except MissingFacts as exc:
            verdicts.append(f"{link}: missing facts ({exc})")
    return ScenarioResult(sc, fix, verdicts)


def format_result(result: ScenarioResult) -> str:
    fix = result.fixpoint
    out = ["intervals:"]
    out += ["  " + line for line in fix.table().splitlines()]
    out.append("derivation:")
    out += ["  " + line for line in fix.derivation.format().splitlines()]
    if fix.contradiction is not None:
        c = fix.contradiction
        out.append(f"contradiction: {c.quantity}({c.node}) = {c.interval}")
    for v in result.verdicts:
        out.append(f"split-check: {v}")
        if not isinstance(v, str) and v.contradiction:
            c = v.fixpoint.contradiction
            out.append(f"  via {c.quantity}({c.node}) = {c.interval}; steps:")
            chain = v.fixpoint.derivation.support(c.node)
            out += ["    " + line for line in v.fixpoint.derivation.format(chain).splitlines()]
    return "\n".join(out) + "\n"

"""Command line entry point: ``legfront <subcommand> ...``.

Exit status: 0 success, 1 usage error, 2 invalid input, 3 failed verify.
Every file argument accepts ``-`` for standard input.
"""
from __future__ import annotations

import argparse
import os
import sys
import warnings

from . import dsl
from .bounds import UnsupportedComponents
from .families import GeneratorId, IndexOutOfRange, generate
from .front import FrontError
from .invariants import invariants_of
from .moves import perturb
from .render import RenderSpec, render
from .satellite import SpliceMismatch, TwistedSatelliteWarning, legendrian_satellite
from .scenario import format_result, run_scenario

__all__ = ["main", "run", "build_parser"]

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _read(path, stdin):
    if path == "-":
        data = stdin.read()
        return data.encode("utf-8") if isinstance(data, str) else data
    with open(path, "rb") as fh:
        return fh.read()


def _front(path, stdin):
    return dsl.parse(_read(path, stdin))


def _emit(text, out, stdout):
    if out and out != "-":
        mode = "wb" if isinstance(text, bytes) else "w"
        with open(out, mode) as fh:
            fh.write(text)
    else:
        stdout.write(text.decode("utf-8") if isinstance(text, bytes) else text)


def _cmd_invariants(args, io):
    rep = invariants_of(_front(args.file, io[0]))
    _emit(rep.to_json() + "\n" if args.json else rep.to_text(), None, io[1])


def _cmd_satellite(args, io):
    if args.pattern == "-" and args.companion == "-":
        raise _UsageError("only one of pattern and companion can be read from stdin")
    pattern, companion = _front(args.pattern, io[0]), _front(args.companion, io[0])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", TwistedSatelliteWarning)
        front = legendrian_satellite(pattern, companion, args.cut, args.level)
    for w in caught:
        io[2].write(f"warning: {w.message}\n")
    _emit(dsl.render_text(front.word), args.output, io[1])


def _cmd_family(args, io):
    gid = GeneratorId(args.name, args.index)
    _emit(dsl.render_text(generate(gid)), args.output, io[1])


def _cmd_perturb(args, io):
    word = perturb(_front(args.file, io[0]), args.steps, args.seed)
    _emit(dsl.render_text(word), args.output, io[1])


def _cmd_render(args, io):
    word = _front(args.file, io[0])
    spec = RenderSpec(args.format, args.scale, args.labels, args.levels, not args.mono)
    _emit(render(word, spec), args.output, io[1])


def _cmd_bounds(args, io):
    if args.proof:
        from .bounds import propagate
        from . import proofs
        n = args.n
        graphs = {"cables": lambda: proofs.cable_graph(n), "clasps": lambda: proofs.clasp_graph(n),
                  "links": lambda: proofs.link_graph(n),
                  "links-tau": lambda: proofs.link_tau_graph(n)}
        fix = propagate(graphs[args.proof]())
        text = "intervals:\n" + "".join(f"  {ln}\n" for ln in fix.table().splitlines())
        text += "derivation:\n" + "".join(
            f"  {ln}\n" for ln in fix.derivation.format().splitlines())
        if args.proof == "links":
            for v in proofs.split_verdicts(n):
                text += f"split-check: {v}\n"
        io[1].write(text)
        return
    if args.scenario is None:
        raise _UsageError("bounds: give a scenario file or --proof")
    base = "." if args.scenario == "-" else os.path.dirname(os.path.abspath(args.scenario))
    io[1].write(format_result(run_scenario(_read(args.scenario, io[0]), base)))


def _cmd_verify(args, io):
    from .verify import format_table, run_checks
    rows = run_checks(args.only)
    io[1].write(format_table(rows))
    failed = [r for r in rows if not r.ok]
    io[1].write(f"{len(rows) - len(failed)}/{len(rows)} checks passed\n")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser():
    p = _Parser(prog="legfront", description="Legendrian fronts, satellites and slice-genus bounds")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("invariants", help="tb, rot, winding and linking of a front")
    s.add_argument("file", help="front file, or - for stdin")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=_cmd_invariants)

    s = sub.add_parser("satellite", help="Legendrian satellite of a pattern and a companion")
    s.add_argument("pattern")
    s.add_argument("companion")
    s.add_argument("--cut", type=int, default=None, help="companion column to splice at")
    s.add_argument("--level", type=int, default=None, help="level of the cut strand")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=_cmd_satellite)

    s = sub.add_parser("family", help="front of a named generator")
    s.add_argument("name")
    s.add_argument("index", nargs="?", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(fn=_cmd_family)

    s = sub.add_parser("perturb", help="apply seeded random Legendrian moves")
    s.add_argument("file")
    s.add_argument("--steps", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(fn=_cmd_perturb)

    s = sub.add_parser("render", help="draw a front as SVG or ASCII")
    s.add_argument("file")
    s.add_argument("--format", choices=("svg", "ascii"), default="svg")
    s.add_argument("--scale", type=float, default=1.0)
    s.add_argument("--labels", action="store_true", help="print event tokens")
    s.add_argument("--levels", action="store_true", help="number the levels")
    s.add_argument("--mono", action="store_true", help="draw every component in black")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=_cmd_render)

    s = sub.add_parser("bounds", help="propagate g4/tau bounds over a scenario")
    s.add_argument("scenario", nargs="?")
    s.add_argument("--proof", choices=("cables", "clasps", "links", "links-tau"),
                   help="run a built-in graph instead of a scenario file")
    s.add_argument("-n", type=int, default=5, help="family size for --proof")
    s.set_defaults(fn=_cmd_bounds)

    s = sub.add_parser("verify", help="recompute every headline number")
    s.add_argument("--only", nargs="*", help="restrict to the named check groups")
    s.set_defaults(fn=_cmd_verify)
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin.buffer
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise _UsageError(parser.format_usage().strip())
        status = args.fn(args, (stdin, stdout, stderr))
        return EXIT_OK if status is None else status
    except _UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except (dsl.ParseError, FrontError, SpliceMismatch, IndexOutOfRange, UnsupportedComponents,
            ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"error: {msg}\n")
        return EXIT_INVALID
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


run = main


def entry():
    sys.exit(main())

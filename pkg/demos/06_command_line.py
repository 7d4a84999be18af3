"""
The command line
================

Everything above is also reachable from ``legfront`` (or ``python -m
legfront``).  Files use the plain-text front format and ``-`` reads from
standard input, so commands chain in a shell::

    legfront family Q 3 | legfront invariants -
    legfront family P 3 -o p3.front
    legfront family K -o k.front
    legfront satellite p3.front k.front | legfront render - --format ascii
    legfront bounds demos/clasp_chain.scenario
    legfront verify

This script drives the same entry point in-process.
"""
import io
import os
import tempfile

from legfront.cli import main


def run(*argv, stdin=b""):
    out = io.StringIO()
    code = main(list(argv), io.BytesIO(stdin), out, io.StringIO())
    return code, out.getvalue()


_, q3 = run("family", "Q", "3")
print(q3)
print(run("invariants", "-", stdin=q3.encode())[1])

with tempfile.TemporaryDirectory() as tmp:
    p3, k = os.path.join(tmp, "p3.front"), os.path.join(tmp, "k.front")
    run("family", "P", "3", "-o", p3)
    run("family", "K", "-o", k)
    _, sat = run("satellite", p3, k)
    print(run("invariants", "-", stdin=sat.encode())[1])
    svg = os.path.join(tmp, "trefoil.svg")
    _, tre = run("family", "trefoil")
    run("render", "-", "--labels", "-o", svg, stdin=tre.encode())
    print("svg bytes:", os.path.getsize(svg))

here = os.path.dirname(os.path.abspath(__file__))
print(run("bounds", os.path.join(here, "clasp_chain.scenario"))[1])

code, table = run("verify", "--only", "calibration", "links")
print(table)
print("exit status", code)

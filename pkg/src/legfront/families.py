r"""Concrete front words for every diagram used in the slice-genus argument.

Only invariants, winding numbers and component counts are certified.  The
smooth knot types named below are the intended ones; the words were built
to realise them but no isotopy classification is attempted.

Pictures are :func:`legfront.render.to_ascii` output, level 1 at the bottom.
Seam strands of a pattern leave the right edge and re-enter on the left.

Max-tb right-handed trefoil ``L1 L3 X2 X2 X2 R1 R1`` (tb 1, rot 0)::

         /------------------
         \---\/--\/--\/-----
     /-------/\--/\--/\---\ --\
     \--------------------/ --/

``J``, the trefoil with one stabilisation ``L1 R2`` up front (tb 0, rot 1)::

        -------- /------------------
        ------\  \---\/--\/--\/-----
     /-- /----/ -----/\--/\--/\---\ --\
     \-- \------------------------/ --/

``twist-pattern``, three seam strands, one cusp pair and three crossings
(tb 2, rot 0, winding 1)::

    -------------\/-----
     /-----------/\---\
     \-------\/-------/
    -----\/--/\---------
    -----/\-------------

``W``, a stabilisation followed by a positive clasp on two antiparallel
strands: the untwisted positive Whitehead double pattern (tb 0, rot 1)::

    -----------------\/-----
    ------\  /-------/\---\
     /----/  \---\/-------/
     \-----------/\---------

``P(i)``, the (i, 1) cable pattern: i rightward strands with one cyclic
shift ``X1 ... X(i-1)``.  P(3)::

    -----\/-
    -\/--/\-
    -/\-----

``Q(i)``, a rightward bundle of i strands under a leftward bundle of i
strands, each with one cyclic shift, joined by the positive clasp
``L(i+1) X(i) X(i+2) R(i+1)`` between the two middle strands.  Q(2)::

            ----------------
            ---------\/-----
    -----\/- /-------/\---\
    -----/\- \---\/-------/
    -\/----------/\---------
    -/\---------------------

``L(i)``, the same two bundles with i+1 strands each and no clasp: the
(i+1, 1) cable of each component of the (2, 0) cable, with opposite
orientations (``orient 1 L``).  L(1)::

    -----\/-
    -----/\-
    -\/-----
    -/\-----

Clasp signs and twist placements are a free choice here; any realisation
matching the tabulated invariants is accepted.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache

from .front import FrontWord, LEFTWARD
from .invariants import InvariantReport, invariants_of
from .satellite import TwistedSatelliteWarning, legendrian_satellite

__all__ = ["GeneratorId", "IndexOutOfRange", "generate", "certify", "expected_invariants",
           "Certification", "NAMES"]

NAMES = ("unknot", "trefoil", "twist-pattern", "twist-satellite", "W", "J", "K", "P", "Q", "L")
_INDEXED = {"P": 1, "Q": 1, "L": 0}
_ALIASES = {"Unknot": "unknot", "Trefoil": "trefoil", "TwistP": "twist-pattern",
            "twist": "twist-pattern", "w": "W", "j": "J", "k": "K", "p": "P", "q": "Q", "l": "L"}


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorId:
    name: str
    index: int | None = None

    def __post_init__(self):
        name = _ALIASES.get(self.name, self.name)
        object.__setattr__(self, "name", name)
        if name not in NAMES:
            raise ValueError(f"unknown generator {self.name!r}")
        if name in _INDEXED:
            if self.index is None or self.index < _INDEXED[name]:
                raise IndexOutOfRange(
                    f"{name} needs an index >= {_INDEXED[name]}, got {self.index}")
        elif self.index is not None:
            raise IndexOutOfRange(f"{name} takes no index")

    def __str__(self):
        return self.name if self.index is None else f"{self.name}({self.index})"


def _shift(lo, hi):
    return [f"X{k}" for k in range(lo, hi)]


def cable_pattern(i):
    return FrontWord.pattern(i, _shift(1, i))


def clasp_pattern(i):
    events = _shift(1, i) + _shift(i + 1, 2 * i)
    events += [f"L{i + 1}", f"X{i}", f"X{i + 2}", f"R{i + 1}"]
    return FrontWord.pattern(2 * i, events)


def two_cable_pattern(i):
    m = i + 1
    events = _shift(1, m) + _shift(m + 1, 2 * m)
    return FrontWord.pattern(2 * m, events, [(1, LEFTWARD)])


UNKNOT = FrontWord.knot("L1 R1")
TREFOIL = FrontWord.knot("L1 L3 X2 X2 X2 R1 R1")
TWIST_PATTERN = FrontWord.pattern(3, "L3 X1 X2 X4 R3")
WHITEHEAD = FrontWord.pattern(2, "L1 R2 L2 X1 X3 R2")
STABILIZED_TREFOIL = FrontWord.knot("L1 L1 R2 L3 X2 X2 X2 R1 R1")


@lru_cache(maxsize=None)
def _companion():
    return legendrian_satellite(WHITEHEAD, STABILIZED_TREFOIL).word


@lru_cache(maxsize=None)
def _twist_satellite():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TwistedSatelliteWarning)
        return legendrian_satellite(TWIST_PATTERN, TREFOIL).word


def generate(gid, index=None) -> FrontWord:
    """Front word for a generator id (or a name and index)."""
    if not isinstance(gid, GeneratorId):
        gid = GeneratorId(gid, index)
    name, i = gid.name, gid.index
    if name == "P":
        return cable_pattern(i)
    if name == "Q":
        return clasp_pattern(i)
    if name == "L":
        return two_cable_pattern(i)
    return {
        "unknot": lambda: UNKNOT,
        "trefoil": lambda: TREFOIL,
        "twist-pattern": lambda: TWIST_PATTERN,
        "twist-satellite": _twist_satellite,
        "W": lambda: WHITEHEAD,
        "J": lambda: STABILIZED_TREFOIL,
        "K": _companion,
    }[name]()


def expected_invariants(gid, index=None) -> dict:
    """Caption values: tb, rot, winding (None for knots) and components."""
    if not isinstance(gid, GeneratorId):
        gid = GeneratorId(gid, index)
    name, i = gid.name, gid.index
    table = {
        "unknot": (-1, 0, None, 1),
        "trefoil": (1, 0, None, 1),
        "twist-pattern": (2, 0, 1, 1),
        "twist-satellite": (3, 0, None, 1),
        "W": (0, 1, 0, 1),
        "J": (0, 1, None, 1),
        "K": (0, 1, None, 1),
    }
    if name == "P":
        row = (i - 1, 0, i, 1)
    elif name == "Q":
        row = (2 * i - 1, 0, 0, 1)
    elif name == "L":
        row = (2 * i, 0, 0, 2)
    else:
        row = table[name]
    return dict(zip(("tb", "rot", "winding", "components"), row))


@dataclass(frozen=True)
class Certification:
    gid: GeneratorId
    rows: tuple          # (invariant, expected, computed)
    report: InvariantReport = field(repr=False)

    @property
    def ok(self):
        return all(e == c for _, e, c in self.rows)


def certify(gid, index=None) -> Certification:
    if not isinstance(gid, GeneratorId):
        gid = GeneratorId(gid, index)
    report = invariants_of(generate(gid))
    expected = expected_invariants(gid)
    rows = tuple((key, expected[key], getattr(report, key)) for key in expected)
    return Certification(gid, rows, report)

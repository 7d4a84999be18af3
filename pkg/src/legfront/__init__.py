"""Legendrian front words, satellites, and slice-genus bound propagation."""
from .front import (Event, FrontError, FrontWord, InvalidFront, Kind, LEFTWARD, OrientedFront,
                    OverrideOutOfRange, RIGHTWARD, ValidationReport, replay, strands_at,
                    trace_components, validate)
from .invariants import InvariantReport, NotConnected, compute, crossing_sign, invariants_of
from .moves import MoveSite, StaleSite, apply, apply_tracked, find_sites, inverse_site, perturb
from .satellite import (CompositionCheck, SpliceMismatch, SpliceSpec, TwistedSatelliteWarning,
                        admissible_cuts, check_composition, legendrian_satellite, parallel_copies)
from .families import GeneratorId, IndexOutOfRange, certify, expected_invariants, generate
from .bounds import (BoundGraph, Derivation, Fixpoint, Interval, MissingFacts,
                     UnsupportedComponents, propagate, split_obstruction)
from .proofs import reorientation_bound
from .dsl import ParseError, parse, render_text
from .render import RenderSpec, from_ascii, render, to_ascii, to_svg

__version__ = "0.1.0"

import numpy as np
import pytest
from hypothesis import given

from legfront import (Event, FrontWord, InvalidFront, Kind, LEFTWARD, OverrideOutOfRange,
                      RIGHTWARD, replay, strands_at, trace_components, validate)
from wordgen import words

TREFOIL = "L1 L3 X2 X2 X2 R1 R1"


def test_unknot_is_valid():
    assert validate(FrontWord.knot("L1 R1")).ok


def test_trefoil_is_valid():
    assert validate(FrontWord.knot(TREFOIL))


def test_lone_crossing_fails_at_index_zero():
    rep = validate(FrontWord.knot("X1"))
    assert not rep.ok
    assert rep.index == 0
    assert rep.reason == "crossing needs two strands"


@pytest.mark.parametrize("word, index, reason", [
    (FrontWord.knot("L1"), 1, "strand count ends at 2, expected 0"),
    (FrontWord.knot("R1"), 0, "right cusp needs two strands"),
    (FrontWord.knot("L2 R1"), 0, "left cusp level above the strand stack"),
    (FrontWord.knot("L1 X2 R1"), 1, "crossing needs two strands"),
    (FrontWord.pattern(2, "L4 R3"), 0, "left cusp level above the strand stack"),
    (FrontWord.pattern(1, "L1 R2 R1"), 2, "right cusp needs two strands"),
])
def test_validation_reports_first_bad_event(word, index, reason):
    rep = validate(word)
    assert (rep.ok, rep.index, rep.reason) == (False, index, reason)


def test_negative_or_zero_level_is_reported():
    word = FrontWord.from_arrays(np.array([0, 1], dtype=np.int8), np.array([0, 1]))
    assert validate(word).reason == "level must be positive"


def test_replay_of_invalid_word_raises():
    with pytest.raises(InvalidFront):
        trace_components(FrontWord.knot("X1"))


def test_unknot_strands_point_opposite_ways():
    f = trace_components(FrontWord.knot("L1 R1"))
    assert f.n_components == 1
    assert sorted(f.directions.tolist()) == [-1, 1]


def test_trefoil_crossing_strands_both_leftward():
    # hand trace: strands 0,1 from L1, strands 2,3 from L3; the crossing
    # region at levels 2,3 holds strands 1 and 2
    f = trace_components(FrontWord.knot(TREFOIL))
    assert f.n_components == 1
    assert f.directions.tolist() == [1, -1, -1, 1]
    involved = {s for _, o, u in f.crossings for s in (o, u)}
    assert involved == {1, 2}
    assert all(f.directions[s] == LEFTWARD for s in involved)


def test_identity_pattern_has_winding_one():
    f = trace_components(FrontWord.pattern(1))
    assert f.n_components == 1
    assert f.winding == 1


def test_closed_front_has_no_winding():
    assert trace_components(FrontWord.knot("L1 R1")).winding is None


def test_seam_strands_glue_across_the_edge():
    # one crossing on two seam strands swaps them: a single component
    assert trace_components(FrontWord.pattern(2, "X1")).n_components == 1
    assert trace_components(FrontWord.pattern(2)).n_components == 2


def test_override_out_of_range():
    with pytest.raises(OverrideOutOfRange):
        trace_components(FrontWord.knot("L1 R1", [(1, LEFTWARD)]))


def test_override_flips_reference_strand():
    f = trace_components(FrontWord.knot("L1 R1", [(0, "L")]))
    assert f.directions[f.reference_strand(0)] == LEFTWARD


def test_event_parsing():
    assert Event.parse("X12") == (Kind.CROSSING, 12)
    assert str(Event.parse("L3")) == "L3"
    for bad in ("Y1", "L0", "L", "X-1", "l1"):
        with pytest.raises(ValueError):
            Event.parse(bad)


def test_word_is_immutable_and_hashable():
    w = FrontWord.knot(TREFOIL)
    with pytest.raises(AttributeError):
        w.seam = 3
    with pytest.raises(ValueError):
        w.kinds[0] = 1
    assert w == FrontWord.knot(TREFOIL)
    assert hash(w) == hash(FrontWord.knot(TREFOIL))
    assert w != FrontWord.pattern(0, TREFOIL)


def test_word_sequence_access():
    w = FrontWord.pattern(2, "X1 L2 R2")
    assert len(w) == 3
    assert w[1] == Event(Kind.LEFT_CUSP, 2)
    assert [str(e) for e in w] == ["X1", "L2", "R2"]
    assert w.tokens() == "X1 L2 R2"
    assert "pattern(2" in repr(w)
    assert w.strand_counts().tolist() == [2, 2, 4, 2]


def test_strands_at_column():
    w = FrontWord.knot(TREFOIL)
    assert strands_at(w, 2) == [0, 1, 2, 3]
    assert strands_at(w, 3) == [0, 2, 1, 3]


def test_probe_out_of_range():
    with pytest.raises(ValueError):
        replay(FrontWord.knot("L1 R1"), [(1, 3)])


@given(words())
def test_strand_count_returns_to_start(w):
    assert validate(w).ok
    assert w.strand_counts()[-1] == w.initial_strands


@given(words())
def test_tracing_is_deterministic(w):
    a, b = trace_components(w), trace_components(w)
    assert np.array_equal(a.directions, b.directions)
    assert a.components == b.components
    assert validate(w) == validate(w)


@given(words())
def test_every_strand_in_one_component(w):
    f = trace_components(w)
    seen = sorted(s for comp in f.components for s in comp)
    assert seen == list(range(f.trace.n_strands))
    assert set(f.directions.tolist()) <= {LEFTWARD, RIGHTWARD}


@given(words())
def test_directions_reverse_at_cusps_only(w):
    f = trace_components(w)
    t = f.trace
    for lo, hi in zip(t.lcusp_lower.tolist(), t.lcusp_upper.tolist()):
        assert f.directions[lo] == -f.directions[hi]
    for lo, hi in zip(t.rcusp_lower.tolist(), t.rcusp_upper.tolist()):
        assert f.directions[lo] == -f.directions[hi]


@given(words())
def test_reversing_one_component_changes_only_it(w):
    f = trace_components(w)
    for c in range(f.n_components):
        g = f.reoriented([(c, LEFTWARD)])
        mask = f.component_of == c
        assert np.array_equal(g.directions[mask], -f.directions[mask])
        assert np.array_equal(g.directions[~mask], f.directions[~mask])


@given(words(closed=False))
def test_winding_is_seam_direction_sum(w):
    f = trace_components(w)
    assert f.winding == int(sum(f.directions[:w.seam]))
    assert abs(f.winding) <= w.seam
    assert (f.winding - w.seam) % 2 == 0

import pytest
from hypothesis import given, strategies as st

from legfront import (FrontWord, MoveSite, StaleSite, apply, apply_tracked, find_sites, generate,
                      invariants_of, inverse_site, perturb, trace_components, validate)
from wordgen import words

UNKNOT = FrontWord.knot("L1 R1")


def test_unknot_only_has_enlarging_sites():
    sites = find_sites(UNKNOT)
    assert sites
    for s in sites:
        assert len(apply(UNKNOT, s)) > len(UNKNOT)


def test_empty_word_has_no_sites():
    assert find_sites(FrontWord.knot()) == []


def test_trefoil_has_no_r3_site():
    # three stacked crossings on the same pair of levels, X2 X2 X2, are not
    # the X(k) X(k+1) X(k) shape a triple-point move needs
    sites = find_sites(generate("trefoil"))
    assert not [s for s in sites if s.move == "R3"]
    assert {s.move for s in sites} >= {"R1", "R2"}


def test_r3_site_found_and_applied():
    w = FrontWord.pattern(3, "X1 X2 X1")
    sites = [s for s in find_sites(w) if s.move == "R3"]
    assert sites == [MoveSite("R3", 0, "lower", 1)]
    assert apply(w, sites[0]).tokens() == "X2 X1 X2"


def test_apply_then_inverse_restores_word():
    w = generate("trefoil")
    for s in find_sites(w):
        moved = apply(w, s)
        assert apply(moved, inverse_site(s)) == w


def test_every_move_on_trefoil_keeps_tb_and_rot():
    w = generate("trefoil")
    for s in find_sites(w):
        r = invariants_of(apply(w, s))
        assert (r.tb, r.rot) == (1, 0)


def test_r2_needs_a_strand_to_slide():
    # the lone unknot has no second strand to pass through a cusp
    assert not [s for s in find_sites(UNKNOT) if s.move == "R2"]
    with pytest.raises(StaleSite):
        apply(UNKNOT, MoveSite("R2", 0, "left-asc-add", 1))


def test_r2_insertion_next_to_unknot():
    # a strand of a second unknot below slides up through the cusp
    w = FrontWord.knot("L1 L1 R1 R1")
    s = MoveSite("R2", 1, "left-asc-add", 1)
    moved = apply(w, s)
    assert moved.tokens() == "L1 L2 X1 X2 R1 R1"
    assert invariants_of(moved).tb == invariants_of(w).tb


def test_stale_sites_are_rejected():
    with pytest.raises(StaleSite):
        apply(UNKNOT, MoveSite("R3", 0, "lower", 1))
    with pytest.raises(StaleSite):
        apply(UNKNOT, MoveSite("R1", 0, "add-up", 2))
    with pytest.raises(StaleSite):
        apply(UNKNOT, MoveSite("C", 0, "swap", 0))
    with pytest.raises(StaleSite):
        apply(UNKNOT, MoveSite("R9", 0, "x", 1))


def test_commutation_swaps_far_apart_events():
    w = FrontWord.pattern(4, "X1 X3")
    sites = [s for s in find_sites(w) if s.move == "C"]
    assert apply(w, sites[0]).tokens() == "X3 X1"


def test_perturb_unknot_seeds():
    for seed in (1, 2, 3):
        w = perturb(UNKNOT, 12, seed)
        assert validate(w).ok
        r = invariants_of(w)
        assert (r.tb, r.rot) == (-1, 0)


def test_perturb_zero_steps_is_identity():
    assert perturb(generate("W"), 0, 5) == generate("W")


def test_perturb_is_reproducible():
    assert perturb(generate("Q", 2), 15, 99) == perturb(generate("Q", 2), 15, 99)


def test_component_map_on_links():
    w = generate("L", 1)
    for s in find_sites(w):
        moved, cmap = apply_tracked(w, s)
        assert sorted(cmap.values()) == [0, 1]
        a, b = invariants_of(w), invariants_of(moved)
        for c, nc in cmap.items():
            assert a.component_tb[c] == b.component_tb[nc]
            assert a.component_rot[c] == b.component_rot[nc]


@given(words(max_events=16), st.integers(0, 10 ** 6))
def test_random_move_preserves_everything(w, pick):
    sites = find_sites(w)
    if not sites:
        return
    site = sites[pick % len(sites)]
    moved, cmap = apply_tracked(w, site)
    assert validate(moved).ok
    assert moved.seam == w.seam
    a, b = invariants_of(w), invariants_of(moved)
    assert a.components == b.components == len(cmap)
    assert (a.tb, a.rot, a.winding) == (b.tb, b.rot, b.winding)
    for c, nc in cmap.items():
        assert a.component_tb[c] == b.component_tb[nc]
        assert a.component_rot[c] == b.component_rot[nc]
        for d, nd in cmap.items():
            assert a.linking[c][d] == b.linking[nc][nd]
    assert apply(moved, inverse_site(site)).tokens() == w.tokens()
    assert trace_components(moved).n_components == a.components

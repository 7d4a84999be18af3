import math

import pytest
from hypothesis import given, strategies as st

from legfront import (BoundGraph, FrontWord, Interval, MissingFacts, UnsupportedComponents,
                      propagate, split_obstruction)
from legfront.bounds import slice_bennequin_bounds, tau_interval_sum
from legfront.dsl import ParseError, UnknownDirective, dump
from legfront.families import generate
from legfront.proofs import (ANNULUS_UPPER, CLASP_UPPER, cable_graph, clasp_graph,
                             link_tau_graph, reorientation_bound, satellite_data,
                             split_verdicts, link_graph)
from legfront.scenario import format_result, parse_scenario, run_scenario


def test_slice_bennequin_examples():
    assert slice_bennequin_bounds(2 * 4 - 1, 0, 1)[:2] == (4, 4)        # Q_4(K)
    assert slice_bennequin_bounds(7 - 1, 7, 1)[:2] == (7, 7)            # P_7(K)
    assert slice_bennequin_bounds(2 * 3, 0, 2)[:2] == (4, 3)            # l_3
    with pytest.raises(UnsupportedComponents):
        slice_bennequin_bounds(0, 0, 3)


def test_slice_bennequin_from_front():
    g = BoundGraph()
    g.add_node("T", 1, front=generate("trefoil"))
    g.slice_bennequin("T")
    fix = propagate(g)
    assert fix.tau("T").lo == 1 and fix.g4("T").lo == 1
    g.add_node("U3", 3, front=FrontWord.knot("L1 R1 L1 R1 L1 R1"))
    with pytest.raises(UnsupportedComponents):
        g.slice_bennequin("U3")
    g.add_node("bare", 1)
    with pytest.raises(MissingFacts):
        g.slice_bennequin("bare")


def test_assert_upper_records_provenance():
    g = BoundGraph()
    g.add_node("l0", 2)
    rule = g.assert_upper("l0", 0, "annulus")
    assert rule.provenance == "annulus"
    fix = propagate(g)
    assert fix.g4("l0") == Interval(0, 0)


def test_empty_graph():
    fix = propagate(BoundGraph())
    assert fix.intervals == {} and fix.derivation.steps == ()
    assert not fix.contradictory


def test_fresh_node_is_unbounded_above():
    g = BoundGraph()
    g.add_node("A", 1)
    fix = propagate(g)
    assert fix.g4("A") == Interval(0, math.inf)
    assert str(fix.g4("A")) == "[0, +inf]"
    assert str(fix.tau("A")) == "[-inf, +inf]"


def test_link_bands_at_six():
    g = BoundGraph()
    for nid in ("Q6", "Q7"):
        g.add_node(nid, 1)
    g.add_node("l6", 2)
    for i in (6, 7):
        tb, rot, _ = satellite_data("Q", i)
        g.slice_bennequin(f"Q{i}", tb, rot)
    g.assert_upper("Q6", 6, "clasp chain")
    g.band("l6", "Q6")
    g.band("l6", "Q7")
    fix = propagate(g)
    assert fix.g4("l6") == Interval(6, 6)


def test_clasp_chain_to_five():
    fix = propagate(clasp_graph(5))
    for i in range(1, 6):
        assert fix.g4(f"Q{i}") == Interval(i, i)
        assert fix.tau(f"Q{i}") == Interval(i, i)


def test_cable_and_clasp_provenance():
    fix = propagate(cable_graph(4))
    names = {st.rule.name for st in fix.support("P3")}
    assert "slice-Bennequin" in names and "asserted upper bound" in names
    assert any("parallel copies" in st.rule.provenance for st in fix.support("P3"))
    fix = propagate(clasp_graph(4))
    chain = fix.support("Q4", "g4")
    assert any(st.rule.provenance == CLASP_UPPER for st in chain)
    assert sum(st.rule.name == "crossing change" for st in chain) == 3


def test_tau_algebra():
    assert tau_interval_sum(Interval(3, 3), Interval(4, 4)) == Interval(7, 7)
    g = BoundGraph()
    g.add_node("U", 1)
    g.assert_upper("U", 0, "unknot")
    g.tau_algebra([("reverse", "rU", "U")])
    fix = propagate(g)
    assert fix.tau("rU") == Interval(0, 0)
    with pytest.raises(ValueError):
        g.tau_algebra([("mirror", "mU", "U")])


def test_tau_of_cable_sum():
    i = 3
    g = cable_graph(i + 1)
    g.reverse("rC", f"P{i + 1}")
    g.connected_sum("S", f"P{i + 1}", "rC")
    fix = propagate(g)
    assert fix.tau("S") == Interval(2 * (i + 1), 2 * (i + 1))


def test_split_obstruction_examples():
    verdicts = split_verdicts(2)
    assert verdicts[2].contradiction
    assert (verdicts[2].link_g4, verdicts[2].sum_tau) == (2, 6)
    assert verdicts[0].contradiction
    assert (verdicts[0].link_g4, verdicts[0].sum_tau) == (0, 2)
    # the named hypothesis shows up in the derivation, flagged as an axiom
    steps = verdicts[2].fixpoint.derivation.steps
    assert any(st.rule.axiom and st.rule.name == "split hypothesis" for st in steps)


def test_split_obstruction_inconclusive():
    g = BoundGraph()
    g.add_node("link", 2)
    g.add_node("C", 1)
    g.assert_upper("link", 10, "mock")
    g.assert_lower("link", 10, "mock")
    g.assert_tau("C", 2, 2, "mock")
    v = split_obstruction(g, "link", "C")
    assert v.outcome == "inconclusive"
    assert (v.link_g4, v.sum_tau) == (10, 4)


def test_split_obstruction_needs_exact_facts():
    g = BoundGraph()
    g.add_node("link", 2)
    g.add_node("C", 1)
    g.assert_tau("C", 2, 2, "mock")
    with pytest.raises(MissingFacts):
        split_obstruction(g, "link", "C")


@pytest.mark.parametrize("i,bound", [(0, 1), (1, 3), (10, 21)])
def test_reorientation_bound(i, bound):
    assert reorientation_bound(i).lower == bound


def test_band_rules_compose_to_crossing_change_bound():
    g = BoundGraph()
    g.add_node("Qi", 1)
    g.add_node("Qn", 1)
    g.add_node("l", 2)
    g.assert_upper("Qi", 5, "pin")
    g.assert_lower("Qi", 5, "pin")
    g.band("l", "Qi")
    g.band("l", "Qn")
    fix = propagate(g)
    assert fix.g4("Qn") == Interval(4, 6)


def test_band_endpoint_rule():
    g = BoundGraph()
    g.add_node("A", 1)
    g.add_node("B", 1)
    with pytest.raises(ValueError):
        g.band("A", "B")
    g.add_node("L", 2)
    with pytest.raises(ValueError):
        g.crossing_change("A", "L")


def test_contradiction_is_a_result():
    g = BoundGraph()
    g.add_node("A", 1)
    g.assert_upper("A", 1, "x")
    g.assert_tau("A", 3, None, "y")
    fix = propagate(g)
    assert fix.contradictory
    assert fix.contradiction.node == "A"


@pytest.mark.parametrize("build", [lambda: cable_graph(6), lambda: clasp_graph(6),
                                   lambda: link_graph(6), lambda: link_tau_graph(6)])
def test_derivations_replay(build):
    fix = propagate(build())
    assert fix.derivation.replay() == fix.intervals


def test_link_tau_graph_is_sharp():
    fix = propagate(link_tau_graph(20))
    for i in range(21):
        assert fix.g4(f"l{i}") == Interval(i, i)
        assert fix.tau(f"l{i}") == Interval(i + 1, i + 1)
    assert any(st.rule.provenance == ANNULUS_UPPER for st in fix.support("l0"))


def test_formula_and_front_methods_agree():
    for name, i in (("P", 5), ("Q", 4), ("L", 3)):
        assert satellite_data(name, i, "front") == satellite_data(name, i, "formula")


_edges = st.lists(st.tuples(st.sampled_from(["x", "c", "b"]), st.integers(0, 5),
                            st.integers(0, 5), st.integers(0, 3)), max_size=12)
_facts = st.lists(st.tuples(st.sampled_from(["up", "sb", "tau"]), st.integers(0, 5),
                            st.integers(-3, 8)), max_size=10)


@given(_edges, _facts)
def test_random_graphs_reach_a_sound_fixpoint(edges, facts):
    g = BoundGraph()
    comps = [1, 1, 2, 1, 2, 1]
    for k, c in enumerate(comps):
        g.add_node(f"n{k}", c)
    for kind, a, b, cost in edges:
        if a == b:
            continue
        try:
            if kind == "x":
                g.crossing_change(f"n{a}", f"n{b}")
            elif kind == "c":
                g.cobordism(f"n{a}", f"n{b}", cost)
            else:
                g.band(f"n{a}", f"n{b}")
        except ValueError:
            pass
    for kind, a, v in facts:
        if kind == "up":
            g.assert_upper(f"n{a}", max(v, 0), "random")
        elif kind == "sb":
            g.slice_bennequin(f"n{a}", v, 0)
        else:
            g.assert_tau(f"n{a}", v - 1, v + 1, "random")
    fix = propagate(g)
    assert fix.derivation.replay() == fix.intervals
    # steps only ever tighten
    for st_ in fix.derivation.steps:
        if st_.target[2] == "lo":
            assert st_.value > st_.before
        else:
            assert st_.value < st_.before
    if not fix.contradictory:
        state = {(n, q, s): getattr(fix.intervals[(n, q)], s)
                 for (n, q) in fix.intervals for s in ("lo", "hi")}
        for rule in g.rules:
            v = rule.evaluate(state)
            if v is None:
                continue
            cur = state[rule.target]
            assert (cur >= v) if rule.target[2] == "lo" else (cur <= v)
        for (n, q), iv in fix.intervals.items():
            assert iv.lo <= iv.hi


SCENARIO = """\
# clasp chain and one band pair
node K components 1
node Q1 components 1
node Q2 components 1
node Q3 components 1
node l1 components 2
node P2 components 1
sb Q1 tb 1 rot 0
sb Q2 tb 3 rot 0
sb Q3 tb 5 rot 0
sb P2 tb 1 rot 2
upper Q1 1 "clasped Whitehead double, Seifert genus 1"
upper P2 2 "two parallel copies"
xchange Q2 Q1
xchange Q3 Q2
band l1 Q1
band l1 Q2
tau K 1 1 "given"
reverse rK = r K
connectsum S = K # rK
cobordism Q3 P2 5 "loose"
split-check l1 P2
"""


def test_scenario_run():
    res = run_scenario(SCENARIO)
    fix = res.fixpoint
    assert fix.g4("Q3") == Interval(3, 3)
    assert fix.g4("l1") == Interval(1, 1)
    assert fix.tau("S") == Interval(2, 2)
    assert res.verdicts[0].contradiction
    text = format_result(res)
    assert "intervals:" in text and "derivation:" in text
    assert "split-check: l1" in text and "contradiction" in text
    assert "[axiom]" in text


def test_scenario_front_and_errors(tmp_path):
    dump(generate("trefoil"), tmp_path / "t.front")
    sc = parse_scenario("node T components 1 front t.front\nsb T\n", tmp_path)
    assert propagate(sc.graph).tau("T").lo == 1
    for text, exc in (("frobnicate A\n", UnknownDirective),
                      ("node A components\n", ParseError),
                      ("node A components 1\nupper A x \"p\"\n", ParseError),
                      ("band A B\n", ParseError),
                      ("node A components 1\nsplit-check A B\n", ParseError),
                      ('node A components 1\nupper A 1 "unterminated\n', ParseError),
                      ("node A components 1\nconnectsum S = A + A\n", ParseError)):
        with pytest.raises(exc):
            parse_scenario(text)


def test_scenario_missing_facts_is_reported():
    res = run_scenario("node l components 2\nnode C components 1\nsplit-check l C\n")
    assert "missing facts" in res.verdicts[0]

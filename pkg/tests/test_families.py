import pytest

from legfront import (GeneratorId, IndexOutOfRange, certify, compute, expected_invariants,
                      generate, invariants_of, legendrian_satellite, validate)


def test_companion_k():
    r = invariants_of(generate("K"))
    assert (r.tb, r.rot, r.components) == (0, 1, 1)
    assert generate("K") == legendrian_satellite(generate("W"), generate("J")).word


def test_q1():
    r = invariants_of(generate("Q", 1))
    assert (r.tb, r.rot, r.winding) == (1, 0, 0)


def test_l5():
    r = invariants_of(generate("L", 5))
    assert (r.tb, r.rot, r.winding, r.components) == (10, 0, 0, 2)


def test_p1_over_k_is_k():
    r = compute(legendrian_satellite(generate("P", 1), generate("K")))
    assert (r.tb, r.rot) == (0, 1)


@pytest.mark.parametrize("name", ["W", "unknot", "trefoil", "twist-pattern", "twist-satellite",
                                  "J", "K"])
def test_certify_named(name):
    c = certify(name)
    assert c.ok, c.rows


def test_certify_p10():
    c = certify("P", 10)
    assert c.ok
    assert dict((k, v) for k, _, v in c.rows) == {"tb": 9, "rot": 0, "winding": 10,
                                                  "components": 1}


@pytest.mark.parametrize("name,lo", [("P", 1), ("Q", 1), ("L", 0)])
def test_certify_families_up_to_30(name, lo):
    for i in range(lo, 31):
        c = certify(GeneratorId(name, i))
        assert c.ok, (name, i, c.rows)
        assert validate(generate(name, i)).ok


def test_pattern_shapes():
    for i in range(1, 6):
        assert generate("P", i).seam == i
        assert generate("Q", i).seam == 2 * i
        assert invariants_of(generate("Q", i)).components == 1
    for i in range(0, 6):
        assert generate("L", i).seam == 2 * i + 2


def test_expected_table():
    assert expected_invariants("Q", 3) == {"tb": 5, "rot": 0, "winding": 0, "components": 1}
    assert expected_invariants("K")["winding"] is None


def test_index_rules():
    for bad in (("P", 0), ("Q", 0), ("L", -1), ("P", None), ("W", 2)):
        with pytest.raises(IndexOutOfRange):
            GeneratorId(*bad)
    with pytest.raises(ValueError):
        GeneratorId("Z")
    assert str(GeneratorId("L", 0)) == "L(0)"
    assert GeneratorId("TwistP").name == "twist-pattern"


def test_boundary_link_linking_numbers():
    for i in range(0, 8):
        r = compute(legendrian_satellite(generate("L", i), generate("K")))
        assert r.linking[0][1] == 0

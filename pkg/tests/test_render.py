import xml.etree.ElementTree as ET

import pytest
from hypothesis import given

from legfront import FrontWord, RenderSpec, from_ascii, generate, render, to_ascii, to_svg
from wordgen import words

SVG = "{http://www.w3.org/2000/svg}"


def test_unknot_svg_has_two_cusps():
    root = ET.fromstring(to_svg(FrontWord.knot("L1 R1")))
    assert root.tag == SVG + "svg"
    cusps = [e for e in root.iter() if e.get("class") == "cusp"]
    assert len(cusps) == 2


def test_crossings_break_the_under_strand():
    root = ET.fromstring(to_svg(generate("trefoil")))
    classes = [e.get("class") for e in root.iter()]
    assert classes.count("over") == 3
    assert classes.count("under") == 6


def test_svg_options():
    text = render(generate("L", 1), RenderSpec("svg", 2.0, labels=True, levels=True))
    root = ET.fromstring(text)
    labels = [e.text for e in root.iter(SVG + "text")]
    assert "X1" in labels and "4" in labels
    assert float(root.get("width")) > 0
    mono = to_svg(generate("L", 1), RenderSpec(color=False))
    assert "#b3261e" not in mono


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec("png")
    with pytest.raises(ValueError):
        RenderSpec("svg", 0)


def test_ascii_trefoil():
    assert to_ascii(generate("trefoil")) == (
        "knot\n"
        "     /------------------\n"
        "     \\---\\/--\\/--\\/-----\n"
        " /-------/\\--/\\--/\\---\\ --\\\n"
        " \\--------------------/ --/\n")


def test_ascii_rejects_garbage():
    with pytest.raises(ValueError):
        from_ascii("knot\n ?--\n")
    with pytest.raises(ValueError):
        from_ascii("loop\n")
    with pytest.raises(ValueError):
        from_ascii("knot\n /--\n")


@given(words())
def test_ascii_round_trip(w):
    assert from_ascii(to_ascii(w)) == w


@given(words(max_events=12))
def test_svg_is_well_formed(w):
    root = ET.fromstring(to_svg(w))
    cusps = [e for e in root.iter() if e.get("class") == "cusp"]
    assert len(cusps) == int((w.kinds != 2).sum())

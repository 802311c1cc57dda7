import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcrope import catalog
from arcrope.arcpres import DuplicatePage, LevelOutOfRange, random_presentation, skip, validate
from arcrope.builder import build
from arcrope.curve import length
from arcrope.formats import ParseError, emit_curve, emit_presentation, parse_curve, parse_presentation
from conftest import circle, stadium

TREFOIL = """arcpres alpha=5
1 3 1/5
3 5 3/5
5 2 0
2 4 2/5
4 1 4/5
"""


def test_trefoil_file():
    A = parse_presentation(TREFOIL)
    assert A.alpha == 5
    assert skip(A) == 12


def test_decimal_radians():
    A = parse_presentation("arcpres alpha=3\n1 2 0.5\n2 3 1.5  # comment\n3 1 3.0\n")
    assert [a.theta for a in A.arcs] == [0.5, 1.5, 3.0]
    assert all(a.turns is None for a in A.arcs)


def test_duplicate_page_line_number():
    text = "arcpres alpha=3\n# pages\n1 2 1/3\n2 3 2/3\n3 1 1/3\n"
    with pytest.raises(DuplicatePage) as ei:
        parse_presentation(text)
    assert ei.value.line == 5
    assert "line 5" in str(ei.value)


def test_empty_file():
    with pytest.raises(ParseError):
        parse_presentation("")
    with pytest.raises(ParseError):
        parse_presentation("# only a comment\n\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("arcpres alpha=3\n1 2 0\n2 3 1\n", 1),
        ("arcpress alpha=3\n", 1),
        ("arcpres alpha=2\n1 2 0\n2 x 1\n", 3),
        ("arcpres alpha=2\n1 2 0\n2 1\n", 3),
        ("arcpres alpha=2\n1 2 0\n2 1 1/0\n", 3),
        ("arcpres alpha=2\n1 2 0\n2 1 nan\n", 3),
    ],
)
def test_malformed(text, line):
    with pytest.raises(ParseError) as ei:
        parse_presentation(text)
    assert ei.value.line == line


def test_sparse_levels_need_renumbering():
    with pytest.raises(LevelOutOfRange) as ei:
        parse_presentation("arcpres alpha=3\n1 3 0\n3 4 1\n4 1 2\n")
    assert "renumber" in str(ei.value)
    assert ei.value.line == 3


def test_golden_files_round_trip():
    for name in ("3_1", "3_1m"):
        A = catalog.load(name)
        assert parse_presentation(emit_presentation(A)) == A
    assert catalog.load("3_1m") == catalog.load("3_1").mirror()


def test_bound_only_entry():
    e = catalog.entry("7_1")
    assert e.bound_only and e.crossing_number == 7
    with pytest.raises(LookupError):
        catalog.load("7_1")


@settings(max_examples=60, deadline=None)
@given(alpha=st.integers(2, 25), seed=st.integers(0, 2**32 - 1), exact=st.booleans())
def test_presentation_round_trip(alpha, seed, exact):
    A = random_presentation(alpha, random.Random(seed))
    if not exact:
        A = validate([(a.x, a.y, a.theta) for a in A.arcs])
    B = parse_presentation(emit_presentation(A))
    assert B == A
    assert [a.turns for a in B.arcs] == [a.turns for a in A.arcs]


@pytest.mark.parametrize("make", [circle, stadium])
def test_curve_round_trip_simple(make):
    c = make()
    d = parse_curve(emit_curve(c))
    assert length(d) == pytest.approx(length(c), rel=1e-12)


def test_curve_round_trip_build():
    rng = random.Random(3)
    for alpha in (3, 6, 9):
        c = build(random_presentation(alpha, rng))
        d = parse_curve(emit_curve(c))
        assert len(d.pieces) == len(c.pieces)
        assert abs(length(d) - length(c)) <= 1e-12 * length(c)


def test_multi_loop_blocks():
    A = validate([(1, 3, 0.0), (3, 1, 1.0), (2, 4, 2.0), (4, 2, 3.0)])
    c = build(A)
    text = emit_curve(c)
    assert text.count("curve closed=1") == 2
    d = parse_curve(text)
    assert d.loop_sizes == c.loop_sizes


def test_curve_header_format():
    head = emit_curve(circle()).splitlines()[0]
    assert head == "curve closed=1 pieces=1"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "seg 0 0 0 1 0 0\n",
        "curve closed=1 pieces=2\nseg 0 0 0 1 0 0\n",
        "curve closed=1 pieces=1\nbox 0 0 0\n",
        "curve closed=1 pieces=1\nseg 0 0 0 1 0\n",
        "curve closed=1 pieces=1\nseg 0 0 0 a 0 0\n",
        "curve closed=1 pieces=1\nseg 0 0 0 0 0 0\n",
        "curve closed=1 pieces=1\narc 0 0 0 0 0 1 0 0 0 1\n",
    ],
)
def test_bad_curve_files(text):
    with pytest.raises(ParseError):
        parse_curve(text)

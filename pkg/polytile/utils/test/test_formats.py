#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import pytest

from polytile.engine.universe import TORUS, Placement
from polytile.engine.wang import WangAssignment
from polytile.exceptions import FormatError
from polytile.utils import formats

ALTERNATING = """
# comment line
wang 2 2
tile a N=1 E=2 S=1 W=1   # trailing comment
tile b N=1 E=1 S=1 W=2
"""


def test_parse_wang():
    tiles = formats.parse_wang(ALTERNATING)
    assert tiles.n == 2 and tiles.m == 2
    assert tiles.tiles[1].name == "b"
    assert tiles.tiles[1].west == 2
    assert formats.parse_wang(formats.emit_wang(tiles)) == tiles


@pytest.mark.parametrize(
    "text, line",
    [
        ("tile a N=1 E=1 S=1 W=1", 1),
        ("wang 1 two", 1),
        ("wang 1 2\ntile a N=1 E=1 S=1", 2),
        ("wang 1 2\ntile a N=1 E=1 S=1 Q=1", 2),
        ("wang 1 2\ntile a N=1 N=1 S=1 W=1", 2),
        ("wang 1 2\nplace a", 2),
        ("wang 2 2\ntile a N=1 E=1 S=1 W=1", None),
        ("wang 1 2\ntile a N=3 E=1 S=1 W=1", None),
        ("", None),
    ],
)
def test_parse_wang_errors(text, line):
    with pytest.raises(FormatError) as e:
        formats.parse_wang(text, path="t.wang")
    assert e.value.line == line
    assert e.value.path == "t.wang"


def test_poly():
    pieces = formats.parse_poly("poly bar\nword r3 d l3 u\npoly c\nword r d l u\n")
    assert list(pieces) == ["bar", "c"]
    assert pieces["bar"].area == 3
    assert formats.parse_poly(formats.emit_poly(pieces)) == pieces


@pytest.mark.parametrize(
    "text",
    [
        "word r d l u",
        "poly a\npoly b\nword r d l u",
        "poly a\nword r d l u\npoly a\nword r d l u",
        "poly a",
        "poly a\nword r d l",
        "poly a\nword r x",
        "shape a",
    ],
)
def test_poly_errors(text):
    with pytest.raises(FormatError):
        formats.parse_poly(text)


def test_graph():
    graph = formats.parse_graph("node a\nnode b\nedge a b\nedge b b\n")
    assert graph.nodes == ["a", "b"]
    assert graph.adjacent("a", "b") and graph.adjacent("b", "b")
    again = formats.parse_graph(formats.emit_graph(graph))
    assert again.nodes == graph.nodes
    assert sorted(again.edges) == sorted(graph.edges)
    with pytest.raises(FormatError) as e:
        formats.parse_graph("node a\nedge a z\n")
    assert e.value.line == 2


def test_tiling():
    text = "region torus 4 2\nmeta mode rotation\nplace rod 1 -3 7\n"
    tiling = formats.parse_tiling(text)
    assert tiling.region.kind == TORUS
    assert tiling.placements == [Placement("rod", 1, -3, 7)]
    assert tiling.metadata == {"mode": "rotation"}
    assert formats.emit_tiling(tiling) == text


@pytest.mark.parametrize(
    "text",
    [
        "place rod 0 0 0",
        "region disk 2 2",
        "region rect 2 2\nregion rect 2 2",
        "region rect 2 2\nplace rod 4 0 0",
        "region rect 2 2\nplace rod 0 zero 0",
        "region rect 2 2\nmeta",
        "",
    ],
)
def test_tiling_errors(text):
    with pytest.raises(FormatError):
        formats.parse_tiling(text)


def test_assignment():
    tiles = formats.parse_wang(ALTERNATING)
    assignment = formats.parse_assignment("torus 2 2\na b\nb a\n", tiles)
    assert assignment.grid == ((0, 1), (1, 0))
    assert formats.emit_assignment(assignment, tiles) == "torus 2 2\na b\nb a\n"
    assert assignment == WangAssignment(2, 2, ((0, 1), (1, 0)))


@pytest.mark.parametrize(
    "text",
    ["a b", "torus 2 1\na", "torus 2 1\na c", "torus 2 2\na b", "torus 0 0"],
)
def test_assignment_errors(text):
    tiles = formats.parse_wang(ALTERNATING)
    with pytest.raises(FormatError):
        formats.parse_assignment(text, tiles)


def test_label_words():
    words = formats.parse_label_words("label M r100 d100\nlabel X' r207\n")
    assert words == {"M": "r100 d100", "X'": "r207"}
    with pytest.raises(FormatError):
        formats.parse_label_words("label M\n")
    with pytest.raises(FormatError):
        formats.parse_label_words("label M r1\nlabel M r2\n")


def test_load_and_save(tmp_path):
    path = tmp_path / "a.wang"
    formats.save(str(path), ALTERNATING)
    assert formats.load(str(path), formats.parse_wang).n == 2
    with pytest.raises(FormatError) as e:
        formats.load(str(tmp_path / "missing.wang"), formats.parse_wang)
    assert "missing.wang" in str(e.value)

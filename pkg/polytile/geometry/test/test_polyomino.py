#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import numpy as np
import pytest

from polytile.exceptions import (
    DisconnectedPolyominoError,
    OpenWordError,
    SelfIntersectingWordError,
)
from polytile.geometry.polyomino import (
    Polyomino,
    congruent_by_translation,
    merge_intervals,
    polyomino_to_word,
    rotate_cell,
    rotate_vertex,
    rotated_origin,
    word_to_polyomino,
)
from polytile.geometry.words import TOOTH_OUTLINE, emit_word, parse_word

L_TROMINO = [(0, 0), (1, 0), (0, 1)]


def test_merge_intervals():
    assert merge_intervals([(3, 5), (0, 2), (2, 3), (7, 7)]) == ((0, 5),)
    assert merge_intervals([(4, 6), (0, 1)]) == ((0, 1), (4, 6))


def test_from_cells_canonical():
    poly = Polyomino.from_cells([(x + 5, y - 2) for x, y in L_TROMINO])
    assert poly.rows == (((0, 2),), ((0, 1),))
    assert poly.origin == (5, -2)
    assert poly.area == 3
    assert poly.bbox == (2, 2)
    assert sorted(poly.world_cells()) == sorted((x + 5, y - 2) for x, y in L_TROMINO)
    assert poly.contains(1, 0) and not poly.contains(1, 1)


def test_disconnected_rejected():
    with pytest.raises(DisconnectedPolyominoError):
        Polyomino.from_cells([(0, 0), (2, 0)])
    with pytest.raises(DisconnectedPolyominoError):
        Polyomino.from_cells([])
    # diagonal neighbours are not connected
    with pytest.raises(DisconnectedPolyominoError):
        Polyomino.from_cells([(0, 0), (1, 1)])


def test_dense_round_trip():
    grid = np.array([[1, 1, 0], [0, 1, 1]], dtype=bool)
    poly = Polyomino.from_dense(grid)
    assert np.array_equal(poly.to_dense(), grid)
    assert poly.interval_count == 2


def test_rotate():
    poly = Polyomino.from_cells(L_TROMINO)
    turned = poly.rotate(1)
    assert sorted(turned.cells()) == [(0, 0), (1, 0), (1, 1)]
    assert turned.origin == (-2, 0)
    assert sorted(turned.world_cells()) == sorted(rotate_cell(c, 1) for c in L_TROMINO)
    assert poly.rotate(4) == poly
    assert poly.rotate(2).rotate(2) == poly


def test_rotate_rectangle_origin():
    bar = Polyomino.rectangle(3, 1)
    upright = bar.rotate(1)
    assert upright.bbox == (1, 3)
    assert upright.origin == rotated_origin((0, 0), (3, 1), 1) == (-1, 0)


def test_rotate_points():
    assert rotate_cell((0, 0), 1) == (-1, 0)
    assert rotate_cell((2, 1), 2) == (-3, -2)
    assert rotate_vertex((2, 1), 1) == (-1, 2)
    assert rotate_vertex((2, 1), 4) == (2, 1)


def test_word_to_polyomino():
    poly = word_to_polyomino(parse_word("r2 d l2 u"))
    assert poly.rows == (((0, 2),),)
    assert poly.origin == (0, -1)

    tooth = word_to_polyomino(parse_word(TOOTH_OUTLINE))
    assert tooth.area == 9
    assert tooth.bbox == (5, 5)


def test_word_to_polyomino_rejects():
    with pytest.raises(OpenWordError):
        word_to_polyomino(parse_word("r2 d"))
    with pytest.raises(SelfIntersectingWordError):
        word_to_polyomino(parse_word("r u l d l d r u"))


def test_polyomino_to_word():
    assert emit_word(polyomino_to_word(Polyomino.rectangle(2, 1))) == "r2 d l2 u"
    tooth = word_to_polyomino(parse_word(TOOTH_OUTLINE))
    assert congruent_by_translation(word_to_polyomino(polyomino_to_word(tooth)), tooth)


def test_polyomino_with_hole_has_no_word():
    ring = Polyomino.from_cells([(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)])
    with pytest.raises(SelfIntersectingWordError):
        polyomino_to_word(ring)

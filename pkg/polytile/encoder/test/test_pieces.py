#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
from collections import Counter
from itertools import product

import pytest

from polytile.constants import CATALOG_SCALE, Labels, PieceNames
from polytile.encoder.pieces import (
    I_SIDE,
    J_SIDE,
    ROTATION,
    TRANSLATION,
    Dimensions,
    blade_labels,
    blade_word,
    color_section,
    encode,
    rod_bottom,
    rod_labels,
    rod_top,
    rod_word,
)
from polytile.encoder.tiles import WangTileSet
from polytile.exceptions import TileSetError
from polytile.geometry.polyomino import word_to_polyomino
from polytile.geometry.words import is_closed, is_simple

# north, east, south, west
MIXED = WangTileSet.from_colors(3, [(1, 2, 3, 1), (3, 3, 2, 2)])


def cycling_tiles(n, m):
    return WangTileSet.from_colors(
        m, [tuple((i + k) % m + 1 for k in range(4)) for i in range(n)]
    )


def test_color_section():
    assert color_section(1, I_SIDE, 3) == [Labels.I_0N, Labels.I_0N]
    assert color_section(3, I_SIDE, 3) == [Labels.I_1N, Labels.I_1N]
    assert color_section(2, J_SIDE, 3) == [Labels.J_0N, Labels.J_1N]
    assert color_section(1, J_SIDE, 1) == []

    with pytest.raises(TileSetError):
        color_section(0, I_SIDE, 3)
    with pytest.raises(TileSetError):
        color_section(4, J_SIDE, 3)
    with pytest.raises(TileSetError):
        color_section(1, "K", 3)


def test_rod_label_census():
    width = Dimensions(2, 3).width
    assert width == 36
    assert len(rod_top(MIXED)) == len(rod_bottom(MIXED)) == width

    top = Counter(rod_top(MIXED))
    assert top == {
        Labels.X_01: 6,
        Labels.x_A: 8,
        Labels.I_0N: 11,
        Labels.I_1N: 3,
        Labels.M_A: 8,
    }
    bottom = Counter(rod_bottom(MIXED))
    assert bottom == {
        Labels.J_0N: 12,
        Labels.J_1N: 2,
        Labels.y_A: 8,
        Labels.Y: 6,
        Labels.M: 8,
    }

    edges = rod_labels(MIXED)
    assert Counter(direction for direction, _ in edges) == {
        "r": width,
        "l": width,
        "d": 2,
        "u": 2,
    }
    assert [label for direction, label in edges if direction == "d"] == [Labels.N, Labels.ONE]
    assert [label for direction, label in edges if direction == "u"] == [Labels.N, Labels.ZERO]


def test_blade_label_census():
    dims = Dimensions(2, 3)
    w, a = dims.width, dims.spacer
    edges = blade_labels(2, 3)

    assert Counter(label for _, label in edges) == {
        Labels.L: 4 * w + 4 * a + 8,
        Labels.L_A: 2 * w + 4 * a + 4,
        Labels.X_PRIME: 4,
        Labels.Y_PRIME: 4,
    }
    assert Counter(direction for direction, _ in edges) == {
        "r": 3 * w,
        "l": 3 * w,
        "d": 4 * a + 10,
        "u": 4 * a + 10,
    }
    assert {label for direction, label in edges if direction in "rl"} == {Labels.L, Labels.L_A}


@pytest.mark.parametrize("n, m", list(product([1, 2, 3], repeat=2)))
def test_rod_and_blade_words(n, m):
    tiles = cycling_tiles(n, m)
    width = CATALOG_SCALE * ((6 * n - 2) * m + 6)
    assert width == CATALOG_SCALE * Dimensions(n, m).width

    rod_path = rod_word(tiles)
    assert is_closed(rod_path)
    assert is_simple(rod_path)
    rod = word_to_polyomino(rod_path)
    assert rod.is_connected()
    # side labels only add bumps and dents to the base rectangle
    assert width <= rod.width < width + 2 * CATALOG_SCALE
    assert 2 * CATALOG_SCALE <= rod.height < 4 * CATALOG_SCALE

    blade_path = blade_word(n, m)
    assert is_closed(blade_path)
    assert is_simple(blade_path)
    assert word_to_polyomino(blade_path).is_connected()


def test_rod_width_single_tile():
    rod = word_to_polyomino(rod_word(cycling_tiles(1, 1)))
    assert 2070 <= rod.width < 2070 + 2 * CATALOG_SCALE


def test_encode_modes(single_tile_set):
    rotation = encode(single_tile_set, ROTATION)
    assert rotation.names == [PieceNames.TOOTH, PieceNames.ROD, PieceNames.BLADE]
    assert rotation.tiles.m == 2
    assert rotation.pieces[PieceNames.TOOTH].area == 9

    translation = encode(single_tile_set, TRANSLATION)
    assert translation.names == [
        PieceNames.TOOTH,
        PieceNames.ROD,
        PieceNames.ROD90,
        PieceNames.ROD180,
        PieceNames.BLADE,
    ]
    assert translation.derived_from[PieceNames.ROD180] == (PieceNames.ROD, 2)
    rod = translation.pieces[PieceNames.ROD]
    rod90 = translation.pieces[PieceNames.ROD90]
    assert (rod90.width, rod90.height) == (rod.height, rod.width)
    assert rod90.area == rod.area

    with pytest.raises(TileSetError):
        encode(single_tile_set, "mirror")

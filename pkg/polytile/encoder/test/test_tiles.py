#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import pytest

from polytile.encoder.tiles import WangTile, WangTileSet
from polytile.exceptions import TileSetError


def test_from_colors():
    tiles = WangTileSet.from_colors(2, [(1, 2, 1, 2), (2, 1, 2, 1)])
    assert tiles.n == 2
    assert tiles.m == 2
    assert [t.name for t in tiles.tiles] == ["1", "2"]
    assert tiles.tile(1).colors == (2, 1, 2, 1)
    assert tiles.index_of("2") == 1


def test_matching():
    # 1 must be followed east by 2 and 2 by 1
    tiles = WangTileSet.from_colors(2, [(1, 2, 1, 1), (1, 1, 1, 2)])
    assert not tiles.matches_east(0, 0)
    assert tiles.matches_east(0, 1)
    assert tiles.matches_east(1, 0)
    assert not tiles.matches_east(1, 1)
    assert tiles.matches_north(0, 1)

    flipped = WangTileSet.from_colors(2, [(1, 2, 1, 2), (2, 1, 2, 1)])
    assert flipped.matches_east(0, 0)
    assert not flipped.matches_east(0, 1)
    assert flipped.matches_north(0, 0)
    assert not flipped.matches_north(0, 1)


@pytest.mark.parametrize(
    "colors, tiles",
    [
        (2, ()),
        (0, (WangTile("a", 1, 1, 1, 1),)),
        (2, (WangTile("a", 1, 3, 1, 1),)),
        (2, (WangTile("a", 1, 1, 1, 1), WangTile("a", 2, 2, 2, 2))),
    ],
)
def test_invalid_sets(colors, tiles):
    with pytest.raises(TileSetError):
        WangTileSet(colors, tiles)


def test_lookup_errors():
    tiles = WangTileSet.from_colors(1, [(1, 1, 1, 1)])
    with pytest.raises(TileSetError):
        tiles.tile(1)
    with pytest.raises(TileSetError):
        tiles.index_of("nope")


def test_padded():
    single = WangTileSet.from_colors(1, [(1, 1, 1, 1)])
    assert single.padded().m == 2
    assert single.padded().tiles == single.tiles
    two = WangTileSet.from_colors(2, [(1, 2, 1, 2)])
    assert two.padded() is two

#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import logging
from dataclasses import dataclass, replace
from typing import Sequence, Tuple

from polytile.exceptions import TileSetError

logger = logging.getLogger(__name__)

SIDES = ("north", "east", "south", "west")


@dataclass(frozen=True)
class WangTile:
    name: str
    north: int
    east: int
    south: int
    west: int

    @property
    def colors(self) -> Tuple[int, int, int, int]:
        return self.north, self.east, self.south, self.west


@dataclass(frozen=True)
class WangTileSet:
    """``n`` tiles with side colours in 1..m; tiles are never rotated."""

    colors: int
    tiles: Tuple[WangTile, ...]

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(self.tiles))
        if not self.tiles:
            raise TileSetError("a tile set needs at least one tile")
        if self.colors < 1:
            raise TileSetError(f"colour count {self.colors} < 1")
        names = [tile.name for tile in self.tiles]
        if len(set(names)) != len(names):
            raise TileSetError(f"duplicate tile names in {names}")
        for tile in self.tiles:
            for side, color in zip(SIDES, tile.colors):
                if not 1 <= color <= self.colors:
                    raise TileSetError(
                        f"tile {tile.name}: {side} colour {color} outside 1..{self.colors}"
                    )

    @classmethod
    def from_colors(cls, colors: int, rows: Sequence[Sequence[int]]) -> "WangTileSet":
        """Tiles named 1..n from (north, east, south, west) tuples."""
        return cls(colors, tuple(WangTile(str(i + 1), *row) for i, row in enumerate(rows)))

    @property
    def n(self) -> int:
        return len(self.tiles)

    @property
    def m(self) -> int:
        return self.colors

    def tile(self, index: int) -> WangTile:
        """Tile by 0-based index."""
        if not 0 <= index < len(self.tiles):
            raise TileSetError(f"tile index {index} outside 0..{len(self.tiles) - 1}")
        return self.tiles[index]

    def index_of(self, name: str) -> int:
        for i, tile in enumerate(self.tiles):
            if tile.name == name:
                return i
        raise TileSetError(f"unknown tile {name!r}")

    def matches_east(self, left: int, right: int) -> bool:
        return self.tiles[left].east == self.tiles[right].west

    def matches_north(self, below: int, above: int) -> bool:
        return self.tiles[below].north == self.tiles[above].south

    def padded(self) -> "WangTileSet":
        """The same tiles with at least two colours; a single colour leaves no room for wires."""
        if self.colors >= 2:
            return self
        logger.warning("Single-colour tile set padded to two colours")
        return replace(self, colors=2)

#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from polytile.encoder.tiles import WangTileSet
from polytile.exceptions import BudgetExhausted, TileSetError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WangAssignment:
    """Tile index at every cell of a ``width`` x ``height`` torus.

    ``grid[j][i]`` is the 0-based tile index at column ``i`` (growing east) and
    row ``j`` (growing north).
    """

    width: int
    height: int
    grid: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "grid", tuple(tuple(row) for row in self.grid))
        if self.width < 1 or self.height < 1:
            raise TileSetError(f"empty torus {self.width}x{self.height}")
        if len(self.grid) != self.height or any(len(row) != self.width for row in self.grid):
            raise TileSetError(f"grid shape does not match {self.width}x{self.height}")

    def tile_at(self, i: int, j: int) -> int:
        return self.grid[j % self.height][i % self.width]

    def defects(self, tiles: WangTileSet) -> List[str]:
        """Mismatched neighbours, wrapping around the torus."""
        problems = []
        for j in range(self.height):
            for i in range(self.width):
                here = self.tile_at(i, j)
                if not 0 <= here < tiles.n:
                    problems.append(f"({i}, {j}): tile index {here} outside 0..{tiles.n - 1}")
                    continue
                east = self.tile_at(i + 1, j)
                north = self.tile_at(i, j + 1)
                if 0 <= east < tiles.n and not tiles.matches_east(here, east):
                    problems.append(f"({i}, {j}) east side does not match its neighbour")
                if 0 <= north < tiles.n and not tiles.matches_north(here, north):
                    problems.append(f"({i}, {j}) north side does not match its neighbour")
        return problems

    def is_valid(self, tiles: WangTileSet) -> bool:
        return not self.defects(tiles)


def wang_solve_torus(
    tiles: WangTileSet, width: int, height: int, limit: int = 2_000_000
) -> Optional[WangAssignment]:
    """First valid assignment of the torus in row-major cell order, or None.

    Cells are filled east then north; the wrap-around constraints are checked
    as soon as both neighbours are known.
    """
    cells = [(i, j) for j in range(height) for i in range(width)]
    grid = [[-1] * width for _ in range(height)]
    nodes = 0

    def fits(tile: int, i: int, j: int) -> bool:
        west = grid[j][(i - 1) % width]
        south = grid[(j - 1) % height][i]
        east = grid[j][(i + 1) % width]
        north = grid[(j + 1) % height][i]
        if west >= 0 and not tiles.matches_east(west, tile):
            return False
        if south >= 0 and not tiles.matches_north(south, tile):
            return False
        if east >= 0 and not tiles.matches_east(tile, east):
            return False
        if north >= 0 and not tiles.matches_north(tile, north):
            return False
        return True

    def search(k: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise BudgetExhausted(f"Wang search exceeded {limit} nodes")
        if k == len(cells):
            return True
        i, j = cells[k]
        for tile in range(tiles.n):
            # A 1-wide torus makes a cell its own neighbour.
            grid[j][i] = tile
            if fits(tile, i, j) and search(k + 1):
                return True
            grid[j][i] = -1
        return False

    found = search(0)
    logger.info(
        f"Wang search on {width}x{height} torus: {'found' if found else 'none'} after {nodes} nodes"
    )
    if not found:
        return None
    return WangAssignment(width, height, tuple(tuple(row) for row in grid))

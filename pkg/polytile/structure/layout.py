#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Where every blade and rod goes, in label units.

Blades sit on the lattice spanned by ``v2 = (2W, 2m + H)`` and
``v1 = (0, W + A + 2)``; the blade of Wang cell (i, j) starts at
``(i - j) * v2 + j * v1``. Relative to that start:

- the rectangle ``[W, 2W] x [-A-1, W-1]`` holds W/2 upright rods side by side
  (the stack), with lying fillers below and above it; the stack sits ``2m``
  labels higher for every step of the tile index, which is how the tile is
  selected,
- ``m - 1`` lying wire rods at ``[0, W] x [0, 2m-2]`` carry the west colour and
  ``m - 1`` more at ``[0, W]`` from ``y = 2m - 2 + H`` carry the north colour.

Positions are start vertices of the piece words: where the top-left corner of
an unturned piece ends up.
"""
import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Set, Tuple

from polytile.constants import PieceNames, Roles
from polytile.encoder.pieces import Dimensions
from polytile.encoder.tiles import WangTileSet
from polytile.engine.wang import WangAssignment
from polytile.exceptions import StructureError, TileSetError

logger = logging.getLogger(__name__)

Vertex = Tuple[int, int]


@dataclass(frozen=True)
class CellBlock:
    i: int
    j: int
    tile: int
    north: int
    east: int
    south: int
    west: int

    @classmethod
    def of(cls, tiles: WangTileSet, assignment: WangAssignment, i: int, j: int) -> "CellBlock":
        index = assignment.tile_at(i, j)
        tile = tiles.tile(index)
        return cls(i, j, index, tile.north, tile.east, tile.south, tile.west)


@dataclass(frozen=True)
class LabelPlacement:
    """A piece on the label lattice; ``start`` is where its word begins."""

    role: str
    shape: str
    orientation: int
    start: Vertex
    cell: Tuple[int, int] = (0, 0)

    def shifted(self, dx: int, dy: int) -> "LabelPlacement":
        return LabelPlacement(
            self.role,
            self.shape,
            self.orientation,
            (self.start[0] + dx, self.start[1] + dy),
            self.cell,
        )


@dataclass(frozen=True)
class Arrangement:
    """One legal filling of a rectangle: the stack raised by ``offset`` labels."""

    tile: int
    offset: int
    fillers_below: int
    fillers_above: int


@dataclass
class StructureLayout:
    tiles: WangTileSet
    assignment: WangAssignment
    dims: Dimensions
    v1: Vertex
    v2: Vertex
    torus: Tuple[int, int]
    blocks: List[CellBlock] = field(default_factory=list)
    placements: List[LabelPlacement] = field(default_factory=list)

    def census(self) -> Dict[str, Set[int]]:
        return census(self.placements)

    def by_role(self, role: str) -> List[LabelPlacement]:
        return [p for p in self.placements if p.role == role]


def lattice(dims: Dimensions) -> Tuple[Vertex, Vertex]:
    """(v1, v2) in label units."""
    return (0, dims.width + dims.spacer + 2), (2 * dims.width, 2 * dims.m + dims.block_height)


def fundamental_domain(n: int, m: int, wang_dims: Tuple[int, int]) -> Tuple[int, int]:
    """Smallest torus, in label units, that is a blade lattice period and repeats the Wang torus."""
    w, h = wang_dims
    dims = Dimensions(n, m)
    (_, py), (px2, dy2) = lattice(dims)
    g = gcd(dy2, py)
    a_min, b_min = py // g, -dy2 // g
    mu = 1
    while (mu * (a_min + b_min)) % w or (mu * b_min) % h:
        mu += 1
    lcm = w * h // gcd(w, h)
    return px2 * a_min * mu, py * lcm


def lattice_points(n: int, m: int, wang_dims: Tuple[int, int]):
    """(blade start, Wang cell) for every blade of one torus period."""
    dims = Dimensions(n, m)
    (_, py), (px2, dy2) = lattice(dims)
    width, height = fundamental_domain(n, m, wang_dims)
    w, h = wang_dims
    points = []
    for a in range(width // px2):
        for b in range(height // py):
            start = (a * px2, (a * dy2 + b * py) % height)
            points.append((start, ((a + b) % w, b % h)))
    return points


def arrangements(n: int, m: int) -> List[Arrangement]:
    """The n ways to fill a rectangle; arrangement j selects tile j."""
    dims = Dimensions(n, m)
    result = []
    for j in range(n):
        offset = 2 * m * j
        result.append(Arrangement(j, offset, (dims.spacer - offset) // 2, offset // 2))
    return result


def block_layout(block: CellBlock, n: int, m: int) -> List[LabelPlacement]:
    """Blade, stack and fillers of one cell, relative to its blade start."""
    if not 0 <= block.tile < n:
        raise TileSetError(f"tile index {block.tile} outside 0..{n - 1}")
    dims = Dimensions(n, m)
    w, a = dims.width, dims.spacer
    chosen = arrangements(n, m)[block.tile]
    cell = (block.i, block.j)

    placed = [LabelPlacement(Roles.BLADE, PieceNames.BLADE, 0, (0, 0), cell)]
    placed += [
        LabelPlacement(Roles.MEAT, PieceNames.ROD, 1, (w + 2 * k, -1 - chosen.offset), cell)
        for k in range(w // 2)
    ]
    placed += [
        LabelPlacement(Roles.FILLER, PieceNames.ROD, 0, (w, -a + 1 + 2 * f), cell)
        for f in range(chosen.fillers_below)
    ]
    placed += [
        LabelPlacement(
            Roles.FILLER, PieceNames.ROD, 2, (2 * w, w - 1 - chosen.offset + 2 * g), cell
        )
        for g in range(chosen.fillers_above)
    ]
    return placed


def wire_turned(t: int, color: int) -> bool:
    """Whether wire ``t`` of a channel lies half-turned; it must present a 0 to I_0N."""
    return t >= color - 1


def wire_layout(block: CellBlock, n: int, m: int) -> List[LabelPlacement]:
    """Wires of the west channel and of the north channel of one cell."""
    dims = Dimensions(n, m)
    w = dims.width
    cell = (block.i, block.j)
    placed = []
    for base, color in ((0, block.west), (2 * m - 2 + dims.block_height, block.north)):
        if not 1 <= color <= m:
            raise TileSetError(f"colour {color} outside 1..{m}")
        for t in range(m - 1):
            if wire_turned(t, color):
                placed.append(
                    LabelPlacement(Roles.WIRE, PieceNames.ROD, 2, (w, base + 2 * t), cell)
                )
            else:
                placed.append(
                    LabelPlacement(Roles.WIRE, PieceNames.ROD, 0, (0, base + 2 * t + 2), cell)
                )
    return placed


def census(placements) -> Dict[str, Set[int]]:
    """Orientations used per shape."""
    used: Dict[str, Set[int]] = {}
    for placement in placements:
        used.setdefault(placement.shape, set()).add(placement.orientation)
    return used


def orientation_census(n: int, m: int) -> Dict[str, Set[int]]:
    """Orientations any structure of this size can use, from every arrangement and colour."""
    placed = []
    for chosen in arrangements(n, m):
        for color in range(1, m + 1):
            block = CellBlock(0, 0, chosen.tile, color, color, color, color)
            placed += block_layout(block, n, m) + wire_layout(block, n, m)
    return census(placed)


def build_layout(tiles: WangTileSet, assignment: WangAssignment) -> StructureLayout:
    """Every piece of one torus period for a valid Wang assignment."""
    defects = assignment.defects(tiles)
    if defects:
        raise StructureError(f"Wang assignment is not a tiling: {defects[0]}")
    tiles = tiles.padded()
    n, m = tiles.n, tiles.m
    dims = Dimensions(n, m)
    v1, v2 = lattice(dims)
    torus = fundamental_domain(n, m, (assignment.width, assignment.height))
    layout = StructureLayout(tiles, assignment, dims, v1, v2, torus)

    for start, (i, j) in lattice_points(n, m, (assignment.width, assignment.height)):
        block = CellBlock.of(tiles, assignment, i, j)
        layout.blocks.append(block)
        for placement in block_layout(block, n, m) + wire_layout(block, n, m):
            layout.placements.append(placement.shifted(*start))

    logger.info(
        f"Layout for {n} tiles, {m} colours on a {assignment.width}x{assignment.height} "
        f"Wang torus: {len(layout.blocks)} blocks, {len(layout.placements)} pieces, "
        f"torus {torus[0]}x{torus[1]} labels"
    )
    return layout

#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Tooth, rod and blade of a Wang tile set.

Pieces are first spelled as sequences of (direction, label): each entry is one
label edge of width 207 walked in that direction. The sequences give the
boundary words, and the structure audit reads the same sequences back.

Rod long sides, left to right, in label units (W = (6n-2)m + 6 wide):

    top     [X01 (I xA)^(m-1) I0N]^n X01 I0N MA^B [X01 (I xA)^(m-1) I0N]^n X01 I0N
    bottom  J0N Y [J0N (yA J)^(m-1) Y]^n M^B J0N Y [J0N (yA J)^(m-1) Y]^n

with B = (2n-2)m + 2. Section s of the left top half carries the west colour
of tile s, the right top half the north colour, the left bottom half the
south colour and the right bottom half the east colour.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from polytile.constants import CATALOG_SCALE, Directions, Labels, PieceNames
from polytile.encoder.catalog import label_word
from polytile.encoder.tiles import WangTileSet
from polytile.engine.universe import Placement
from polytile.exceptions import PlacementError, TileSetError
from polytile.geometry.polyomino import Polyomino, rotated_origin, word_to_polyomino
from polytile.geometry.words import BoundaryWord, concat, is_simple, turn_word
from polytile.labeling.keylock import make_tooth

logger = logging.getLogger(__name__)

ROTATION = "rotation"
TRANSLATION = "translation"

I_SIDE = "I"
J_SIDE = "J"

LabelEdge = Tuple[str, str]


@dataclass(frozen=True)
class Dimensions:
    """Rod and blade measures in label units."""

    n: int
    m: int

    @property
    def width(self) -> int:
        return (6 * self.n - 2) * self.m + 6

    @property
    def spacer(self) -> int:
        return (2 * self.n - 2) * self.m

    @property
    def middle(self) -> int:
        return self.spacer + 2

    @property
    def block_height(self) -> int:
        return 2 * self.spacer + 6

    def top_section_start(self, half: int, s: int) -> int:
        """First label of section ``s`` on the rod top; half 0 is left, 1 is right."""
        base = 0 if half == 0 else 4 * self.m * self.n - 2 * self.m + 4
        return base + 2 * self.m * s

    def bottom_section_start(self, half: int, s: int) -> int:
        base = 2 if half == 0 else 4 * self.m * self.n - 2 * self.m + 6
        return base + 2 * self.m * s


def color_section(color: int, side: str, m: int) -> List[str]:
    """Information labels of one section, left to right along the rod."""
    if not 1 <= color <= m:
        raise TileSetError(f"colour {color} outside 1..{m}")
    if side == I_SIDE:
        return [Labels.I_1N] * (color - 1) + [Labels.I_0N] * (m - color)
    if side == J_SIDE:
        return [Labels.J_0N] * (color - 1) + [Labels.J_1N] * (m - color)
    raise TileSetError(f"unknown side kind {side!r}")


def rod_sections(tiles: WangTileSet) -> Dict[str, List[int]]:
    return {
        "top_left": [tile.west for tile in tiles.tiles],
        "top_right": [tile.north for tile in tiles.tiles],
        "bottom_left": [tile.south for tile in tiles.tiles],
        "bottom_right": [tile.east for tile in tiles.tiles],
    }


def _top_half(colors: Sequence[int], m: int) -> List[str]:
    labels = []
    for color in colors:
        labels.append(Labels.X_01)
        for info in color_section(color, I_SIDE, m):
            labels.extend([info, Labels.x_A])
        labels.append(Labels.I_0N)
    return labels + [Labels.X_01, Labels.I_0N]


def _bottom_half(colors: Sequence[int], m: int) -> List[str]:
    labels = [Labels.J_0N, Labels.Y]
    for color in colors:
        labels.append(Labels.J_0N)
        for info in color_section(color, J_SIDE, m):
            labels.extend([Labels.y_A, info])
        labels.append(Labels.Y)
    return labels


def rod_top(tiles: WangTileSet) -> List[str]:
    sections = rod_sections(tiles)
    dims = Dimensions(tiles.n, tiles.m)
    return (
        _top_half(sections["top_left"], tiles.m)
        + [Labels.M_A] * dims.middle
        + _top_half(sections["top_right"], tiles.m)
    )


def rod_bottom(tiles: WangTileSet) -> List[str]:
    sections = rod_sections(tiles)
    dims = Dimensions(tiles.n, tiles.m)
    return (
        _bottom_half(sections["bottom_left"], tiles.m)
        + [Labels.M] * dims.middle
        + _bottom_half(sections["bottom_right"], tiles.m)
    )


def rod_labels(tiles: WangTileSet) -> List[LabelEdge]:
    """Clockwise from the top-left corner."""
    top = rod_top(tiles)
    bottom = rod_bottom(tiles)
    return (
        [("r", label) for label in top]
        + [("d", Labels.N), ("d", Labels.ONE)]
        + [("l", label) for label in reversed(bottom)]
        + [("u", Labels.N), ("u", Labels.ZERO)]
    )


def blade_labels(n: int, m: int) -> List[LabelEdge]:
    """Clockwise from the top-left corner of the left block."""
    dims = Dimensions(n, m)
    w, a = dims.width, dims.spacer
    L, LA, XP, YP = Labels.L, Labels.L_A, Labels.X_PRIME, Labels.Y_PRIME
    runs = [
        ("r", L, w), ("d", XP, 1), ("d", LA, a), ("r", LA, w), ("u", LA, a + 1),
        ("u", YP, 1), ("u", LA, 1), ("r", L, w), ("d", XP, 1), ("d", L, 2 * a + 3),
        ("d", XP, 1), ("d", L, 1), ("l", L, w), ("u", YP, 1), ("u", LA, a),
        ("l", LA, w), ("d", LA, a + 1), ("d", XP, 1), ("d", LA, 1), ("l", L, w),
        ("u", YP, 1), ("u", L, 2 * a + 3), ("u", YP, 1), ("u", L, 1),
    ]  # fmt: skip
    return [(direction, label) for direction, label, count in runs for _ in range(count)]


@lru_cache(maxsize=None)
def turned_label_word(label: str, direction: str) -> BoundaryWord:
    return turn_word(label_word(label), Directions.CCW.index(direction))


def labels_to_word(edges: Sequence[LabelEdge]) -> BoundaryWord:
    return concat([turned_label_word(label, direction) for direction, label in edges])


def rod_word(tiles: WangTileSet) -> BoundaryWord:
    return labels_to_word(rod_labels(tiles))


def blade_word(n: int, m: int) -> BoundaryWord:
    return labels_to_word(blade_labels(n, m))


def make_rod(tiles: WangTileSet) -> Polyomino:
    return word_to_polyomino(rod_word(tiles))


def make_blade(n: int, m: int) -> Polyomino:
    return word_to_polyomino(blade_word(n, m))


@dataclass
class EncodedPieceSet:
    tiles: WangTileSet
    mode: str
    pieces: Dict[str, Polyomino] = field(default_factory=dict)
    # piece name -> (shape it is cut from, quarter turns)
    derived_from: Dict[str, Tuple[str, int]] = field(default_factory=dict)
    # unturned rod and blade, with origin = canonical corner relative to the word start
    base_shapes: Dict[str, Polyomino] = field(default_factory=dict)

    @property
    def names(self) -> List[str]:
        return list(self.pieces)

    def placement(self, shape: str, orientation: int, start: Tuple[int, int]) -> Placement:
        """Cell placement of ``shape`` turned ``orientation`` times, word starting at ``start``.

        ``start`` is a vertex of the label lattice.
        """
        base = self.base_shapes[shape]
        cx, cy = rotated_origin(base.origin, base.bbox, orientation)
        dx = start[0] * CATALOG_SCALE + cx
        dy = start[1] * CATALOG_SCALE + cy
        if self.mode == TRANSLATION and shape == PieceNames.ROD:
            return Placement(PieceNames.ROD_ORIENTATIONS[orientation], 0, dx, dy)
        if self.mode == TRANSLATION and orientation != 0:
            raise PlacementError(f"{shape} is only available unturned")
        return Placement(shape, orientation, dx, dy)

    def summary(self) -> Dict[str, Dict[str, int]]:
        return {
            name: {"area": poly.area, "width": poly.width, "height": poly.height}
            for name, poly in self.pieces.items()
        }


def encode(tiles: WangTileSet, mode: str = ROTATION) -> EncodedPieceSet:
    """Tooth, rod and blade; in translation mode the rod once per orientation the structure uses."""
    from polytile.structure.layout import orientation_census

    if mode not in (ROTATION, TRANSLATION):
        raise TileSetError(f"unknown mode {mode!r}")
    tiles = tiles.padded()

    rod_path = rod_word(tiles)
    blade_path = blade_word(tiles.n, tiles.m)
    for name, word in ((PieceNames.ROD, rod_path), (PieceNames.BLADE, blade_path)):
        if not is_simple(word):
            raise TileSetError(f"{name} boundary touches itself")
    rod = word_to_polyomino(rod_path)
    blade = word_to_polyomino(blade_path)

    encoded = EncodedPieceSet(tiles, mode)
    encoded.pieces[PieceNames.TOOTH] = make_tooth()
    encoded.base_shapes = {PieceNames.ROD: rod, PieceNames.BLADE: blade}
    rod = Polyomino(rod.rows)
    blade = Polyomino(blade.rows)

    if mode == ROTATION:
        encoded.pieces[PieceNames.ROD] = rod
        encoded.pieces[PieceNames.BLADE] = blade
        encoded.derived_from = {
            PieceNames.ROD: (PieceNames.ROD, 0),
            PieceNames.BLADE: (PieceNames.BLADE, 0),
        }
    else:
        census = orientation_census(tiles.n, tiles.m)
        rods = sorted(census[PieceNames.ROD])
        blades = sorted(census[PieceNames.BLADE])
        if len(rods) > 3 or blades != [0]:
            raise TileSetError(f"structure uses rod turns {rods} and blade turns {blades}")
        for q in rods:
            name = PieceNames.ROD_ORIENTATIONS[q]
            encoded.pieces[name] = rod.rotate(q)
            encoded.derived_from[name] = (PieceNames.ROD, q)
        encoded.pieces[PieceNames.BLADE] = blade
        encoded.derived_from[PieceNames.BLADE] = (PieceNames.BLADE, 0)

    logger.info(
        f"Encoded {tiles.n} tiles, {tiles.m} colours, {mode} mode: "
        + ", ".join(f"{name} area {poly.area}" for name, poly in encoded.pieces.items())
    )
    return encoded

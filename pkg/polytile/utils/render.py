#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""SVG drawings of pieces and tilings, one rectangle per row run."""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import svgwrite

from polytile.engine.universe import PieceSet, Tiling
from polytile.exceptions import PolytileError
from polytile.geometry.polyomino import Polyomino

logger = logging.getLogger(__name__)

COLOR_BY = ("piece", "role", "orientation")

PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
)

Run = Tuple[int, int, int]
Viewport = Tuple[int, int, int, int]


@dataclass(frozen=True)
class RenderSpec:
    cell_pixels: int = 1
    color_by: str = "piece"
    # (x0, y0, x1, y1) in cells, half open
    viewport: Optional[Viewport] = None
    piece_gap: int = 2

    def __post_init__(self):
        if self.cell_pixels < 1:
            raise PolytileError(f"cell size {self.cell_pixels} must be positive")
        if self.color_by not in COLOR_BY:
            raise PolytileError(f"cannot colour by {self.color_by!r}")
        if self.viewport is not None:
            x0, y0, x1, y1 = self.viewport
            if x1 <= x0 or y1 <= y0:
                raise PolytileError(f"empty viewport {self.viewport}")


def _clip(runs: Iterator[Run], viewport: Optional[Viewport]) -> Iterator[Run]:
    for y, x0, x1 in runs:
        if viewport is not None:
            if not viewport[1] <= y < viewport[3]:
                continue
            x0, x1 = max(x0, viewport[0]), min(x1, viewport[2])
        if x1 > x0:
            yield y, x0, x1


def _wrapped(runs: Iterator[Run], width: int, height: int) -> Iterator[Run]:
    for y, x0, x1 in runs:
        y %= height
        shift = (x0 // width) * width
        x0, x1 = x0 - shift, x1 - shift
        while x1 > width:
            yield y, x0, width
            x0, x1 = 0, x1 - width
        yield y, x0, x1


def _shape_runs(shape: Polyomino, dx: int, dy: int) -> Iterator[Run]:
    for y, row in enumerate(shape.rows):
        for x0, x1 in row:
            yield y + dy, x0 + dx, x1 + dx


class _Canvas:
    """Cell rows to SVG rectangles; y grows upwards in cells and downwards on the page."""

    def __init__(self, spec: RenderSpec, width: int, height: int, origin=(0, 0)):
        self.spec = spec
        self.origin = origin
        self.height = height
        px = spec.cell_pixels
        self.drawing = svgwrite.Drawing(size=(width * px, height * px), profile="tiny")
        self.colors: Dict[str, str] = {}

    def color(self, key: str) -> str:
        if key not in self.colors:
            self.colors[key] = PALETTE[len(self.colors) % len(PALETTE)]
        return self.colors[key]

    def group(self, name: str, key: str):
        return self.drawing.add(
            self.drawing.g(id=name, fill=self.color(key), stroke="none")
        )

    def add_runs(self, group, runs: Iterator[Run]) -> int:
        px = self.spec.cell_pixels
        ox, oy = self.origin
        count = 0
        for y, x0, x1 in runs:
            top = self.height - 1 - (y - oy)
            group.add(
                self.drawing.rect(
                    insert=((x0 - ox) * px, top * px), size=((x1 - x0) * px, px)
                )
            )
            count += 1
        return count


def render_pieces(
    pieces: Mapping[str, Polyomino], spec: Optional[RenderSpec] = None
) -> svgwrite.Drawing:
    """Pieces side by side, left to right, each in its own colour."""
    spec = spec or RenderSpec()
    width = sum(p.width for p in pieces.values()) + spec.piece_gap * max(len(pieces) - 1, 0)
    height = max((p.height for p in pieces.values()), default=1)
    canvas = _Canvas(spec, max(width, 1), height)
    x = 0
    for name, poly in pieces.items():
        group = canvas.group(name, name)
        canvas.add_runs(group, _clip(_shape_runs(poly, x, 0), spec.viewport))
        x += poly.width + spec.piece_gap
    return canvas.drawing


def render_tiling(
    tiling: Tiling,
    pieces: Mapping[str, Polyomino],
    spec: Optional[RenderSpec] = None,
    roles: Optional[Sequence[str]] = None,
) -> svgwrite.Drawing:
    """The tiling region with every placement drawn; a torus is folded onto its rectangle."""
    spec = spec or RenderSpec()
    if spec.color_by == "role" and (roles is None or len(roles) != len(tiling.placements)):
        raise PolytileError("colouring by role needs one role per placement")
    piece_set = pieces if isinstance(pieces, PieceSet) else PieceSet(pieces)
    region = tiling.region
    if spec.viewport is not None:
        x0, y0, x1, y1 = spec.viewport
        canvas = _Canvas(spec, x1 - x0, y1 - y0, (x0, y0))
    else:
        canvas = _Canvas(spec, region.width, region.height)

    drawn = 0
    for index, placement in enumerate(tiling.placements):
        if spec.color_by == "piece":
            key = placement.piece
        elif spec.color_by == "role":
            key = roles[index]
        else:
            key = f"q{placement.orientation}"
        shape = piece_set.turned(placement.piece, placement.orientation)
        runs = _shape_runs(shape, placement.dx, placement.dy)
        if region.is_torus:
            runs = _wrapped(runs, region.width, region.height)
        group = canvas.group(f"p{index}", key)
        drawn += canvas.add_runs(group, _clip(runs, spec.viewport))
    logger.info(f"Rendered {len(tiling.placements)} placements as {drawn} rectangles")
    return canvas.drawing


def legend(drawing: svgwrite.Drawing) -> List[str]:
    """Group ids of a drawing, in drawing order."""
    return [element.attribs["id"] for element in drawing.elements if "id" in element.attribs]

#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from polytile.exceptions import PlacementError, UnknownPieceError
from polytile.geometry.polyomino import Polyomino, congruent_by_translation

logger = logging.getLogger(__name__)

RECT = "rect"
TORUS = "torus"


@dataclass(frozen=True)
class Region:
    kind: str
    width: int
    height: int

    def __post_init__(self):
        if self.kind not in (RECT, TORUS):
            raise PlacementError(f"unknown region kind {self.kind!r}")
        if self.width <= 0 or self.height <= 0:
            raise PlacementError(f"empty region {self.width}x{self.height}")

    @property
    def area(self) -> int:
        return self.width * self.height

    @property
    def is_torus(self) -> bool:
        return self.kind == TORUS

    def cells(self):
        for y in range(self.height):
            for x in range(self.width):
                yield x, y


@dataclass(frozen=True, order=True)
class Placement:
    piece: str
    orientation: int
    dx: int
    dy: int

    def __post_init__(self):
        if self.orientation not in (0, 1, 2, 3):
            raise PlacementError(f"orientation {self.orientation} not in 0..3")


@dataclass
class Tiling:
    region: Region
    placements: List[Placement] = field(default_factory=list)
    metadata: Dict[str, str] = field(default_factory=dict)


class PieceSet:
    """Named pieces with their distinct rotations, computed once."""

    def __init__(self, pieces: Mapping[str, Polyomino]):
        self.pieces = dict(pieces)
        self._turned: Dict[Tuple[str, int], Polyomino] = {}

    def __contains__(self, name):
        return name in self.pieces

    def __getitem__(self, name) -> Polyomino:
        try:
            return self.pieces[name]
        except KeyError:
            raise UnknownPieceError(f"unknown piece {name!r}")

    def names(self):
        return list(self.pieces)

    def turned(self, name: str, orientation: int) -> Polyomino:
        key = (name, orientation % 4)
        if key not in self._turned:
            self._turned[key] = self[name].rotate(orientation)
        return self._turned[key]

    def distinct_orientations(self, name: str) -> Tuple[int, ...]:
        """Orientations whose rotated shapes differ from every smaller one."""
        kept: List[int] = []
        for q in range(4):
            shape = self.turned(name, q)
            if not any(congruent_by_translation(shape, self.turned(name, k)) for k in kept):
                kept.append(q)
        return tuple(kept)


def placement_cells(pieces: PieceSet, placement: Placement) -> Iterable[Tuple[int, int]]:
    shape = pieces.turned(placement.piece, placement.orientation)
    for x, y in shape.cells():
        yield x + placement.dx, y + placement.dy


class PlacementUniverse:
    """All legal placements of some pieces inside a region.

    ``mask`` restricts a rectangle region to a subset of its cells. Placements
    are kept in a deterministic order: piece order, then orientation, then
    translation (dy, dx).
    """

    def __init__(
        self,
        region: Region,
        pieces: Mapping[str, Polyomino],
        translation_only: bool = False,
        orientations: Optional[Mapping[str, Sequence[int]]] = None,
        mask: Optional[Iterable[Tuple[int, int]]] = None,
    ):
        self.region = region
        self.piece_set = pieces if isinstance(pieces, PieceSet) else PieceSet(pieces)
        self.translation_only = translation_only

        self._unmasked = mask is None
        if mask is not None:
            if region.is_torus:
                raise PlacementError("cell masks apply to rectangle regions only")
            self.cells = sorted(set(mask), key=lambda c: (c[1], c[0]))
        else:
            self.cells = [(x, y) for x, y in region.cells()]
        self.cell_index = {cell: i for i, cell in enumerate(self.cells)}

        self.orientations: Dict[str, Tuple[int, ...]] = {}
        for name in self.piece_set.names():
            if translation_only:
                allowed = (0,)
            elif orientations is not None and name in orientations:
                allowed = tuple(orientations[name])
            else:
                allowed = self.piece_set.distinct_orientations(name)
            if translation_only and any(q != 0 for q in allowed):
                raise PlacementError("translation-only universes admit orientation 0 only")
            self.orientations[name] = allowed

        self.placements: List[Placement] = []
        rows: List[np.ndarray] = []
        for name in self.piece_set.names():
            for q in self.orientations[name]:
                for placement, indices in self._placements_of(name, q):
                    self.placements.append(placement)
                    rows.append(indices)

        self.matrix = np.zeros((len(rows), len(self.cells)), dtype=bool)
        for r, indices in enumerate(rows):
            self.matrix[r, indices] = True
        self.row_cells = rows

        logger.debug(
            f"Universe {region.kind} {region.width}x{region.height}: "
            f"{len(self.cells)} cells, {len(self.placements)} placements"
        )

    def _placements_of(self, name: str, q: int):
        shape = self.piece_set.turned(name, q)
        shape_cells = list(shape.cells())
        width, height = shape.bbox
        region = self.region
        if region.is_torus:
            x_range = range(region.width)
            y_range = range(region.height)
        else:
            x_range = range(region.width - width + 1)
            y_range = range(region.height - height + 1)

        if self._unmasked:
            xs = np.array([x for x, _ in shape_cells], dtype=np.int64)
            ys = np.array([y for _, y in shape_cells], dtype=np.int64)
            for dy in y_range:
                for dx in x_range:
                    if region.is_torus:
                        indices = ((ys + dy) % region.height) * region.width + (
                            (xs + dx) % region.width
                        )
                        unique = np.unique(indices)
                        if len(unique) != len(indices):
                            continue
                    else:
                        unique = np.sort((ys + dy) * region.width + (xs + dx))
                    yield Placement(name, q, dx, dy), unique
            return

        for dy in y_range:
            for dx in x_range:
                indices = []
                for x, y in shape_cells:
                    cell = (x + dx, y + dy)
                    if region.is_torus:
                        cell = (cell[0] % region.width, cell[1] % region.height)
                    index = self.cell_index.get(cell)
                    if index is None:
                        break
                    indices.append(index)
                else:
                    unique = np.unique(np.array(indices, dtype=np.int64))
                    # Wrapping onto itself on a small torus is not a placement.
                    if len(unique) == len(indices):
                        yield Placement(name, q, dx, dy), unique

    def __len__(self):
        return len(self.placements)

    @property
    def area(self) -> int:
        return len(self.cells)

    def placement_cell_list(self, row: int) -> List[Tuple[int, int]]:
        return [self.cells[i] for i in self.row_cells[row]]

#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Polyominoes stored as per-row runs of cells.

``rows[y]`` holds the sorted, disjoint, non-touching half-open intervals
``(x0, x1)`` of row ``y``. The canonical form has its lowest row at y = 0 and
its leftmost cell at x = 0; ``origin`` records where the canonical form sits
in the frame it was built in and does not take part in equality.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

import numpy as np
from networkx.utils import UnionFind

from polytile.exceptions import (
    DisconnectedPolyominoError,
    OpenWordError,
    SelfIntersectingWordError,
)
from polytile.geometry.words import (
    BoundaryWord,
    is_closed,
    is_simple,
    make_word,
    normalize,
    trace_path,
    word_displacement,
)

logger = logging.getLogger(__name__)

Interval = Tuple[int, int]
Row = Tuple[Interval, ...]


def merge_intervals(intervals: Iterable[Interval]) -> Row:
    """Sorts and merges overlapping or touching intervals."""
    merged: List[List[int]] = []
    for x0, x1 in sorted(intervals):
        if x1 <= x0:
            continue
        if merged and x0 <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], x1)
        else:
            merged.append([x0, x1])
    return tuple((a, b) for a, b in merged)


@dataclass(frozen=True)
class Polyomino:
    rows: Tuple[Row, ...]
    origin: Tuple[int, int] = field(default=(0, 0), compare=False)

    @classmethod
    def from_rows(cls, rows: Dict[int, Iterable[Interval]], check=True) -> "Polyomino":
        """Builds the canonical form of a cell set given as row -> intervals."""
        cleaned = {y: merge_intervals(ivs) for y, ivs in rows.items()}
        cleaned = {y: ivs for y, ivs in cleaned.items() if ivs}
        if not cleaned:
            raise DisconnectedPolyominoError("polyomino has no cells")

        y_min = min(cleaned)
        y_max = max(cleaned)
        x_min = min(ivs[0][0] for ivs in cleaned.values())
        canonical = tuple(
            tuple((x0 - x_min, x1 - x_min) for x0, x1 in cleaned.get(y, ()))
            for y in range(y_min, y_max + 1)
        )
        poly = cls(canonical, (x_min, y_min))
        if check and not poly.is_connected():
            raise DisconnectedPolyominoError(
                f"cell set of area {poly.area} is not edge-connected"
            )
        return poly

    @classmethod
    def from_cells(cls, cells: Iterable[Tuple[int, int]], check=True) -> "Polyomino":
        rows: Dict[int, List[Interval]] = {}
        for x, y in cells:
            rows.setdefault(y, []).append((x, x + 1))
        return cls.from_rows(rows, check=check)

    @classmethod
    def rectangle(cls, width: int, height: int) -> "Polyomino":
        return cls(tuple(((0, width),) for _ in range(height)))

    @classmethod
    def from_dense(cls, grid: np.ndarray, check=True) -> "Polyomino":
        """Builds from a boolean array indexed [y, x]."""
        padded = np.zeros((grid.shape[0], grid.shape[1] + 2), dtype=np.int8)
        padded[:, 1:-1] = grid
        changes = np.diff(padded, axis=1)
        starts_y, starts_x = np.nonzero(changes == 1)
        _, ends_x = np.nonzero(changes == -1)
        rows: Dict[int, List[Interval]] = {}
        for y, x0, x1 in zip(starts_y.tolist(), starts_x.tolist(), ends_x.tolist()):
            rows.setdefault(y, []).append((x0, x1))
        return cls.from_rows(rows, check=check)

    def to_dense(self) -> np.ndarray:
        width, height = self.bbox
        grid = np.zeros((height, width), dtype=bool)
        for y, row in enumerate(self.rows):
            for x0, x1 in row:
                grid[y, x0:x1] = True
        return grid

    @cached_property
    def area(self) -> int:
        return sum(x1 - x0 for row in self.rows for x0, x1 in row)

    @cached_property
    def bbox(self) -> Tuple[int, int]:
        width = max(row[-1][1] for row in self.rows if row)
        return width, len(self.rows)

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return self.bbox[0]

    @property
    def interval_count(self) -> int:
        return sum(len(row) for row in self.rows)

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Canonical cells, row by row."""
        for y, row in enumerate(self.rows):
            for x0, x1 in row:
                for x in range(x0, x1):
                    yield x, y

    def world_cells(self) -> Iterator[Tuple[int, int]]:
        ox, oy = self.origin
        for x, y in self.cells():
            yield x + ox, y + oy

    def contains(self, x: int, y: int) -> bool:
        """Membership of a canonical cell."""
        if y < 0 or y >= len(self.rows):
            return False
        for x0, x1 in self.rows[y]:
            if x < x0:
                return False
            if x < x1:
                return True
        return False

    def is_connected(self) -> bool:
        """Edge connectivity of the runs: runs of adjacent rows sharing a column join."""
        nodes = [(y, i) for y, row in enumerate(self.rows) for i in range(len(row))]
        if not nodes:
            return False
        components = UnionFind(nodes)
        for y in range(len(self.rows) - 1):
            lower = self.rows[y]
            upper = self.rows[y + 1]
            i = j = 0
            while i < len(lower) and j < len(upper):
                a0, a1 = lower[i]
                b0, b1 = upper[j]
                if a0 < b1 and b0 < a1:
                    components.union((y, i), (y + 1, j))
                if a1 <= b1:
                    i += 1
                else:
                    j += 1
        return len(list(components.to_sets())) == 1

    def translate(self, dx: int, dy: int) -> "Polyomino":
        return Polyomino(self.rows, (self.origin[0] + dx, self.origin[1] + dy))

    def rotate(self, quarter_turns: int) -> "Polyomino":
        """Counter-clockwise rotation about the frame origin, returned canonical.

        The new ``origin`` keeps track of the rotated frame: a cell (x, y) of
        the world frame goes to (-y-1, x) per quarter turn.
        """
        quarter_turns %= 4
        if quarter_turns == 0:
            return self
        grid = self.to_dense()
        # np.rot90 turns the [y, x] array counter-clockwise as drawn with y down,
        # which is clockwise for y-up cells; k=-1 undoes that.
        rotated = Polyomino.from_dense(np.rot90(grid, k=-quarter_turns), check=False)

        return Polyomino(rotated.rows, rotated_origin(self.origin, self.bbox, quarter_turns))


def rotated_origin(
    origin: Tuple[int, int], size: Tuple[int, int], quarter_turns: int
) -> Tuple[int, int]:
    """Canonical corner of a box of ``size`` at ``origin`` after quarter turns."""
    ox, oy = origin
    width, height = size
    corners = [(ox, oy), (ox + width - 1, oy + height - 1)]
    for _ in range(quarter_turns % 4):
        corners = [(-y - 1, x) for x, y in corners]
    return min(x for x, _ in corners), min(y for _, y in corners)


def rotate_cell(cell: Tuple[int, int], quarter_turns: int) -> Tuple[int, int]:
    x, y = cell
    for _ in range(quarter_turns % 4):
        x, y = -y - 1, x
    return x, y


def rotate_vertex(vertex: Tuple[int, int], quarter_turns: int) -> Tuple[int, int]:
    x, y = vertex
    for _ in range(quarter_turns % 4):
        x, y = -y, x
    return x, y


def rotate(poly: Polyomino, quarter_turns: int) -> Polyomino:
    return poly.rotate(quarter_turns)


def translate(poly: Polyomino, dx: int, dy: int) -> Polyomino:
    return poly.translate(dx, dy)


def area(poly: Polyomino) -> int:
    return poly.area


def bbox(poly: Polyomino) -> Tuple[int, int]:
    return poly.bbox


def congruent_by_translation(p: Polyomino, q: Polyomino) -> bool:
    return p.rows == q.rows


def word_to_polyomino(word: BoundaryWord, check=True) -> Polyomino:
    """Cells enclosed by a closed simple word, by scanline parity.

    ``origin`` of the result is the position of its canonical corner in the
    frame where the word starts at (0, 0).
    """
    if not is_closed(word):
        raise OpenWordError(f"word with displacement {word_displacement(word)} is open")
    if not is_simple(word):
        raise SelfIntersectingWordError("word visits a vertex twice")

    vertices = trace_path(word)
    vertical = vertices[1:, 1] != vertices[:-1, 1]
    rows_of_edges = np.minimum(vertices[1:, 1], vertices[:-1, 1])[vertical]
    xs_of_edges = vertices[:-1, 0][vertical]

    order = np.lexsort((xs_of_edges, rows_of_edges))
    rows_sorted = rows_of_edges[order]
    xs_sorted = xs_of_edges[order]

    # Crossings come in pairs per row; inside runs are [x0, x1), [x2, x3), ...
    starts = xs_sorted[0::2]
    ends = xs_sorted[1::2]
    run_rows = rows_sorted[0::2]

    rows: Dict[int, List[Interval]] = {}
    for y, x0, x1 in zip(run_rows.tolist(), starts.tolist(), ends.tolist()):
        rows.setdefault(y, []).append((x0, x1))

    poly = Polyomino.from_rows(rows, check=check)
    logger.debug(
        f"Filled word of {len(word)} steps: area {poly.area}, bbox {poly.bbox}"
    )
    return poly


def _subtract(row: Sequence[Interval], other: Sequence[Interval]) -> List[Interval]:
    """Parts of ``row`` not covered by ``other``."""
    out = []
    j = 0
    for x0, x1 in row:
        cursor = x0
        while j < len(other) and other[j][1] <= cursor:
            j += 1
        k = j
        while k < len(other) and other[k][0] < x1:
            a, b = other[k]
            if a > cursor:
                out.append((cursor, a))
            cursor = max(cursor, b)
            k += 1
        if cursor < x1:
            out.append((cursor, x1))
    return out


def polyomino_to_word(poly: Polyomino) -> BoundaryWord:
    """Clockwise boundary word of a hole-free polyomino.

    The word starts at the top-left corner of the top row and goes right.
    """
    rows = poly.rows
    height = len(rows)
    # start vertex -> (direction, length, end vertex)
    segments: Dict[Tuple[int, int], Tuple[str, int, Tuple[int, int]]] = {}

    def add(start, direction, length, end):
        if start in segments:
            raise SelfIntersectingWordError(f"boundary touches itself at {start}")
        segments[start] = (direction, length, end)

    for y in range(height):
        row = rows[y]
        above = rows[y + 1] if y + 1 < height else ()
        below = rows[y - 1] if y > 0 else ()
        for x0, x1 in _subtract(row, above):
            add((x0, y + 1), "r", x1 - x0, (x1, y + 1))
        for x0, x1 in _subtract(row, below):
            add((x1, y), "l", x1 - x0, (x0, y))
        for x0, x1 in row:
            add((x0, y), "u", 1, (x0, y + 1))
            add((x1, y + 1), "d", 1, (x1, y))

    top = rows[-1][0][0]
    start = (top, height)
    steps = []
    vertex = start
    used = 0
    while True:
        direction, length, end = segments[vertex]
        steps.append((direction, length))
        used += 1
        vertex = end
        if vertex == start:
            break

    if used != len(segments):
        raise SelfIntersectingWordError("boundary is not a single loop (holes?)")

    return normalize(make_word(steps))

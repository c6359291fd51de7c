#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Overlap and coverage check for large tilings.

Pieces are handled as row intervals, never as cells: every placement adds a
+1 event at the start and a -1 event at the end of each of its runs, and one
sort over all events gives the coverage count of every stretch of every row.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

import numpy as np

from polytile.engine.universe import PieceSet, Placement, Region
from polytile.exceptions import UnknownPieceError

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass
class ValidationReport:
    valid: bool
    area: int
    covered: int = 0
    overlap_count: int = 0
    hole_count: int = 0
    outside_count: int = 0
    overlaps: List[Cell] = field(default_factory=list)
    holes: List[Cell] = field(default_factory=list)
    outside: List[Cell] = field(default_factory=list)

    def summary(self) -> str:
        if self.valid:
            return f"valid: {self.covered} cells covered exactly once"
        return (
            f"invalid: {self.overlap_count} overlapping cells, "
            f"{self.hole_count} holes, {self.outside_count} cells outside the region"
        )

    def as_dict(self) -> Dict:
        return {
            "valid": self.valid,
            "area": self.area,
            "covered": self.covered,
            "overlap_count": self.overlap_count,
            "hole_count": self.hole_count,
            "outside_count": self.outside_count,
            "overlaps": [list(c) for c in self.overlaps],
            "holes": [list(c) for c in self.holes],
            "outside": [list(c) for c in self.outside],
        }


def _shape_intervals(pieces: PieceSet, name: str, orientation: int, cache):
    key = (name, orientation)
    if key not in cache:
        shape = pieces.turned(name, orientation)
        ys, x0s, x1s = [], [], []
        for y, row in enumerate(shape.rows):
            for x0, x1 in row:
                ys.append(y)
                x0s.append(x0)
                x1s.append(x1)
        cache[key] = (
            np.array(ys, dtype=np.int64),
            np.array(x0s, dtype=np.int64),
            np.array(x1s, dtype=np.int64),
        )
    return cache[key]


def _collect(region: Region, pieces: PieceSet, placements: Iterable[Placement]):
    cache = {}
    ys, x0s, x1s = [], [], []
    for placement in placements:
        if placement.piece not in pieces:
            raise UnknownPieceError(f"placement uses unknown piece {placement.piece!r}")
        sy, sx0, sx1 = _shape_intervals(pieces, placement.piece, placement.orientation, cache)
        ys.append(sy + placement.dy)
        x0s.append(sx0 + placement.dx)
        x1s.append(sx1 + placement.dx)
    if not ys:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty
    return np.concatenate(ys), np.concatenate(x0s), np.concatenate(x1s)


def _wrap(region: Region, ys, x0s, x1s):
    """Folds intervals onto the torus, splitting those that cross the seam."""
    width = region.width
    ys = ys % region.height
    shift = np.floor_divide(x0s, width) * width
    x0s = x0s - shift
    x1s = x1s - shift
    out_y, out_x0, out_x1 = [], [], []
    while len(ys):
        inside = np.minimum(x1s, width)
        out_y.append(ys)
        out_x0.append(x0s)
        out_x1.append(inside)
        rest = x1s > width
        ys = ys[rest]
        x0s = np.zeros(int(rest.sum()), dtype=np.int64)
        x1s = x1s[rest] - width
    return np.concatenate(out_y), np.concatenate(out_x0), np.concatenate(out_x1)


def _clip(region: Region, ys, x0s, x1s, limit: int):
    """Clips intervals to a rectangle; returns the clipped arrays and the outside cells."""
    in_row = (ys >= 0) & (ys < region.height)
    lo = np.clip(x0s, 0, region.width)
    hi = np.clip(x1s, 0, region.width)
    outside_count = int(np.sum(np.where(in_row, (x1s - x0s) - (hi - lo), x1s - x0s)))

    outside: List[Cell] = []
    if outside_count:
        for y, a, b, ok in zip(ys.tolist(), x0s.tolist(), x1s.tolist(), in_row.tolist()):
            if len(outside) >= limit:
                break
            spans = [(a, b)] if not ok else [(a, min(b, 0)), (max(a, region.width), b)]
            for s0, s1 in spans:
                for x in range(s0, s1):
                    if len(outside) < limit:
                        outside.append((x, y))

    keep = in_row & (hi > lo)
    return ys[keep], lo[keep], hi[keep], outside_count, outside


def _cells_of(segments, limit: int) -> List[Cell]:
    cells: List[Cell] = []
    for y, x0, x1 in segments:
        for x in range(x0, x1):
            if len(cells) >= limit:
                return cells
            cells.append((x, y))
    return cells


def validate(
    region: Region,
    pieces: PieceSet,
    placements: Iterable[Placement],
    report_limit: int = 100,
) -> ValidationReport:
    """Exact-cover verdict for a placement list, first ``report_limit`` defects listed."""
    if not isinstance(pieces, PieceSet):
        pieces = PieceSet(pieces)

    ys, x0s, x1s = _collect(region, pieces, placements)
    outside_count = 0
    outside: List[Cell] = []
    if region.is_torus:
        ys, x0s, x1s = _wrap(region, ys, x0s, x1s)
    else:
        ys, x0s, x1s, outside_count, outside = _clip(region, ys, x0s, x1s, report_limit)

    width = region.width
    stride = width + 1
    rows = np.arange(region.height, dtype=np.int64)
    # Zero-weight sentinels at both ends of every row delimit the sweep.
    keys = np.concatenate(
        [ys * stride + x0s, ys * stride + x1s, rows * stride, rows * stride + width]
    )
    deltas = np.concatenate(
        [
            np.ones(len(ys), dtype=np.int64),
            -np.ones(len(ys), dtype=np.int64),
            np.zeros(2 * region.height, dtype=np.int64),
        ]
    )
    unique, inverse = np.unique(keys, return_inverse=True)
    coverage = np.cumsum(np.bincount(inverse, weights=deltas).astype(np.int64))

    seg_start = unique[:-1]
    seg_end = unique[1:]
    seg_cover = coverage[:-1]
    seg_row = seg_start // stride
    same_row = (seg_end // stride) == seg_row
    seg_start, seg_end, seg_cover, seg_row = (
        seg_start[same_row],
        seg_end[same_row],
        seg_cover[same_row],
        seg_row[same_row],
    )
    lengths = seg_end - seg_start

    overlap = seg_cover > 1
    hole = seg_cover == 0
    overlap_count = int(np.sum(lengths[overlap]))
    hole_count = int(np.sum(lengths[hole]))
    covered = int(np.sum(lengths[seg_cover > 0]))

    def segments(mask):
        return zip(
            seg_row[mask].tolist(),
            (seg_start[mask] % stride).tolist(),
            (seg_end[mask] - seg_row[mask] * stride).tolist(),
        )

    report = ValidationReport(
        valid=overlap_count == 0 and hole_count == 0 and outside_count == 0,
        area=region.area,
        covered=covered,
        overlap_count=overlap_count,
        hole_count=hole_count,
        outside_count=outside_count,
        overlaps=_cells_of(segments(overlap), report_limit),
        holes=_cells_of(segments(hole), report_limit),
        outside=outside,
    )
    if report.valid:
        logger.info(f"validate {region.kind} {region.width}x{region.height}: {report.summary()}")
    else:
        logger.warning(f"validate {region.kind} {region.width}x{region.height}: {report.summary()}")
    return report

#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""From a periodic Wang tiling to a checked placement list of teeth, rods and blades.

The layout is first put on a label board, where every pair of facing labels
must be compatible and every information label must be read by a wire end or
faced by a label that accepts both of its variants. Each facing pair then
contributes the teeth that fill the cavities its key leaves in the lock, and
the whole placement list goes through the validator.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Set, Tuple

from polytile.constants import (
    CATALOG_KEY_LENGTH,
    CATALOG_SCALE,
    Directions,
    Labels,
    PieceNames,
    Roles,
)
from polytile.encoder.catalog import label_catalog, label_matches
from polytile.encoder.pieces import ROTATION, EncodedPieceSet, blade_labels, encode, rod_labels
from polytile.encoder.tiles import WangTileSet
from polytile.engine.board import LabelBoard, LabeledEdge, Segment
from polytile.engine.universe import TORUS, PieceSet, Placement, Region, Tiling
from polytile.engine.validator import ValidationReport, validate
from polytile.engine.wang import WangAssignment
from polytile.exceptions import StructureError
from polytile.geometry.polyomino import rotate_cell
from polytile.labeling.keylock import KeySpec, LockSpec, pair_teeth, tooth_placement
from polytile.structure.layout import LabelPlacement, StructureLayout, build_layout

logger = logging.getLogger(__name__)

_VARIANTS = ((Labels.I_0N, Labels.I_1N), (Labels.J_0N, Labels.J_1N))


@dataclass
class LabelAudit:
    unmatched: List[LabeledEdge] = field(default_factory=list)
    crowded: List[Segment] = field(default_factory=list)
    incompatible: List[Tuple[LabeledEdge, LabeledEdge]] = field(default_factory=list)
    undisciplined: List[Tuple[LabeledEdge, LabeledEdge]] = field(default_factory=list)
    pairs: int = 0
    read: int = 0
    discarded: int = 0

    @property
    def ok(self) -> bool:
        return not (self.unmatched or self.crowded or self.incompatible or self.undisciplined)

    def problems(self, limit: int = 10) -> List[str]:
        found = [f"unmatched {e.label} at {e.start} walking {e.direction}" for e in self.unmatched]
        found += [f"segment {s} claimed more than once" for s in self.crowded]
        found += [
            f"{a.label} at {a.start} faces incompatible {b.label}" for a, b in self.incompatible
        ]
        found += [
            f"information {a.label} at {a.start} faces {b.label}" for a, b in self.undisciplined
        ]
        return found[:limit]

    def as_dict(self) -> Dict[str, int]:
        return {
            "pairs": self.pairs,
            "unmatched": len(self.unmatched),
            "crowded": len(self.crowded),
            "incompatible": len(self.incompatible),
            "undisciplined": len(self.undisciplined),
            "information_read": self.read,
            "information_discarded": self.discarded,
        }


@dataclass
class StructureBuild:
    layout: StructureLayout
    encoded: EncodedPieceSet
    board: LabelBoard
    audit: LabelAudit
    tiling: Tiling
    tooth_count: int
    report: Optional[ValidationReport] = None

    @property
    def piece_count(self) -> int:
        return len(self.layout.placements)

    def census(self) -> Dict[str, Set[int]]:
        return census(self.tiling)


def label_board(layout: StructureLayout) -> LabelBoard:
    """Every piece of the layout as labelled unit edges on the label torus."""
    board = LabelBoard(*layout.torus)
    rod = rod_labels(layout.tiles)
    blade = blade_labels(layout.tiles.n, layout.tiles.m)
    for index, placement in enumerate(layout.placements):
        labels = blade if placement.shape == PieceNames.BLADE else rod
        board.add_piece(index, labels, placement.start, placement.orientation)
    return board


def information_fate(label: str, partner: str) -> Optional[str]:
    """'read' when a wire end takes the bit, 'discarded' when the partner takes either variant."""
    if label not in Labels.INFORMATION:
        return None
    if partner in (Labels.ZERO, Labels.ONE):
        return "read"
    for variants in _VARIANTS:
        if label in variants and all(label_matches(v, partner) for v in variants):
            return "discarded"
    return "undisciplined"


def label_audit(board: LabelBoard) -> LabelAudit:
    audit = LabelAudit(unmatched=board.unmatched(), crowded=board.crowded())
    for a, b in board.pairs():
        audit.pairs += 1
        if not label_matches(a.label, b.label):
            audit.incompatible.append((a, b))
            continue
        for edge, other in ((a, b), (b, a)):
            fate = information_fate(edge.label, other.label)
            if fate == "read":
                audit.read += 1
            elif fate == "discarded":
                audit.discarded += 1
            elif fate == "undisciplined":
                audit.undisciplined.append((edge, other))
    logger.debug(f"Label audit: {audit.as_dict()}")
    return audit


def structure_teeth(board: LabelBoard) -> List[Placement]:
    """Teeth filling every lock of every facing pair on the board."""
    catalog = label_catalog()
    centres: Dict[Tuple[str, str], Tuple[Tuple[int, int], ...]] = {}
    teeth = []
    for a, b in board.pairs():
        for lock_edge, key_edge in ((a, b), (b, a)):
            key = (lock_edge.label, key_edge.label)
            if key not in centres:
                centres[key] = pair_teeth(
                    CATALOG_SCALE,
                    LockSpec(CATALOG_KEY_LENGTH, catalog[lock_edge.label].lock_index_set),
                    KeySpec(CATALOG_KEY_LENGTH, catalog[key_edge.label].key_index),
                )
            q = Directions.CCW.index(lock_edge.direction)
            sx, sy = lock_edge.start
            for centre in centres[key]:
                cx, cy = rotate_cell(centre, q)
                teeth.append(
                    tooth_placement(cx + sx * CATALOG_SCALE, cy + sy * CATALOG_SCALE)
                )
    return teeth


def census(tiling: Tiling) -> Dict[str, Set[int]]:
    """Orientations used per piece name."""
    used: Dict[str, Set[int]] = {}
    for placement in tiling.placements:
        used.setdefault(placement.piece, set()).add(placement.orientation)
    return used


def check_census(layout: StructureLayout):
    used = layout.census()
    rods = used.get(PieceNames.ROD, set())
    blades = used.get(PieceNames.BLADE, set())
    if len(rods) > 3 or len(blades) != 1:
        raise StructureError(
            f"structure uses {len(rods)} rod and {len(blades)} blade orientations"
        )


def build_structure(
    tiles: WangTileSet,
    assignment: WangAssignment,
    mode: str = ROTATION,
    verify: bool = True,
    report_limit: int = 100,
) -> StructureBuild:
    """Teeth, rods and blades tiling the torus that stands for ``assignment``.

    Raises StructureError when the label audit or the validator finds a defect;
    the error carries the audit or the validation report.
    """
    layout = build_layout(tiles, assignment)
    check_census(layout)
    encoded = encode(tiles, mode)
    board = label_board(layout)
    audit = label_audit(board)
    if not audit.ok:
        problems = audit.problems()
        for problem in problems:
            logger.error(f"Label audit: {problem}")
        raise StructureError(f"label audit failed: {problems[0]}", audit)

    pieces = [encoded.placement(p.shape, p.orientation, p.start) for p in layout.placements]
    teeth = structure_teeth(board)
    width, height = layout.torus
    rods = sorted(layout.census().get(PieceNames.ROD, set()))
    tiling = Tiling(
        Region(TORUS, width * CATALOG_SCALE, height * CATALOG_SCALE),
        pieces + teeth,
        {
            "n": str(layout.tiles.n),
            "m": str(layout.tiles.m),
            "mode": mode,
            "wang": f"{assignment.width}x{assignment.height}",
            "rod_orientations": ",".join(str(q) for q in rods),
            "stack": "upright",
        },
    )
    build = StructureBuild(layout, encoded, board, audit, tiling, len(teeth))
    logger.info(
        f"Structure: {len(pieces)} rods and blades, {len(teeth)} teeth on a "
        f"{tiling.region.width}x{tiling.region.height} torus"
    )

    if verify:
        build.report = validate(
            tiling.region, PieceSet(encoded.pieces), tiling.placements, report_limit
        )
        if not build.report.valid:
            logger.error(f"Structure failed validation: {build.report.summary()}")
            raise StructureError(build.report.summary(), build.report)
    return build


def _replace_piece(build: StructureBuild, index: int, moved: LabelPlacement) -> Tiling:
    placements = list(build.tiling.placements)
    placements[index] = build.encoded.placement(moved.shape, moved.orientation, moved.start)
    return replace(build.tiling, placements=placements, metadata=dict(build.tiling.metadata))


def _nth_of_role(build: StructureBuild, role: str, which: int) -> Tuple[int, LabelPlacement]:
    found = [(i, p) for i, p in enumerate(build.layout.placements) if p.role == role]
    if not found:
        raise StructureError(f"structure has no {role} pieces")
    return found[which % len(found)]


def mutate_wire(build: StructureBuild, which: int = 0) -> Tiling:
    """Turn one wire rod end for end in its channel; the teeth stay where they were."""
    index, wire = _nth_of_role(build, Roles.WIRE, which)
    w = build.layout.dims.width
    x, y = wire.start
    if wire.orientation == 0:
        moved = replace(wire, orientation=2, start=(x + w, y - 2))
    else:
        moved = replace(wire, orientation=0, start=(x - w, y + 2))
    return _replace_piece(build, index, moved)


def mutate_meat(build: StructureBuild, which: int = 0) -> Tiling:
    """Raise one stacked rod by one tile step."""
    index, rod = _nth_of_role(build, Roles.MEAT, which)
    return _replace_piece(build, index, rod.shifted(0, 2 * build.layout.dims.m))


def mutate_blade(build: StructureBuild, which: int = 0) -> Tiling:
    """Shift one blade one cell to the right."""
    index, _ = _nth_of_role(build, Roles.BLADE, which)
    placements = list(build.tiling.placements)
    p = placements[index]
    placements[index] = replace(p, dx=p.dx + 1)
    return replace(build.tiling, placements=placements, metadata=dict(build.tiling.metadata))

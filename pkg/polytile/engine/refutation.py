#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Bounded searches showing that some piece subsets cannot tile around a seed.

Both searches keep a record of what they tried: a failure tree of tooth
placements for the teeth-only case, and a log of forced, rejected and dead
steps for rods working at the label level. Neither claims more than it
explored: running into the search bound is reported, never taken as success.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from polytile.constants import Directions
from polytile.encoder.catalog import label_matches
from polytile.encoder.pieces import rod_labels
from polytile.encoder.tiles import WangTileSet
from polytile.engine.board import LabelBoard, LabeledEdge, turn_direction
from polytile.exceptions import PlacementError
from polytile.geometry.polyomino import rotate_cell
from polytile.labeling.keylock import tooth_cells

logger = logging.getLogger(__name__)

REFUTED = "refuted"
ESCAPED = "escaped"
INCONCLUSIVE = "inconclusive"
BUDGET = "budget"

Cell = Tuple[int, int]
Vertex = Tuple[int, int]

_OPPOSITE = {"r": "l", "l": "r", "u": "d", "d": "u"}
_NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1))


class _OutOfBudget(Exception):
    pass


class _Escaped(Exception):
    pass


@dataclass
class FailureNode:
    """One tooth placement; ``cell`` is the cell branched on next, or the cell left uncoverable."""

    placed: Optional[Cell]
    cell: Optional[Cell] = None
    children: List["FailureNode"] = field(default_factory=list)
    escaped: bool = False

    @property
    def dead(self) -> bool:
        return not self.children and not self.escaped

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children)

    def depth(self) -> int:
        return 1 + max((child.depth() for child in self.children), default=0)

    def leaves(self) -> List["FailureNode"]:
        if not self.children:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]


@dataclass
class TeethRefutation:
    status: str
    radius: int
    tree: FailureNode
    nodes: int

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED

    @property
    def case_split(self) -> List[Cell]:
        """Tooth centres tried at the seed corner."""
        return [child.placed for child in self.tree.children]


def covering_teeth(cell: Cell, covered: Set[Cell]) -> List[Cell]:
    """Centres of the teeth that cover ``cell`` without touching ``covered``."""
    x, y = cell
    centres = {(x + d, y) for d in range(-2, 3)} | {(x, y + d) for d in range(-2, 3)}
    return sorted(c for c in centres if not tooth_cells(*c) & covered)


def _frontier(covered: Set[Cell], seed: Cell, bound: int) -> List[Cell]:
    found = set()
    for x, y in covered:
        for dx, dy in _NEIGHBOURS:
            cell = (x + dx, y + dy)
            if cell in covered or cell in found:
                continue
            if abs(cell[0] - seed[0]) <= bound and abs(cell[1] - seed[1]) <= bound:
                found.add(cell)
    return sorted(found)


def teeth_only_refutation(
    radius: int = 4, seed: Optional[Cell] = (0, 0), limit: int = 100_000
) -> TeethRefutation:
    """Every way of tiling around a seed tooth with teeth alone, within ``radius`` tooth widths.

    The first branch is over the teeth covering the cell diagonal to the seed
    centre; after that the frontier cell with the fewest covering teeth is
    expanded. A frontier cell no tooth can cover ends its branch.
    """
    if seed is None:
        raise PlacementError("a refutation needs a seed tooth")
    if radius < 3:
        raise ValueError(f"radius {radius} is below three tooth widths")
    bound = 5 * radius
    nodes = 0

    def pick(covered):
        best = None
        for cell in _frontier(covered, seed, bound):
            count = len(covering_teeth(cell, covered))
            if best is None or count < best[1]:
                best = (cell, count)
                if count == 0:
                    break
        return best

    def expand(node: FailureNode, covered: Set[Cell]):
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _OutOfBudget()
        for centre in covering_teeth(node.cell, covered):
            child = FailureNode(centre)
            node.children.append(child)
            grown = covered | tooth_cells(*centre)
            best = pick(grown)
            if best is None:
                child.escaped = True
                raise _Escaped()
            child.cell = best[0]
            if best[1]:
                expand(child, grown)

    root = FailureNode(seed, (seed[0] + 1, seed[1] + 1))
    try:
        expand(root, set(tooth_cells(*seed)))
        status = REFUTED
    except _Escaped:
        status = ESCAPED
    except _OutOfBudget:
        status = BUDGET
    if status == REFUTED:
        logger.info(
            f"Teeth alone: all {len(root.leaves())} branches dead, tree of {root.size()} nodes"
        )
    else:
        logger.warning(f"Teeth-only refutation ended {status} after {nodes} nodes")
    return TeethRefutation(status, radius, root, nodes)


@dataclass(frozen=True)
class RodPlacement:
    orientation: int
    start: Vertex


@dataclass(frozen=True)
class LogEntry:
    kind: str
    depth: int
    label: str
    at: Vertex
    direction: str
    placement: Optional[RodPlacement] = None
    reason: str = ""


@dataclass
class RodRefutation:
    status: str
    window: int
    log: List[LogEntry]
    nodes: int

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED

    def entries(self, kind: str) -> List[LogEntry]:
        return [entry for entry in self.log if entry.kind == kind]


class RodScene:
    """Rods placed one at a time on an unbounded label board, with overlap bookkeeping."""

    def __init__(self, tiles: WangTileSet):
        self.labels = rod_labels(tiles)
        self.width = sum(1 for direction, _ in self.labels if direction == "r")
        self.board = LabelBoard()
        self.occupied: Dict[Cell, int] = {}
        self.placed: List[RodPlacement] = []
        self._offsets = {q: self._walk_offsets(q) for q in range(4)}

    def _walk_offsets(self, q: int) -> List[Vertex]:
        x, y = 0, 0
        offsets = []
        for direction, _ in self.labels:
            offsets.append((x, y))
            vx, vy = Directions.VECTORS[turn_direction(direction, q)]
            x, y = x + vx, y + vy
        return offsets

    def cells(self, placement: RodPlacement) -> List[Cell]:
        sx, sy = placement.start
        cells = []
        for x in range(self.width):
            for y in (-2, -1):
                cx, cy = rotate_cell((x, y), placement.orientation)
                cells.append((cx + sx, cy + sy))
        return cells

    def add(self, placement: RodPlacement) -> int:
        index = len(self.placed)
        cells = self.cells(placement)
        for cell in cells:
            if cell in self.occupied:
                raise PlacementError(f"rod {placement} overlaps rod {self.occupied[cell]}")
        for cell in cells:
            self.occupied[cell] = index
        self.board.add_piece(index, self.labels, placement.start, placement.orientation)
        self.placed.append(placement)
        return index

    def pop(self):
        index = len(self.placed) - 1
        placement = self.placed.pop()
        for cell in self.cells(placement):
            del self.occupied[cell]
        self.board.remove_piece(index)

    def candidates(
        self, edge: LabeledEdge
    ) -> Tuple[List[RodPlacement], List[Tuple[RodPlacement, str]]]:
        """Rods that could face ``edge``: those that fit, and those refused by a label pair."""
        vx, vy = Directions.VECTORS[edge.direction]
        end = (edge.start[0] + vx, edge.start[1] + vy)
        wanted = _OPPOSITE[edge.direction]
        seen = set()
        fits, rejected = [], []
        for q in range(4):
            for k, (direction, _) in enumerate(self.labels):
                if turn_direction(direction, q) != wanted:
                    continue
                ox, oy = self._offsets[q][k]
                placement = RodPlacement(q, (end[0] - ox, end[1] - oy))
                if placement in seen:
                    continue
                seen.add(placement)
                if any(cell in self.occupied for cell in self.cells(placement)):
                    continue
                reason = self._refusal(placement)
                if reason:
                    rejected.append((placement, reason))
                else:
                    fits.append(placement)
        return fits, rejected

    def _refusal(self, placement: RodPlacement) -> str:
        offsets = self._offsets[placement.orientation]
        sx, sy = placement.start
        for (direction, label), (ox, oy) in zip(self.labels, offsets):
            turned = turn_direction(direction, placement.orientation)
            for other in self.board.at((sx + ox, sy + oy), turned):
                if not label_matches(label, other.label):
                    return f"{label} cannot face {other.label}"
        return ""


def rods_and_teeth_refutation(
    tiles: WangTileSet,
    window: int = 12,
    limit: int = 20_000,
    seeds: Optional[Sequence[RodPlacement]] = None,
) -> RodRefutation:
    """Label-level propagation from seed rods, teeth assumed to fill every matched pair.

    At each step the unmatched label inside the window with the fewest
    candidate rods is covered: a single candidate is logged as forced, several
    as branches, a label no rod can face as dead. A label whose candidates all
    leave the window is open; a branch made only of open labels makes the
    outcome inconclusive.
    """
    if window < 0:
        raise ValueError(f"window {window} < 0")
    scene = RodScene(tiles)
    for placement in seeds or [RodPlacement(0, (0, 0))]:
        scene.add(placement)
    xs = [c[0] for c in scene.occupied]
    ys = [c[1] for c in scene.occupied]
    box = (min(xs) - window, min(ys) - window, max(xs) + 1 + window, max(ys) + 1 + window)

    def inside_cell(cell):
        return box[0] <= cell[0] < box[2] and box[1] <= cell[1] < box[3]

    def inside_edge(edge):
        vx, vy = Directions.VECTORS[edge.direction]
        return all(
            box[0] <= x <= box[2] and box[1] <= y <= box[3]
            for x, y in (edge.start, (edge.start[0] + vx, edge.start[1] + vy))
        )

    log: List[LogEntry] = []
    nodes = 0

    def entry(kind, depth, edge, placement=None, reason=""):
        log.append(
            LogEntry(kind, depth, edge.label, edge.start, edge.direction, placement, reason)
        )

    def choose():
        best = None
        edges = sorted(
            scene.board.unmatched(), key=lambda e: (e.start, e.direction, e.label)
        )
        for edge in edges:
            if not inside_edge(edge):
                continue
            fits, rejected = scene.candidates(edge)
            if not fits:
                return edge, [], rejected
            inside = [p for p in fits if all(inside_cell(c) for c in scene.cells(p))]
            if inside and (best is None or len(inside) < len(best[1])):
                best = (edge, inside, rejected)
        return best

    def propagate(depth: int) -> str:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _OutOfBudget()
        chosen = choose()
        if chosen is None:
            log.append(LogEntry("open", depth, "", (0, 0), ""))
            return INCONCLUSIVE
        edge, options, rejected = chosen
        for placement, reason in rejected:
            entry("rejected", depth, edge, placement, reason)
        if not options:
            entry("dead", depth, edge)
            return REFUTED
        kind = "forced" if len(options) == 1 else "branch"
        for placement in options:
            entry(kind, depth, edge, placement)
            scene.add(placement)
            try:
                outcome = propagate(depth + 1)
            finally:
                scene.pop()
            if outcome == INCONCLUSIVE:
                return INCONCLUSIVE
        return REFUTED

    try:
        status = propagate(0)
    except _OutOfBudget:
        status = BUDGET
    logger.info(
        f"Rods and teeth, window {window}: {status} after {nodes} nodes, "
        f"{len([e for e in log if e.kind == 'forced'])} forced steps"
    )
    return RodRefutation(status, window, log, nodes)

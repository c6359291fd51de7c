#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Label-level view of a tiling.

Pieces are reduced to their labelled boundary in label units: one unit edge
per label. The board files every edge under its lattice segment, wrapped when
the board is a torus, so facing labels can be paired and checked without
touching cells.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from polytile.constants import Directions

logger = logging.getLogger(__name__)

Vertex = Tuple[int, int]
Segment = Tuple[int, int, bool]


@dataclass(frozen=True)
class LabeledEdge:
    label: str
    direction: str
    start: Vertex
    piece: Hashable


def turn_direction(direction: str, quarter_turns: int) -> str:
    ccw = Directions.CCW
    return ccw[(ccw.index(direction) + quarter_turns) % 4]


def walk_labels(
    labels: Sequence[Tuple[str, str]], start: Vertex, quarter_turns: int = 0
) -> List[Tuple[str, str, Vertex]]:
    """(label, direction, start vertex) of each label edge of a placed piece."""
    x, y = start
    walked = []
    for direction, label in labels:
        turned = turn_direction(direction, quarter_turns)
        walked.append((label, turned, (x, y)))
        vx, vy = Directions.VECTORS[turned]
        x, y = x + vx, y + vy
    return walked


class LabelBoard:
    """Labelled unit edges of placed pieces; a torus when both sizes are given."""

    def __init__(self, width: Optional[int] = None, height: Optional[int] = None):
        self.width = width
        self.height = height
        self.edges: Dict[Segment, List[LabeledEdge]] = {}
        self.pieces: Dict[Hashable, List[LabeledEdge]] = {}

    @property
    def is_torus(self) -> bool:
        return self.width is not None and self.height is not None

    def segment(self, start: Vertex, direction: str) -> Segment:
        vx, vy = Directions.VECTORS[direction]
        end = (start[0] + vx, start[1] + vy)
        x, y = min(start, end)
        if self.is_torus:
            x, y = x % self.width, y % self.height
        return x, y, direction in ("r", "l")

    def add_piece(
        self,
        piece: Hashable,
        labels: Sequence[Tuple[str, str]],
        start: Vertex,
        quarter_turns: int = 0,
    ) -> List[LabeledEdge]:
        if piece in self.pieces:
            raise KeyError(f"piece {piece!r} already on the board")
        placed = [
            LabeledEdge(label, direction, vertex, piece)
            for label, direction, vertex in walk_labels(labels, start, quarter_turns)
        ]
        for edge in placed:
            self.edges.setdefault(self.segment(edge.start, edge.direction), []).append(edge)
        self.pieces[piece] = placed
        return placed

    def remove_piece(self, piece: Hashable):
        for edge in self.pieces.pop(piece):
            key = self.segment(edge.start, edge.direction)
            bucket = self.edges[key]
            bucket.remove(edge)
            if not bucket:
                del self.edges[key]

    def at(self, start: Vertex, direction: str) -> List[LabeledEdge]:
        return self.edges.get(self.segment(start, direction), [])

    def partner(self, edge: LabeledEdge) -> Optional[LabeledEdge]:
        """The edge facing ``edge``, if any."""
        for other in self.at(edge.start, edge.direction):
            if other is not edge:
                return other
        return None

    def pairs(self) -> Iterable[Tuple[LabeledEdge, LabeledEdge]]:
        for key in sorted(self.edges):
            bucket = self.edges[key]
            if len(bucket) == 2:
                yield bucket[0], bucket[1]

    def unmatched(self) -> List[LabeledEdge]:
        return [bucket[0] for bucket in self.edges.values() if len(bucket) == 1]

    def crowded(self) -> List[Segment]:
        """Segments claimed by more than two edges, or by two edges walking the same way."""
        bad = []
        for key, bucket in self.edges.items():
            if len(bucket) > 2 or (
                len(bucket) == 2 and bucket[0].direction == bucket[1].direction
            ):
                bad.append(key)
        return sorted(bad)

    def incompatible(
        self, matches: Callable[[str, str], bool]
    ) -> List[Tuple[LabeledEdge, LabeledEdge]]:
        return [(a, b) for a, b in self.pairs() if not matches(a.label, b.label)]

    def summary(self, matches: Callable[[str, str], bool]) -> Dict[str, int]:
        return {
            "pieces": len(self.pieces),
            "segments": len(self.edges),
            "unmatched": len(self.unmatched()),
            "crowded": len(self.crowded()),
            "incompatible": len(self.incompatible(matches)),
        }

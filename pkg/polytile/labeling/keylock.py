#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Teeth, keys and locks.

A labelled edge of width ``alpha`` is walked left to right with the piece
below it. Its word is

    r^s d^D r [lock column] r^5 [key column] r d^D r^s

with ``D = 6l - 2`` and ``s = (alpha - 7) / 2``. The lock column climbs the
right wall of a one-cell-wide dent and carves a tooth cavity beside its
``(6x-2)``-th square for every index ``x`` of the lock set; the key column is a
one-cell-wide bump with a single tooth beside its ``(6k-2)``-th square. Squares
are counted from the one next to the edge line.

In the edge frame the dent is column ``x = s``, rows ``-D .. -1`` and the bump
is column ``x = s + 6``, rows ``0 .. D-1``. Turning a neighbouring edge half a
turn onto this one puts its bump exactly into this dent and its key tooth onto
the cavity of the same index.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Optional, Set, Tuple

from polytile.constants import PieceNames
from polytile.engine.search import FOUND, solve
from polytile.engine.universe import RECT, Placement, PlacementUniverse, Region
from polytile.exceptions import CatalogMismatchError, LabelSpecError, ScaleError
from polytile.geometry.polyomino import Polyomino, word_to_polyomino
from polytile.geometry.words import (
    TOOTH_BUMP,
    TOOTH_CAVITY,
    TOOTH_OUTLINE,
    BoundaryWord,
    parse_word,
    trace_path,
)

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]

# Gap between the lock column and the key column along the edge line.
KEY_LOCK_GAP = 5


@dataclass(frozen=True)
class KeySpec:
    length: int
    index: int

    def __post_init__(self):
        if self.length < 1:
            raise LabelSpecError(f"key length {self.length} < 1")
        if not 1 <= self.index <= self.length:
            raise LabelSpecError(f"key index {self.index} outside 1..{self.length}")

    @property
    def depth(self) -> int:
        return 6 * self.length - 2


@dataclass(frozen=True)
class LockSpec:
    length: int
    index_set: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "index_set", frozenset(self.index_set))
        if self.length < 1:
            raise LabelSpecError(f"lock length {self.length} < 1")
        if not self.index_set:
            raise LabelSpecError("lock index set is empty")
        bad = sorted(x for x in self.index_set if not 1 <= x <= self.length)
        if bad:
            raise LabelSpecError(f"lock indices {bad} outside 1..{self.length}")

    @property
    def depth(self) -> int:
        return 6 * self.length - 2


def tooth_row(index: int) -> int:
    """Square, counted from the edge line, that a tooth of this index sits beside."""
    return 6 * index - 2


def tooth_cells(cx: int, cy: int) -> Set[Cell]:
    """The nine cells of a tooth centred at (cx, cy)."""
    cells = {(cx + d, cy) for d in range(-2, 3)}
    cells.update((cx, cy + d) for d in range(-2, 3))
    return cells


def tooth_placement(cx: int, cy: int) -> Placement:
    return Placement(PieceNames.TOOTH, 0, cx - 2, cy - 2)


@lru_cache(maxsize=1)
def make_tooth() -> Polyomino:
    """The nine-cell cross."""
    return word_to_polyomino(parse_word(TOOTH_OUTLINE))


def make_key(spec: KeySpec) -> Polyomino:
    """Bump footprint: column x = 0, rows 0..D-1, tooth on the -x side."""
    cells = {(0, y) for y in range(spec.depth)}
    cells |= tooth_cells(-3, tooth_row(spec.index) - 1)
    return Polyomino.from_cells(cells)


def lock_cells(spec: LockSpec) -> Set[Cell]:
    cells = {(0, -y) for y in range(1, spec.depth + 1)}
    for x in spec.index_set:
        cells |= tooth_cells(3, -tooth_row(x))
    return cells


def make_lock(spec: LockSpec) -> Polyomino:
    """Dent footprint: column x = 0, rows -D..-1, cavities on the +x side."""
    return Polyomino.from_cells(lock_cells(spec))


def inserted_key_cells(spec: KeySpec) -> Set[Cell]:
    """Key bump of the facing edge, turned half a turn into the lock frame."""
    cells = {(0, y) for y in range(spec.depth)}
    cells |= tooth_cells(-3, tooth_row(spec.index) - 1)
    return {(-x, -y - 1) for x, y in cells}


def _check_lengths(key: KeySpec, lock: LockSpec):
    if key.length != lock.length:
        raise LabelSpecError(f"key length {key.length} != lock length {lock.length}")


def key_lock_match_rule(key: KeySpec, lock: LockSpec) -> bool:
    _check_lengths(key, lock)
    return key.index in lock.index_set


def residual_cavities(lock: LockSpec, key: KeySpec) -> Optional[FrozenSet[Cell]]:
    """Lock cells left empty by the inserted key, or None if the key collides."""
    _check_lengths(key, lock)
    dent = lock_cells(lock)
    inserted = inserted_key_cells(key)
    if not inserted <= dent:
        return None
    return frozenset(dent - inserted)


@lru_cache(maxsize=4096)
def fill_cavities(cells: FrozenSet[Cell]) -> Optional[Tuple[Placement, ...]]:
    """Tooth placements covering ``cells`` exactly, found by exact cover; None if impossible."""
    if not cells:
        return ()
    x0 = min(x for x, _ in cells)
    y0 = min(y for _, y in cells)
    width = max(x for x, _ in cells) - x0 + 1
    height = max(y for _, y in cells) - y0 + 1
    if width < 5 or height < 5:
        return None

    universe = PlacementUniverse(
        Region(RECT, width, height),
        {PieceNames.TOOTH: make_tooth()},
        translation_only=True,
        mask=[(x - x0, y - y0) for x, y in cells],
    )
    result = solve(universe, limit=100_000)
    if result.status != FOUND:
        return None
    return tuple(
        Placement(p.piece, p.orientation, p.dx + x0, p.dy + y0)
        for p in result.tiling.placements
    )


def key_lock_fill(key: KeySpec, lock: LockSpec) -> Optional[Tuple[Placement, ...]]:
    """Teeth completing a key inserted into a lock, in the lock frame."""
    residual = residual_cavities(lock, key)
    if residual is None:
        logger.debug(f"key {key.index} collides with lock {sorted(lock.index_set)}")
        return None
    return fill_cavities(residual)


def key_lock_match_oracle(key: KeySpec, lock: LockSpec) -> bool:
    """Geometric match: insert the key, then tile what is left with teeth."""
    return key_lock_fill(key, lock) is not None


def min_scale(length: int) -> int:
    """Edge width holding one key, one lock and their margins."""
    if length < 1:
        raise LabelSpecError(f"label length {length} < 1")
    return 12 * length + 3


def check_scale(alpha: int, length: int):
    if alpha < min_scale(length):
        raise ScaleError(f"scale {alpha} below minimum {min_scale(length)} for length {length}")
    if alpha % 2 == 0:
        raise ScaleError(f"scale {alpha} must be odd to centre facing labels")


def edge_margin(alpha: int) -> int:
    return (alpha - 7) // 2


def labeled_edge_word(alpha: int, key: KeySpec, lock: LockSpec) -> BoundaryWord:
    """Open word of width ``alpha`` carrying one lock and one key."""
    _check_lengths(key, lock)
    check_scale(alpha, key.length)
    depth = key.depth
    margin = edge_margin(alpha)
    cavity = parse_word(TOOTH_CAVITY).steps
    bump = parse_word(TOOTH_BUMP).steps
    cavity_rows = {tooth_row(x) for x in lock.index_set}

    steps = [("r", margin), ("d", depth), ("r", 1)]
    for q in range(depth, 0, -1):
        steps.extend(cavity if q in cavity_rows else [("u", 1)])
    steps.append(("r", KEY_LOCK_GAP))
    for q in range(1, depth + 1):
        steps.extend(bump if q == tooth_row(key.index) else [("u", 1)])
    steps.extend([("r", 1), ("d", depth), ("r", alpha - margin - 7)])
    return BoundaryWord(tuple(steps))


def _unit_letters(word: BoundaryWord) -> str:
    return "".join(direction * count for direction, count in word.steps)


def decode_edge_word(word: BoundaryWord, length: int) -> Tuple[int, FrozenSet[int]]:
    """Reads (key index, lock index set) back from a labelled edge word."""
    letters = _unit_letters(word)
    vertices = trace_path(word)
    cavity = _unit_letters(parse_word(TOOTH_CAVITY))
    bump = _unit_letters(parse_word(TOOTH_BUMP))

    def positions(pattern):
        found = []
        start = letters.find(pattern)
        while start >= 0:
            found.append(int(vertices[start][1]))
            start = letters.find(pattern, start + len(pattern))
        return found

    def index_of(row):
        if (row + 2) % 6:
            raise CatalogMismatchError(f"tooth at square {row} is off the 6-square grid")
        index = (row + 2) // 6
        if not 1 <= index <= length:
            raise CatalogMismatchError(f"tooth index {index} outside 1..{length}")
        return index

    locks = frozenset(index_of(-y) for y in positions(cavity))
    keys = [index_of(y + 1) for y in positions(bump)]
    if len(keys) != 1:
        raise CatalogMismatchError(f"expected one key tooth, found {len(keys)}")
    return keys[0], locks


def pair_teeth(
    alpha: int, lock: LockSpec, key: KeySpec
) -> Tuple[Tuple[int, int], ...]:
    """Tooth centres, in the edge frame of the lock side, left over when ``key`` faces ``lock``."""
    fill = key_lock_fill(key, lock)
    if fill is None:
        raise LabelSpecError(
            f"key {key.index} does not fit lock {sorted(lock.index_set)}"
        )
    margin = edge_margin(alpha)
    return tuple((p.dx + 2 + margin, p.dy + 2) for p in fill)


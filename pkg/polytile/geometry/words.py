#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Boundary words: lattice paths written as runs of unit steps.

A word such as ``r100 d100 r u12`` is a sequence of (direction, count) runs.
The letters ``t`` and ``T`` are macros for the tooth cavity and the tooth
bump used by labelled edges. Vertices are lattice points with y growing
upwards; a cell (x, y) is the unit square [x, x+1] x [y, y+1].
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from polytile.constants import Directions
from polytile.exceptions import OpenWordError, SelfIntersectingWordError, WordSyntaxError

logger = logging.getLogger(__name__)

Step = Tuple[str, int]

# Carves a tooth-shaped cavity to the right of an upward path, net one step up.
TOOTH_CAVITY = "r2 d2 r u2 r2 u l2 u2 l d2 l2"
# Adds a tooth-shaped bump to the left of an upward path, net one step up.
TOOTH_BUMP = "l2 d2 l u2 l2 u r2 u2 r d2 r2"
# Closed outline of the tooth piece.
TOOTH_OUTLINE = "r2 d2 r u2 r2 u l2 u2 l d2 l2 d"

MACROS = {"t": TOOTH_CAVITY, "T": TOOTH_BUMP}

_OPPOSITE = {"r": "l", "l": "r", "u": "d", "d": "u"}


@dataclass(frozen=True)
class BoundaryWord:
    """Immutable sequence of runs. Counts are positive; runs are not merged."""

    steps: Tuple[Step, ...]

    def __post_init__(self):
        for direction, count in self.steps:
            if direction not in Directions.VECTORS:
                raise WordSyntaxError(f"unknown direction {direction!r}")
            if count < 1:
                raise WordSyntaxError(f"non-positive count {count} for {direction!r}")

    def __add__(self, other):
        return BoundaryWord(self.steps + other.steps)

    def __len__(self):
        """Number of unit steps."""
        return sum(count for _, count in self.steps)

    def __str__(self):
        return emit_word(self)

    @property
    def runs(self):
        return len(self.steps)


def _tokens(text: str):
    """Yields (letter, count, column) for each token of a word text."""
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        column = i + 1
        if ch not in Directions.VECTORS and ch not in MACROS:
            raise WordSyntaxError(f"unknown letter {ch!r}", column)
        j = i + 1
        while j < n and (text[j].isdigit() or text[j] == "-"):
            j += 1
        digits = text[i + 1 : j]
        if digits:
            if not digits.isdigit():
                raise WordSyntaxError(f"bad count {digits!r} after {ch!r}", column)
            count = int(digits)
            if count < 1:
                raise WordSyntaxError(f"non-positive count {count} after {ch!r}", column)
        else:
            count = 1
        yield ch, count, column
        i = j


def parse_word(text: str) -> BoundaryWord:
    """Parses a word text, expanding the tooth macros."""
    steps = []
    for letter, count, _ in _tokens(text):
        if letter in MACROS:
            macro = parse_word(MACROS[letter]).steps
            steps.extend(macro * count)
        else:
            steps.append((letter, count))

    if not steps:
        raise WordSyntaxError("empty word")

    return BoundaryWord(tuple(steps))


def make_word(steps: Iterable[Step]) -> BoundaryWord:
    return BoundaryWord(tuple(steps))


def normalize(word: BoundaryWord) -> BoundaryWord:
    """Merges consecutive runs of the same direction."""
    merged = []
    for direction, count in word.steps:
        if merged and merged[-1][0] == direction:
            merged[-1] = (direction, merged[-1][1] + count)
        else:
            merged.append((direction, count))
    return BoundaryWord(tuple(merged))


def emit_word(word: BoundaryWord) -> str:
    """Normalized token text; a count of one is left implicit."""
    return " ".join(
        direction if count == 1 else f"{direction}{count}"
        for direction, count in normalize(word).steps
    )


def concat(words: Sequence[BoundaryWord]) -> BoundaryWord:
    steps = []
    for word in words:
        steps.extend(word.steps)
    return BoundaryWord(tuple(steps))


def turn_word(word: BoundaryWord, quarter_turns: int) -> BoundaryWord:
    """Rotates every step counter-clockwise by the given number of quarter turns."""
    quarter_turns %= 4
    if quarter_turns == 0:
        return word
    ccw = Directions.CCW
    return BoundaryWord(
        tuple(
            (ccw[(ccw.index(direction) + quarter_turns) % 4], count)
            for direction, count in word.steps
        )
    )


def reverse_word(word: BoundaryWord) -> BoundaryWord:
    """The same path walked backwards."""
    return BoundaryWord(
        tuple((_OPPOSITE[direction], count) for direction, count in reversed(word.steps))
    )


def word_displacement(word: BoundaryWord) -> Tuple[int, int]:
    dx = dy = 0
    for direction, count in word.steps:
        vx, vy = Directions.VECTORS[direction]
        dx += vx * count
        dy += vy * count
    return dx, dy


def unit_vectors(word: BoundaryWord) -> np.ndarray:
    """(N, 2) array with one row per unit step."""
    if not word.steps:
        return np.zeros((0, 2), dtype=np.int64)
    vectors = np.array(
        [Directions.VECTORS[direction] for direction, _ in word.steps], dtype=np.int64
    )
    counts = np.array([count for _, count in word.steps], dtype=np.int64)
    return np.repeat(vectors, counts, axis=0)


def trace_path(word: BoundaryWord, start=(0, 0)) -> np.ndarray:
    """(N+1, 2) array of the visited vertices, starting at ``start``."""
    steps = unit_vectors(word)
    vertices = np.zeros((len(steps) + 1, 2), dtype=np.int64)
    vertices[0] = start
    np.cumsum(steps, axis=0, out=vertices[1:])
    vertices[1:] += np.asarray(start, dtype=np.int64)
    return vertices


def is_closed(word: BoundaryWord) -> bool:
    return word_displacement(word) == (0, 0)


def is_simple(word: BoundaryWord) -> bool:
    """True iff the closed path visits no vertex twice besides start = end."""
    if not is_closed(word):
        raise OpenWordError(f"word with displacement {word_displacement(word)} is open")

    vertices = trace_path(word)[:-1]
    return len(np.unique(vertices, axis=0)) == len(vertices)


def is_simple_open(word: BoundaryWord) -> bool:
    """True iff an open path visits every vertex at most once."""
    vertices = trace_path(word)
    return len(np.unique(vertices, axis=0)) == len(vertices)


def signed_area(word: BoundaryWord) -> int:
    """Shoelace area; positive for counter-clockwise closed paths."""
    if not is_closed(word):
        raise OpenWordError(f"word with displacement {word_displacement(word)} is open")

    vertices = trace_path(word)
    x = vertices[:-1, 0]
    y = vertices[:-1, 1]
    x_next = vertices[1:, 0]
    y_next = vertices[1:, 1]
    twice = int(np.sum(x * y_next - x_next * y))
    return twice // 2


def require_simple_closed(word: BoundaryWord):
    if not is_simple(word):
        raise SelfIntersectingWordError("word visits a vertex twice")

#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import pytest

from polytile.engine.search import (
    BUDGET,
    FOUND,
    NONE,
    brute_force_count,
    enumerate_tilings,
    solve,
)
from polytile.engine.universe import (
    RECT,
    TORUS,
    PieceSet,
    Placement,
    PlacementUniverse,
    Region,
)
from polytile.engine.validator import validate
from polytile.exceptions import PlacementError
from polytile.geometry.polyomino import Polyomino

DOMINO = {"domino": Polyomino.rectangle(2, 1)}
TROMINO = {"L": Polyomino.from_cells([(0, 0), (1, 0), (0, 1)])}


def test_region():
    assert Region(TORUS, 3, 2).area == 6
    with pytest.raises(PlacementError):
        Region("disk", 3, 3)
    with pytest.raises(PlacementError):
        Region(RECT, 0, 3)
    with pytest.raises(PlacementError):
        Placement("domino", 4, 0, 0)


def test_distinct_orientations():
    assert PieceSet(DOMINO).distinct_orientations("domino") == (0, 1)
    assert PieceSet(TROMINO).distinct_orientations("L") == (0, 1, 2, 3)
    square = {"o": Polyomino.rectangle(2, 2)}
    assert PieceSet(square).distinct_orientations("o") == (0,)


def test_universe_sizes():
    rect = PlacementUniverse(Region(RECT, 2, 2), DOMINO)
    assert len(rect) == 4
    only = PlacementUniverse(Region(RECT, 2, 2), DOMINO, translation_only=True)
    assert len(only) == 2
    torus = PlacementUniverse(Region(TORUS, 2, 2), DOMINO)
    assert len(torus) == 8
    masked = PlacementUniverse(Region(RECT, 3, 3), DOMINO, mask=[(0, 0), (1, 0), (1, 1)])
    assert len(masked) == 2
    with pytest.raises(PlacementError):
        PlacementUniverse(Region(TORUS, 2, 2), DOMINO, mask=[(0, 0)])


def test_solve_finds_valid_tiling():
    universe = PlacementUniverse(Region(RECT, 4, 3), TROMINO)
    result = solve(universe)
    assert result.status == FOUND
    report = validate(universe.region, TROMINO, result.tiling.placements)
    assert report.valid


def test_solve_none():
    universe = PlacementUniverse(Region(RECT, 3, 3), DOMINO)
    assert solve(universe).status == NONE


def test_solve_budget():
    universe = PlacementUniverse(Region(RECT, 6, 6), DOMINO)
    result = solve(universe, limit=3)
    assert result.status == BUDGET
    assert result.tiling is None


def test_enumerate_counts():
    assert enumerate_tilings(PlacementUniverse(Region(RECT, 2, 2), DOMINO)).count == 2
    assert enumerate_tilings(PlacementUniverse(Region(RECT, 2, 3), TROMINO)).count == 2
    assert enumerate_tilings(PlacementUniverse(Region(TORUS, 2, 2), DOMINO)).count == 8


def test_enumerate_matches_brute_force():
    for region, pieces in (
        (Region(RECT, 2, 3), TROMINO),
        (Region(RECT, 2, 4), DOMINO),
        (Region(RECT, 3, 2), DOMINO),
    ):
        universe = PlacementUniverse(region, pieces)
        assert enumerate_tilings(universe).count == brute_force_count(universe)


def test_enumerate_cap():
    result = enumerate_tilings(PlacementUniverse(Region(RECT, 4, 4), DOMINO), cap=3)
    assert result.count == 3
    assert result.cap_exceeded
    assert result.status == FOUND


def test_threads_agree():
    universe = PlacementUniverse(Region(RECT, 4, 4), DOMINO)
    single = enumerate_tilings(universe)
    split = enumerate_tilings(universe, threads=3)
    assert split.count == single.count == 36
    assert solve(universe, threads=2).status == FOUND


def test_brute_force_limit():
    with pytest.raises(ValueError):
        brute_force_count(PlacementUniverse(Region(RECT, 4, 4), DOMINO))


def test_solve_stops_at_first_tiling():
    universe = PlacementUniverse(
        Region(RECT, 4, 4), {**DOMINO, "c": Polyomino.rectangle(1, 1)}
    )
    first = solve(universe)
    assert first.status == FOUND
    # a budget that just covers the first tiling is enough
    tight = solve(universe, limit=first.nodes)
    assert tight.status == FOUND
    assert tight.tiling.placements == first.tiling.placements
    assert not tight.exhausted
    assert solve(universe, limit=17).status == FOUND


def test_enumerate_budget_keeps_tilings_found():
    universe = PlacementUniverse(Region(RECT, 4, 4), DOMINO)
    first = solve(universe)
    result = enumerate_tilings(universe, limit=first.nodes)
    assert result.status == FOUND
    assert result.exhausted
    assert 1 <= result.count < 36

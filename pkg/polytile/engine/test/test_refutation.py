#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import pytest

from polytile.constants import Labels
from polytile.encoder.pieces import Dimensions, rod_labels
from polytile.encoder.tiles import WangTileSet
from polytile.engine.board import LabeledEdge
from polytile.engine.refutation import (
    BUDGET,
    INCONCLUSIVE,
    REFUTED,
    RodPlacement,
    RodScene,
    covering_teeth,
    rods_and_teeth_refutation,
    teeth_only_refutation,
)
from polytile.exceptions import PlacementError
from polytile.labeling.keylock import tooth_cells

TILES = WangTileSet.from_colors(2, [(1, 2, 1, 2)])


def test_covering_teeth():
    assert len(covering_teeth((0, 0), set())) == 9
    assert covering_teeth((1, 1), tooth_cells(0, 0)) == [(1, 3), (3, 1)]


@pytest.mark.parametrize("radius", [3, 4])
def test_teeth_alone_cannot_tile(radius):
    outcome = teeth_only_refutation(radius=radius)
    assert outcome.status == REFUTED
    assert outcome.refuted
    assert outcome.case_split == [(1, 3), (3, 1)]
    # one forced tooth under each corner choice, then a cell nothing covers
    assert outcome.tree.size() == 5
    assert outcome.tree.depth() == 3
    assert [len(child.children) for child in outcome.tree.children] == [1, 1]
    assert all(leaf.dead for leaf in outcome.tree.leaves())


def test_teeth_refutation_arguments():
    with pytest.raises(PlacementError):
        teeth_only_refutation(seed=None)
    with pytest.raises(ValueError):
        teeth_only_refutation(radius=2)
    assert teeth_only_refutation(radius=3, limit=0).status == BUDGET


def test_rod_scene_geometry():
    scene = RodScene(TILES)
    width = Dimensions(1, 2).width
    assert scene.width == width
    assert len(scene.labels) == len(rod_labels(TILES)) == 2 * width + 4
    flat = scene.cells(RodPlacement(0, (0, 0)))
    assert len(flat) == 2 * width
    assert {y for _, y in flat} == {-2, -1}
    upright = scene.cells(RodPlacement(1, (0, 0)))
    assert {x for x, _ in upright} == {0, 1}
    assert {y for _, y in upright} == set(range(width))


def test_rod_scene_add_and_pop():
    scene = RodScene(TILES)
    scene.add(RodPlacement(0, (0, 0)))
    with pytest.raises(PlacementError):
        scene.add(RodPlacement(0, (1, 0)))
    scene.add(RodPlacement(0, (0, -2)))
    assert len(scene.board.pieces) == 2
    scene.pop()
    assert len(scene.occupied) == 2 * scene.width
    assert list(scene.board.pieces) == [0]


def test_rod_scene_candidates():
    scene = RodScene(TILES)
    scene.add(RodPlacement(0, (0, 0)))
    top = scene.board.pieces[0][0]
    fits, rejected = scene.candidates(top)
    occupied = set(scene.occupied)
    for placement in fits:
        assert not occupied & set(scene.cells(placement))
    for placement, reason in rejected:
        assert "cannot face" in reason
    assert fits or rejected


def test_rods_refutation_bookkeeping():
    with pytest.raises(ValueError):
        rods_and_teeth_refutation(TILES, window=-1)
    assert rods_and_teeth_refutation(TILES, window=2, limit=0).status == BUDGET

    outcome = rods_and_teeth_refutation(TILES, window=0)
    assert outcome.status in (REFUTED, INCONCLUSIVE)
    assert {entry.kind for entry in outcome.log} <= {
        "forced",
        "branch",
        "rejected",
        "dead",
        "open",
    }
    assert outcome.refuted == (outcome.status == REFUTED)
    for entry in outcome.entries("rejected"):
        assert entry.reason


def test_rods_refutation_reports_dead_label():
    outcome = rods_and_teeth_refutation(TILES, window=4, limit=50)
    if outcome.status == REFUTED:
        assert outcome.entries("dead")
    assert isinstance(outcome.log[0].at, tuple)


def test_rods_and_teeth_cannot_tile_one_colour():
    tiles = WangTileSet.from_colors(1, [(1, 1, 1, 1)])
    assert rods_and_teeth_refutation(tiles, window=4).status == INCONCLUSIVE

    outcome = rods_and_teeth_refutation(tiles, window=12)
    assert outcome.status == REFUTED
    forced = outcome.entries("forced")
    assert Labels.M in {entry.label for entry in forced}
    # rods pile up under the seed, one row pair at a time
    starts = {entry.placement.start for entry in forced}
    assert {(0, -2 * k) for k in range(1, 7)} <= starts
    dead = outcome.entries("dead")
    assert [(entry.label, entry.at) for entry in dead] == [(Labels.N, (-2, -4))]

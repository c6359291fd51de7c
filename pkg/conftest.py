#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import os

import pytest

from polytile.encoder.tiles import WangTileSet
from polytile.engine.wang import WangAssignment
from polytile.structure.builder import build_structure

RESOURCES = os.path.join(os.path.dirname(__file__), "tests", "resources")


@pytest.fixture
def resources():
    return RESOURCES


@pytest.fixture(scope="session")
def single_tile_set():
    return WangTileSet.from_colors(2, [(1, 2, 1, 2)])


@pytest.fixture(scope="session")
def unit_assignment():
    return WangAssignment(1, 1, ((0,),))


@pytest.fixture(scope="session")
def unit_structure(single_tile_set, unit_assignment):
    return build_structure(single_tile_set, unit_assignment)

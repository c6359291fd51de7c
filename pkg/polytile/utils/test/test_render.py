#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import pytest

from polytile.engine.universe import RECT, TORUS, Placement, Region, Tiling
from polytile.exceptions import PolytileError
from polytile.geometry.polyomino import Polyomino
from polytile.utils.render import RenderSpec, legend, render_pieces, render_tiling

PIECES = {"domino": Polyomino.rectangle(2, 1), "c": Polyomino.rectangle(1, 1)}


def _rects(drawing):
    return drawing.tostring().count("<rect")


def test_render_pieces():
    drawing = render_pieces(PIECES, RenderSpec(cell_pixels=3))
    assert legend(drawing) == ["domino", "c"]
    assert _rects(drawing) == 2
    # 2 + gap 2 + 1 cells
    assert 'width="15"' in drawing.tostring()


def test_render_tiling_wraps_torus():
    tiling = Tiling(
        Region(TORUS, 2, 1),
        [Placement("domino", 0, 1, 0)],
    )
    drawing = render_tiling(tiling, PIECES)
    assert legend(drawing) == ["p0"]
    assert _rects(drawing) == 2


def test_render_tiling_viewport():
    tiling = Tiling(
        Region(RECT, 4, 1),
        [Placement("domino", 0, 0, 0), Placement("domino", 0, 2, 0)],
    )
    drawing = render_tiling(tiling, PIECES, RenderSpec(viewport=(0, 0, 2, 1)))
    assert _rects(drawing) == 1


def test_colour_by_orientation_shares_colours():
    tiling = Tiling(
        Region(RECT, 2, 2),
        [Placement("domino", 0, 0, 0), Placement("domino", 0, 0, 1)],
    )
    text = render_tiling(tiling, PIECES, RenderSpec(color_by="orientation")).tostring()
    assert text.count('fill="#4e79a7"') == 2


def test_colour_by_role_needs_roles():
    tiling = Tiling(Region(RECT, 2, 1), [Placement("domino", 0, 0, 0)])
    with pytest.raises(PolytileError):
        render_tiling(tiling, PIECES, RenderSpec(color_by="role"))
    drawing = render_tiling(tiling, PIECES, RenderSpec(color_by="role"), roles=["wire"])
    assert _rects(drawing) == 1


@pytest.mark.parametrize(
    "kwargs",
    [{"cell_pixels": 0}, {"color_by": "size"}, {"viewport": (2, 0, 1, 1)}],
)
def test_bad_spec(kwargs):
    with pytest.raises(PolytileError):
        RenderSpec(**kwargs)

#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import pytest

from polytile.engine.board import LabelBoard, turn_direction, walk_labels

SQUARE = [("r", "a"), ("d", "b"), ("l", "c"), ("u", "d")]


def same(a, b):
    return a == b


def test_turn_direction():
    assert turn_direction("r", 1) == "u"
    assert turn_direction("d", 1) == "r"
    assert turn_direction("l", 6) == "r"


def test_walk_labels():
    assert walk_labels([("r", "a"), ("u", "b")], (0, 0), 1) == [
        ("a", "u", (0, 0)),
        ("b", "l", (0, 1)),
    ]


def test_neighbours_pair_up():
    board = LabelBoard()
    board.add_piece("left", SQUARE, (0, 1))
    board.add_piece("right", SQUARE, (1, 1))
    pairs = list(board.pairs())
    assert len(pairs) == 1
    assert {pairs[0][0].label, pairs[0][1].label} == {"b", "d"}
    assert len(board.unmatched()) == 6
    assert board.crowded() == []
    right_side = board.pieces["left"][1]
    assert board.partner(right_side).piece == "right"
    assert board.incompatible(same) == [pairs[0]]


def test_torus_closes_everything():
    board = LabelBoard(2, 1)
    board.add_piece(0, SQUARE, (0, 1))
    board.add_piece(1, SQUARE, (1, 1))
    assert board.is_torus
    assert board.unmatched() == []
    assert len(list(board.pairs())) == 4
    assert board.summary(same) == {
        "pieces": 2,
        "segments": 4,
        "unmatched": 0,
        "crowded": 0,
        "incompatible": 4,
    }


def test_crowded_and_remove():
    board = LabelBoard()
    board.add_piece("a", SQUARE, (0, 1))
    board.add_piece("b", SQUARE, (0, 1))
    assert len(board.crowded()) == 4
    with pytest.raises(KeyError):
        board.add_piece("a", SQUARE, (5, 5))
    board.remove_piece("b")
    assert board.crowded() == []
    assert len(board.unmatched()) == 4
    board.remove_piece("a")
    assert board.edges == {}

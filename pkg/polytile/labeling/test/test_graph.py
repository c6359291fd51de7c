#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import pytest

from polytile.exceptions import GraphError
from polytile.labeling.graph import MatchingGraph, derive_index_sets


def test_graph_basics():
    graph = MatchingGraph(["a", "b", "c"], [("a", "b"), ("c", "c")])
    assert graph.nodes == ["a", "b", "c"]
    assert len(graph) == 3
    assert "a" in graph
    assert graph.adjacent("b", "a")
    assert graph.adjacent("c", "c")
    assert not graph.adjacent("a", "c")
    assert graph.neighbours("c") == ["c"]
    assert graph.isolated() == []
    assert graph.default_keys() == {"a": 1, "b": 2, "c": 3}


def test_graph_errors():
    graph = MatchingGraph(["a"])
    with pytest.raises(GraphError):
        graph.add_node("a")
    with pytest.raises(GraphError):
        graph.add_edge("a", "z")


def test_derive_index_sets():
    graph = MatchingGraph(["a", "b", "c", "d"], [("a", "b"), ("c", "c"), ("a", "c")])
    sets = derive_index_sets(graph)
    assert sets == {
        "a": frozenset({2, 3}),
        "b": frozenset({1}),
        "c": frozenset({1, 3}),
        "d": frozenset(),
    }
    assert graph.isolated() == ["d"]


def test_derive_index_sets_custom_keys():
    graph = MatchingGraph(["a", "b"], [("a", "b")])
    assert derive_index_sets(graph, {"a": 7, "b": 2}) == {
        "a": frozenset({2}),
        "b": frozenset({7}),
    }


@pytest.mark.parametrize(
    "keys",
    [
        {"a": 1},
        {"a": 1, "b": 1},
        {"a": 0, "b": 1},
        {"a": 1, "b": 2, "z": 3},
    ],
)
def test_derive_index_sets_rejects(keys):
    graph = MatchingGraph(["a", "b"], [("a", "b")])
    with pytest.raises(GraphError):
        derive_index_sets(graph, keys)

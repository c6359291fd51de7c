#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import logging
from typing import Dict, FrozenSet, Hashable, Iterable, Mapping, Optional, Tuple

import networkx as nx

from polytile.exceptions import GraphError

logger = logging.getLogger(__name__)


class MatchingGraph:
    """Which edge labels may abut: an undirected graph, self-loops allowed.

    Node order is insertion order and fixes the default key indices.
    """

    def __init__(
        self,
        nodes: Iterable[Hashable] = (),
        edges: Iterable[Tuple[Hashable, Hashable]] = (),
    ):
        self.graph = nx.Graph()
        for node in nodes:
            self.add_node(node)
        for a, b in edges:
            self.add_edge(a, b)

    def add_node(self, node: Hashable):
        if node in self.graph:
            raise GraphError(f"duplicate node {node!r}")
        self.graph.add_node(node)

    def add_edge(self, a: Hashable, b: Hashable):
        for node in (a, b):
            if node not in self.graph:
                raise GraphError(f"edge references unknown node {node!r}")
        self.graph.add_edge(a, b)

    @property
    def nodes(self):
        return list(self.graph.nodes)

    @property
    def edges(self):
        return list(self.graph.edges)

    def __len__(self):
        return self.graph.number_of_nodes()

    def __contains__(self, node):
        return node in self.graph

    def adjacent(self, a: Hashable, b: Hashable) -> bool:
        return self.graph.has_edge(a, b)

    def neighbours(self, node: Hashable):
        """Neighbours of ``node``, itself included when it carries a loop."""
        return list(self.graph.adj[node])

    def isolated(self):
        return [node for node in self.graph.nodes if self.graph.degree(node) == 0]

    def default_keys(self) -> Dict[Hashable, int]:
        return {node: i + 1 for i, node in enumerate(self.graph.nodes)}


def derive_index_sets(
    graph: MatchingGraph, key_assignment: Optional[Mapping[Hashable, int]] = None
) -> Dict[Hashable, FrozenSet[int]]:
    """Lock index set of every node: the keys of its neighbours.

    Nodes without neighbours get an empty set; a lock cannot be built from it.
    """
    keys = dict(key_assignment) if key_assignment is not None else graph.default_keys()

    missing = [node for node in graph.nodes if node not in keys]
    if missing:
        raise GraphError(f"no key index for nodes {missing}")
    unknown = [node for node in keys if node not in graph]
    if unknown:
        raise GraphError(f"key index for unknown nodes {unknown}")

    seen: Dict[int, Hashable] = {}
    for node, key in keys.items():
        if key < 1:
            raise GraphError(f"key index {key} of {node!r} must be positive")
        if key in seen:
            raise GraphError(f"nodes {seen[key]!r} and {node!r} share key index {key}")
        seen[key] = node

    sets = {
        node: frozenset(keys[other] for other in graph.neighbours(node))
        for node in graph.nodes
    }
    logger.debug(f"Index sets for {len(sets)} labels: {sets}")
    return sets

#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Key/lock labelling of a polyomino set under a matching graph.

Every unit edge of every piece is scaled to ``alpha`` cells and receives one
key (its own index) and one lock (the keys of its graph neighbours). Two
scaled edges can then only face each other when their labels are adjacent in
the graph, with teeth filling what a key leaves of the facing lock.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from polytile.constants import Directions, PieceNames
from polytile.engine.search import BUDGET, FOUND, NONE, SearchResult, enumerate_tilings
from polytile.engine.universe import (
    TORUS,
    PieceSet,
    Placement,
    PlacementUniverse,
    Region,
    Tiling,
)
from polytile.exceptions import GraphError, LabelSpecError
from polytile.geometry.polyomino import (
    Polyomino,
    polyomino_to_word,
    rotate_cell,
    rotate_vertex,
    rotated_origin,
    word_to_polyomino,
)
from polytile.geometry.words import concat, turn_word
from polytile.labeling.graph import MatchingGraph, derive_index_sets
from polytile.labeling.keylock import (
    KeySpec,
    LockSpec,
    check_scale,
    key_lock_match_rule,
    labeled_edge_word,
    make_tooth,
    pair_teeth,
    tooth_placement,
)

logger = logging.getLogger(__name__)

Vertex = Tuple[int, int]
UnitEdge = Tuple[Vertex, str]


def unit_edges(poly: Polyomino) -> List[UnitEdge]:
    """(start vertex, direction) of every boundary unit edge, clockwise.

    The walk starts at the top-left corner of the top row going right, the
    same start as ``polyomino_to_word``.
    """
    word = polyomino_to_word(poly)
    vertex = (poly.rows[-1][0][0], poly.height)
    edges = []
    for direction, count in word.steps:
        vx, vy = Directions.VECTORS[direction]
        for _ in range(count):
            edges.append((vertex, direction))
            vertex = (vertex[0] + vx, vertex[1] + vy)
    return edges


def default_edge_nodes(pieces: Mapping[str, Polyomino]) -> Dict[str, List[str]]:
    return {
        name: [f"{name}.{i}" for i in range(len(unit_edges(poly)))]
        for name, poly in pieces.items()
    }


@dataclass
class LabeledPieceSet:
    """Scaled, labelled pieces plus the tooth."""

    alpha: int
    length: int
    source: Dict[str, Polyomino]
    graph: MatchingGraph
    edge_nodes: Dict[str, List[Hashable]]
    keys: Dict[Hashable, KeySpec]
    locks: Dict[Hashable, LockSpec]
    pieces: Dict[str, Polyomino] = field(default_factory=dict)
    blank_index: Optional[int] = None
    # canonical corner of each labelled piece relative to its scaled source
    offsets: Dict[str, Vertex] = field(default_factory=dict)

    def piece_set(self) -> PieceSet:
        return PieceSet(self.pieces)

    @property
    def tooth(self) -> Polyomino:
        return self.pieces[PieceNames.TOOTH]

    def lift_placement(self, placement: Placement) -> Placement:
        """Position of the labelled piece standing for a source placement."""
        source = self.source[placement.piece]
        q = placement.orientation
        scaled_size = (source.width * self.alpha, source.height * self.alpha)
        labeled = self.pieces[placement.piece]
        labeled_corner = rotated_origin(self.offsets[placement.piece], labeled.bbox, q)
        scaled_corner = rotated_origin((0, 0), scaled_size, q)
        return Placement(
            placement.piece,
            q,
            placement.dx * self.alpha + labeled_corner[0] - scaled_corner[0],
            placement.dy * self.alpha + labeled_corner[1] - scaled_corner[1],
        )


def assign_keys(graph: MatchingGraph) -> Tuple[Dict[Hashable, int], Optional[int]]:
    """Keys 1..|nodes| in node order; one extra blank index when some node is isolated."""
    keys = graph.default_keys()
    blank = len(keys) + 1 if graph.isolated() else None
    return keys, blank


def kl_label(
    pieces: Mapping[str, Polyomino],
    graph: MatchingGraph,
    length: int,
    alpha: int,
    edge_nodes: Optional[Mapping[str, Sequence[Hashable]]] = None,
) -> LabeledPieceSet:
    """Scales ``pieces`` by ``alpha`` and installs a key and a lock on every unit edge.

    ``edge_nodes[name]`` names the graph node of each unit edge of the piece in
    ``unit_edges`` order; by default edge i of piece p is node ``"p.i"``.
    """
    if PieceNames.TOOTH in pieces:
        raise LabelSpecError(f"piece name {PieceNames.TOOTH!r} is reserved")
    check_scale(alpha, length)
    edge_nodes = dict(edge_nodes or default_edge_nodes(pieces))

    labelled_nodes = []
    for name, poly in pieces.items():
        edges = unit_edges(poly)
        nodes = list(edge_nodes.get(name, ()))
        if len(nodes) != len(edges):
            raise GraphError(
                f"piece {name!r} has {len(edges)} unit edges, {len(nodes)} nodes given"
            )
        labelled_nodes.extend(nodes)
    if sorted(map(str, labelled_nodes)) != sorted(map(str, graph.nodes)):
        raise GraphError("graph nodes must be exactly the unit edges of the pieces")

    keys, blank = assign_keys(graph)
    needed = len(keys) + (1 if blank else 0)
    if length < needed:
        raise LabelSpecError(f"length {length} cannot hold {needed} key indices")

    index_sets = derive_index_sets(graph, keys)
    key_specs = {node: KeySpec(length, k) for node, k in keys.items()}
    lock_specs = {
        node: LockSpec(length, index_sets[node] or {blank}) for node in graph.nodes
    }

    labeled = LabeledPieceSet(
        alpha=alpha,
        length=length,
        source=dict(pieces),
        graph=graph,
        edge_nodes={name: list(nodes) for name, nodes in edge_nodes.items()},
        keys=key_specs,
        locks=lock_specs,
        blank_index=blank,
    )
    for name, poly in pieces.items():
        edges = unit_edges(poly)
        words = [
            turn_word(
                labeled_edge_word(alpha, key_specs[node], lock_specs[node]),
                Directions.CCW.index(direction),
            )
            for (_, direction), node in zip(edges, labeled.edge_nodes[name])
        ]
        shape = word_to_polyomino(concat(words))
        start = edges[0][0]
        labeled.pieces[name] = Polyomino(shape.rows)
        labeled.offsets[name] = (
            start[0] * alpha + shape.origin[0],
            start[1] * alpha + shape.origin[1],
        )
        logger.info(
            f"Labelled piece {name}: {len(edges)} edges, area {poly.area * alpha * alpha}"
            f" scaled, {shape.area} labelled"
        )
    labeled.pieces[PieceNames.TOOTH] = make_tooth()
    return labeled


def placed_edges(
    pieces: Mapping[str, Polyomino],
    edge_nodes: Mapping[str, Sequence[Hashable]],
    placement: Placement,
) -> List[Tuple[Vertex, str, Hashable]]:
    """World unit edges of a placed source piece: (start vertex, direction, node)."""
    poly = pieces[placement.piece]
    q = placement.orientation
    corner = rotated_origin((0, 0), poly.bbox, q)
    placed = []
    for (vertex, direction), node in zip(unit_edges(poly), edge_nodes[placement.piece]):
        vx, vy = rotate_vertex(vertex, q)
        turned = Directions.CCW[(Directions.CCW.index(direction) + q) % 4]
        placed.append(
            ((vx - corner[0] + placement.dx, vy - corner[1] + placement.dy), turned, node)
        )
    return placed


def _segment_key(vertex: Vertex, direction: str, width: int, height: int):
    vx, vy = Directions.VECTORS[direction]
    end = (vertex[0] + vx, vertex[1] + vy)
    low = min(vertex, end)
    return (low[0] % width, low[1] % height, direction in ("r", "l"))


def abutting_pairs(
    pieces: Mapping[str, Polyomino],
    edge_nodes: Mapping[str, Sequence[Hashable]],
    tiling: Tiling,
) -> List[Tuple[Tuple[Vertex, str, Hashable], Tuple[Vertex, str, Hashable]]]:
    """Pairs of placed unit edges lying on the same torus segment."""
    region = tiling.region
    by_segment: Dict[tuple, list] = {}
    for placement in tiling.placements:
        for edge in placed_edges(pieces, edge_nodes, placement):
            key = _segment_key(edge[0], edge[1], region.width, region.height)
            by_segment.setdefault(key, []).append(edge)
    pairs = []
    for key, edges in sorted(by_segment.items()):
        if len(edges) != 2:
            raise GraphError(f"segment {key} is bordered by {len(edges)} edges")
        pairs.append((edges[0], edges[1]))
    return pairs


def respects_graph(
    pieces: Mapping[str, Polyomino],
    graph: MatchingGraph,
    edge_nodes: Mapping[str, Sequence[Hashable]],
    tiling: Tiling,
) -> bool:
    return all(
        graph.adjacent(a[2], b[2]) for a, b in abutting_pairs(pieces, edge_nodes, tiling)
    )


def pg_enumerate(
    pieces: Mapping[str, Polyomino],
    graph: MatchingGraph,
    width: int,
    height: int,
    cap: int = 1000,
    edge_nodes: Optional[Mapping[str, Sequence[Hashable]]] = None,
    limit: int = 2_000_000,
) -> SearchResult:
    """Torus tilings by the source pieces whose abutting edge pairs are all graph-adjacent.

    All four orientations count as different placements: a turn moves the
    labels even when it leaves the shape unchanged.
    """
    edge_nodes = edge_nodes or default_edge_nodes(pieces)
    universe = PlacementUniverse(
        Region(TORUS, width, height),
        pieces,
        orientations={name: (0, 1, 2, 3) for name in pieces},
    )
    result = enumerate_tilings(universe, cap=cap, limit=limit)
    kept = [t for t in result.tilings if respects_graph(pieces, graph, edge_nodes, t)]
    logger.info(
        f"{width}x{height} torus: {len(kept)} of {len(result.tilings)} tilings respect the graph"
    )
    if kept:
        status = FOUND
    else:
        status = BUDGET if result.exhausted else NONE
    return SearchResult(status, kept, result.nodes, result.cap_exceeded, result.exhausted)


def edge_teeth(
    labeled: LabeledPieceSet, lock_edge, key_edge
) -> List[Placement]:
    """Teeth left in the lock of ``lock_edge`` by the key of ``key_edge``, in the scaled world."""
    vertex, direction, lock_node = lock_edge
    key_node = key_edge[2]
    q = Directions.CCW.index(direction)
    placements = []
    for centre in pair_teeth(labeled.alpha, labeled.locks[lock_node], labeled.keys[key_node]):
        cx, cy = rotate_cell(centre, q)
        placements.append(
            tooth_placement(cx + vertex[0] * labeled.alpha, cy + vertex[1] * labeled.alpha)
        )
    return placements


def lift_tiling(labeled: LabeledPieceSet, pg_tiling: Tiling) -> Tiling:
    """Labelled tiling of the scaled torus standing for a graph-respecting tiling, teeth included."""
    region = pg_tiling.region
    if not region.is_torus:
        raise GraphError("lifting needs a torus tiling")

    placements = [labeled.lift_placement(p) for p in pg_tiling.placements]
    for a, b in abutting_pairs(labeled.source, labeled.edge_nodes, pg_tiling):
        for lock_edge, key_edge in ((a, b), (b, a)):
            if not key_lock_match_rule(labeled.keys[key_edge[2]], labeled.locks[lock_edge[2]]):
                raise GraphError(f"labels {a[2]!r} and {b[2]!r} may not abut")
            placements.extend(edge_teeth(labeled, lock_edge, key_edge))

    lifted = Tiling(
        Region(TORUS, region.width * labeled.alpha, region.height * labeled.alpha),
        placements,
        {"alpha": str(labeled.alpha)},
    )
    logger.info(
        f"Lifted {len(pg_tiling.placements)} placements to {len(placements)} "
        f"on a {lifted.region.width}x{lifted.region.height} torus"
    )
    return lifted

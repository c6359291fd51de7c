#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Line-oriented text formats.

    .wang    wang <n> <m>
             tile <id> N=<c> E=<c> S=<c> W=<c>        (n lines)
    .poly    poly <name>
             word <tokens>
    .graph   node <name> ...
             edge <a> <b> ...
    .tiling  region torus|rect <W> <H>
             meta <key> <value>                        (optional)
             place <piece> <orientation> <dx> <dy>
    .assign  torus <w> <h>
             <tile id> ... (w per line, h lines; the first line is row 0, the southern row)
    .words   label <name> <tokens>                   (one edge label word)

Blank lines and everything after ``#`` are ignored. Parse errors carry the
line number.
"""
import logging
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, TypeVar

from polytile.encoder.tiles import WangTile, WangTileSet
from polytile.engine.universe import Placement, Region, Tiling
from polytile.engine.wang import WangAssignment
from polytile.exceptions import FormatError, PolytileError
from polytile.geometry.polyomino import Polyomino, polyomino_to_word, word_to_polyomino
from polytile.geometry.words import emit_word, parse_word
from polytile.labeling.graph import MatchingGraph

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _int(token: str, what: str, path, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what} {token!r} is not an integer", path, line)


def _arity(tokens: List[str], count: int, path, line: int):
    if len(tokens) != count:
        raise FormatError(
            f"'{tokens[0]}' takes {count - 1} fields, got {len(tokens) - 1}", path, line
        )


def load(path: str, parser: Callable[..., T], *args) -> T:
    """Reads ``path`` and parses it; unreadable files raise FormatError too."""
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise FormatError(f"cannot read: {e.strerror}", path)
    return parser(text, *args, path=path)


def save(path: str, text: str):
    with open(path, "w") as f:
        f.write(text)
    logger.debug(f"Wrote {path}")


def parse_wang(text: str, path: Optional[str] = None) -> WangTileSet:
    header = None
    tiles = []
    for line, tokens in _lines(text):
        if header is None:
            if tokens[0] != "wang":
                raise FormatError("expected 'wang <n> <m>' header", path, line)
            _arity(tokens, 3, path, line)
            header = (
                _int(tokens[1], "tile count", path, line),
                _int(tokens[2], "colour count", path, line),
            )
            continue
        if tokens[0] != "tile":
            raise FormatError(f"unexpected {tokens[0]!r}", path, line)
        _arity(tokens, 6, path, line)
        sides = {}
        for field_text in tokens[2:]:
            key, _, value = field_text.partition("=")
            if key not in ("N", "E", "S", "W") or key in sides:
                raise FormatError(f"bad side field {field_text!r}", path, line)
            sides[key] = _int(value, f"{key} colour", path, line)
        tiles.append(WangTile(tokens[1], sides["N"], sides["E"], sides["S"], sides["W"]))

    if header is None:
        raise FormatError("missing 'wang' header", path)
    if len(tiles) != header[0]:
        raise FormatError(f"header announces {header[0]} tiles, found {len(tiles)}", path)
    try:
        return WangTileSet(header[1], tuple(tiles))
    except PolytileError as e:
        raise FormatError(str(e), path)


def emit_wang(tiles: WangTileSet) -> str:
    lines = [f"wang {tiles.n} {tiles.m}"]
    for tile in tiles.tiles:
        lines.append(f"tile {tile.name} N={tile.north} E={tile.east} S={tile.south} W={tile.west}")
    return "\n".join(lines) + "\n"


def parse_poly(text: str, path: Optional[str] = None) -> Dict[str, Polyomino]:
    pieces: Dict[str, Polyomino] = {}
    name = None
    for line, tokens in _lines(text):
        if tokens[0] == "poly":
            _arity(tokens, 2, path, line)
            if name is not None:
                raise FormatError(f"piece {name!r} has no word", path, line)
            name = tokens[1]
            if name in pieces:
                raise FormatError(f"duplicate piece {name!r}", path, line)
        elif tokens[0] == "word":
            if name is None:
                raise FormatError("'word' before any 'poly'", path, line)
            try:
                pieces[name] = word_to_polyomino(parse_word(" ".join(tokens[1:])))
            except PolytileError as e:
                raise FormatError(f"piece {name!r}: {e}", path, line)
            name = None
        else:
            raise FormatError(f"unexpected {tokens[0]!r}", path, line)
    if name is not None:
        raise FormatError(f"piece {name!r} has no word", path)
    return pieces


def emit_poly(pieces: Mapping[str, Polyomino]) -> str:
    lines = []
    for name, poly in pieces.items():
        lines.append(f"poly {name}")
        lines.append(f"word {emit_word(polyomino_to_word(poly))}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str, path: Optional[str] = None) -> MatchingGraph:
    graph = MatchingGraph()
    for line, tokens in _lines(text):
        try:
            if tokens[0] == "node":
                _arity(tokens, 2, path, line)
                graph.add_node(tokens[1])
            elif tokens[0] == "edge":
                _arity(tokens, 3, path, line)
                graph.add_edge(tokens[1], tokens[2])
            else:
                raise FormatError(f"unexpected {tokens[0]!r}", path, line)
        except FormatError:
            raise
        except PolytileError as e:
            raise FormatError(str(e), path, line)
    return graph


def emit_graph(graph: MatchingGraph) -> str:
    lines = [f"node {node}" for node in graph.nodes]
    lines += [f"edge {a} {b}" for a, b in graph.edges]
    return "\n".join(lines) + "\n"


def parse_tiling(text: str, path: Optional[str] = None) -> Tiling:
    region = None
    placements = []
    metadata = {}
    for line, tokens in _lines(text):
        if tokens[0] == "region":
            _arity(tokens, 4, path, line)
            if region is not None:
                raise FormatError("second 'region' line", path, line)
            try:
                region = Region(
                    tokens[1],
                    _int(tokens[2], "width", path, line),
                    _int(tokens[3], "height", path, line),
                )
            except FormatError:
                raise
            except PolytileError as e:
                raise FormatError(str(e), path, line)
        elif tokens[0] == "meta":
            if len(tokens) < 2:
                raise FormatError("'meta' needs a key", path, line)
            metadata[tokens[1]] = " ".join(tokens[2:])
        elif tokens[0] == "place":
            if region is None:
                raise FormatError("'place' before 'region'", path, line)
            _arity(tokens, 5, path, line)
            orientation = _int(tokens[2], "orientation", path, line)
            if orientation not in (0, 1, 2, 3):
                raise FormatError(f"orientation {orientation} not in 0..3", path, line)
            placements.append(
                Placement(
                    tokens[1],
                    orientation,
                    _int(tokens[3], "dx", path, line),
                    _int(tokens[4], "dy", path, line),
                )
            )
        else:
            raise FormatError(f"unexpected {tokens[0]!r}", path, line)
    if region is None:
        raise FormatError("missing 'region' line", path)
    return Tiling(region, placements, metadata)


def emit_tiling(tiling: Tiling) -> str:
    region = tiling.region
    lines = [f"region {region.kind} {region.width} {region.height}"]
    lines += [f"meta {key} {value}" for key, value in tiling.metadata.items()]
    lines += [f"place {p.piece} {p.orientation} {p.dx} {p.dy}" for p in tiling.placements]
    return "\n".join(lines) + "\n"


def parse_assignment(
    text: str, tiles: WangTileSet, path: Optional[str] = None
) -> WangAssignment:
    size = None
    rows = []
    for line, tokens in _lines(text):
        if size is None:
            if tokens[0] != "torus":
                raise FormatError("expected 'torus <w> <h>' header", path, line)
            _arity(tokens, 3, path, line)
            size = (_int(tokens[1], "width", path, line), _int(tokens[2], "height", path, line))
            continue
        if len(tokens) != size[0]:
            raise FormatError(f"row of {len(tokens)} tiles, expected {size[0]}", path, line)
        try:
            rows.append(tuple(tiles.index_of(name) for name in tokens))
        except PolytileError as e:
            raise FormatError(str(e), path, line)
    if size is None:
        raise FormatError("missing 'torus' header", path)
    if len(rows) != size[1]:
        raise FormatError(f"{len(rows)} rows, expected {size[1]}", path)
    try:
        return WangAssignment(size[0], size[1], tuple(rows))
    except PolytileError as e:
        raise FormatError(str(e), path)


def emit_assignment(assignment: WangAssignment, tiles: WangTileSet) -> str:
    lines = [f"torus {assignment.width} {assignment.height}"]
    for row in assignment.grid:
        lines.append(" ".join(tiles.tile(index).name for index in row))
    return "\n".join(lines) + "\n"


def parse_label_words(text: str, path: Optional[str] = None) -> Dict[str, str]:
    """Label name to word text; the words are only checked by the catalog audit."""
    words: Dict[str, str] = {}
    for line, tokens in _lines(text):
        if tokens[0] != "label" or len(tokens) < 3:
            raise FormatError("expected 'label <name> <tokens>'", path, line)
        if tokens[1] in words:
            raise FormatError(f"duplicate label {tokens[1]!r}", path, line)
        words[tokens[1]] = " ".join(tokens[2:])
    return words

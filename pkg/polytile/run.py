#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Command line: ``polytile <command> ...``.

Every command prints a short text report, or the same report as JSON with
``--json``, and exits 0 on success, 1 on bad input, 2 on a semantic failure
(defects, no tiling, catalog mismatch) and 3 when a search budget ran out.
"""
import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from polytile.config import Config
from polytile.constants import ExitCodes, Labels
from polytile.encoder.catalog import (
    audit_catalog,
    build_catalog,
    corrected_words,
    label_tile,
)
from polytile.encoder.pieces import ROTATION, TRANSLATION, encode
from polytile.engine.refutation import (
    REFUTED,
    rods_and_teeth_refutation,
    teeth_only_refutation,
)
from polytile.engine.search import BUDGET, FOUND, NONE, enumerate_tilings, solve
from polytile.engine.universe import RECT, TORUS, PlacementUniverse, Region
from polytile.engine.validator import validate
from polytile.engine.wang import wang_solve_torus
from polytile.exceptions import BudgetExhausted, FormatError, PolytileError, StructureError
from polytile.geometry.words import word_displacement
from polytile.labeling.labeler import kl_label
from polytile.log import setup_logging
from polytile.structure.builder import build_structure
from polytile.utils import formats
from polytile.utils.basics import get_config
from polytile.utils.render import COLOR_BY, RenderSpec, render_pieces, render_tiling

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    status: int
    report: Dict = field(default_factory=dict)
    lines: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == ExitCodes.SUCCESS


def _size(text: str) -> Tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        size = int(w), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH, got {text!r}")
    if size[0] < 1 or size[1] < 1:
        raise argparse.ArgumentTypeError(f"empty size {text!r}")
    return size


def _viewport(text: str) -> Tuple[int, int, int, int]:
    try:
        x0, y0, x1, y1 = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x0,y0,x1,y1, got {text!r}")
    return x0, y0, x1, y1


def cmd_labels(args, config: Config) -> CommandResult:
    words = corrected_words()
    if args.words:
        words = formats.load(args.words, formats.parse_label_words)
    problems = audit_catalog(words)
    report = {"labels": {}, "problems": problems}
    result = CommandResult(ExitCodes.SUCCESS, report)
    if problems:
        result.status = ExitCodes.FAILURE
        result.lines = [f"catalog: {len(problems)} problems"] + problems
        return result

    catalog = build_catalog(words)
    for name in Labels.ORDER:
        spec = catalog[name]
        report["labels"][name] = {
            "key": spec.key_index,
            "locks": spec.lock_names,
            "displacement": list(word_displacement(spec.word)),
        }
        locks = " ".join(spec.lock_names)
        result.lines.append(f"{name:>5}  key {spec.key_index:>2}  locks {locks}")
    if args.out:
        formats.save(args.out, formats.emit_poly({name: label_tile(name) for name in Labels.ORDER}))
    result.lines.append(f"catalog: {len(catalog)} labels, all checks pass")
    return result


def cmd_encode(args, config: Config) -> CommandResult:
    tiles = formats.load(args.wang, formats.parse_wang)
    encoded = encode(tiles, args.mode)
    summary = encoded.summary()
    if args.out:
        formats.save(args.out, formats.emit_poly(encoded.pieces))
    lines = [
        f"{name}: area {s['area']}, {s['width']}x{s['height']}" for name, s in summary.items()
    ]
    return CommandResult(
        ExitCodes.SUCCESS, {"mode": args.mode, "pieces": summary}, lines
    )


def cmd_wang_solve(args, config: Config) -> CommandResult:
    tiles = formats.load(args.wang, formats.parse_wang)
    width, height = args.torus
    assignment = wang_solve_torus(tiles, width, height, limit=args.limit or config.node_limit)
    if assignment is None:
        return CommandResult(
            ExitCodes.FAILURE, {"status": NONE}, [f"no tiling of the {width}x{height} torus"]
        )
    text = formats.emit_assignment(assignment, tiles)
    if args.out:
        formats.save(args.out, text)
    return CommandResult(
        ExitCodes.SUCCESS,
        {"status": FOUND, "grid": [list(row) for row in assignment.grid]},
        text.splitlines(),
    )


def cmd_build(args, config: Config) -> CommandResult:
    tiles = formats.load(args.wang, formats.parse_wang)
    assignment = formats.load(args.assignment, formats.parse_assignment, tiles)
    try:
        build = build_structure(tiles, assignment, args.mode, report_limit=config.report_limit)
    except StructureError as e:
        report = e.report.as_dict() if hasattr(e.report, "as_dict") else {}
        return CommandResult(ExitCodes.FAILURE, {"error": str(e), "defects": report}, [str(e)])
    if args.out:
        formats.save(args.out, formats.emit_tiling(build.tiling))
    if args.pieces:
        formats.save(args.pieces, formats.emit_poly(build.encoded.pieces))
    used = {name: sorted(qs) for name, qs in build.census().items()}
    region = build.tiling.region
    return CommandResult(
        ExitCodes.SUCCESS,
        {
            "region": [region.kind, region.width, region.height],
            "pieces": build.piece_count,
            "teeth": build.tooth_count,
            "census": used,
            "audit": build.audit.as_dict(),
            "validation": build.report.as_dict() if build.report else None,
        },
        [
            f"{build.piece_count} rods and blades, {build.tooth_count} teeth "
            f"on a {region.width}x{region.height} torus",
            f"census: {used}",
            build.report.summary() if build.report else "not validated",
        ],
    )


def cmd_verify(args, config: Config) -> CommandResult:
    pieces = formats.load(args.pieces, formats.parse_poly)
    tiling = formats.load(args.tiling, formats.parse_tiling)
    report = validate(tiling.region, pieces, tiling.placements, config.report_limit)
    lines = [report.summary()]
    lines += [f"overlap at {x} {y}" for x, y in report.overlaps]
    lines += [f"hole at {x} {y}" for x, y in report.holes]
    lines += [f"outside at {x} {y}" for x, y in report.outside]
    status = ExitCodes.SUCCESS if report.valid else ExitCodes.FAILURE
    return CommandResult(status, report.as_dict(), lines)


def cmd_solve(args, config: Config) -> CommandResult:
    pieces = formats.load(args.pieces, formats.parse_poly)
    if (args.torus is None) == (args.rect is None):
        raise FormatError("give exactly one of --torus and --rect")
    kind, size = (TORUS, args.torus) if args.torus else (RECT, args.rect)
    universe = PlacementUniverse(
        Region(kind, *size), pieces, translation_only=args.translation_only
    )
    limit = args.limit or config.node_limit
    threads = args.threads or config.threads
    if args.all:
        cap = args.cap or config.enumerate_cap
        result = enumerate_tilings(universe, cap=cap, limit=limit, threads=threads)
    else:
        result = solve(universe, limit=limit, threads=threads)
    report = {"status": result.status, "nodes": result.nodes, "placements": len(universe)}
    if args.all:
        report.update(
            {"count": result.count, "cap_exceeded": result.cap_exceeded, "exhausted": result.exhausted}
        )
    if result.status == FOUND:
        if args.out:
            formats.save(args.out, formats.emit_tiling(result.tiling))
        lines = [f"tiling of {len(result.tiling.placements)} pieces"]
        if args.all:
            more = " (cap reached)" if result.cap_exceeded else ""
            lines.append(f"{result.count} tilings{more}")
        return CommandResult(ExitCodes.SUCCESS, report, lines)
    status = ExitCodes.BUDGET if result.status == BUDGET else ExitCodes.FAILURE
    return CommandResult(status, report, [f"{result.status} after {result.nodes} nodes"])


def cmd_render(args, config: Config) -> CommandResult:
    pieces = formats.load(args.pieces, formats.parse_poly)
    spec = RenderSpec(
        cell_pixels=args.cell_pixels or config.cell_pixels,
        color_by=args.color_by,
        viewport=args.viewport,
    )
    if args.tiling:
        tiling = formats.load(args.tiling, formats.parse_tiling)
        drawing = render_tiling(tiling, pieces, spec)
    else:
        drawing = render_pieces(pieces, spec)
    drawing.saveas(args.svg)
    return CommandResult(ExitCodes.SUCCESS, {"svg": args.svg}, [f"wrote {args.svg}"])


def cmd_kl(args, config: Config) -> CommandResult:
    pieces = formats.load(args.pieces, formats.parse_poly)
    graph = formats.load(args.graph, formats.parse_graph)
    alpha = args.scale or config.label_scale
    labeled = kl_label(pieces, graph, args.length, alpha)
    if args.out:
        formats.save(args.out, formats.emit_poly(labeled.pieces))
    summary = {name: poly.area for name, poly in labeled.pieces.items()}
    return CommandResult(
        ExitCodes.SUCCESS,
        {"scale": alpha, "length": args.length, "blank": labeled.blank_index, "areas": summary},
        [f"{name}: area {area}" for name, area in summary.items()],
    )


def cmd_refute(args, config: Config) -> CommandResult:
    if args.subset == "teeth":
        radius = args.radius or config.teeth_radius
        outcome = teeth_only_refutation(radius, limit=args.limit or 100_000)
        report = {
            "status": outcome.status,
            "nodes": outcome.nodes,
            "case_split": [list(c) for c in outcome.case_split],
            "tree_size": outcome.tree.size(),
        }
    else:
        if not args.wang:
            raise FormatError("the rods refutation needs --wang")
        tiles = formats.load(args.wang, formats.parse_wang)
        outcome = rods_and_teeth_refutation(tiles, args.window, limit=args.limit or 20_000)
        report = {
            "status": outcome.status,
            "nodes": outcome.nodes,
            "log": [
                {
                    "kind": e.kind,
                    "depth": e.depth,
                    "label": e.label,
                    "at": list(e.at),
                    "reason": e.reason,
                }
                for e in outcome.log
            ],
        }
    if outcome.status == REFUTED:
        status = ExitCodes.SUCCESS
    elif outcome.status == BUDGET:
        status = ExitCodes.BUDGET
    else:
        status = ExitCodes.FAILURE
    line = f"{args.subset}: {outcome.status} after {outcome.nodes} nodes"
    return CommandResult(status, report, [line])


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ExitCodes.USAGE, f"{self.prog}: error: {message}\n")


def get_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="polytile", description="Encode Wang tile sets as polyominoes and check tilings"
    )
    parser.add_argument("--json", action="store_true", help="print the report as JSON")
    parser.add_argument("--config", default=None, help="config file (POLYTILE_CONFIG_FILE)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("labels", help="audit the label catalog")
    p.add_argument("--words", help="label words to audit instead of the built-in table")
    p.add_argument("--out", help="write the labels as .poly slabs")
    p.set_defaults(func=cmd_labels)

    p = sub.add_parser("encode", help="tooth, rod and blade of a .wang tile set")
    p.add_argument("wang")
    p.add_argument("--mode", choices=(ROTATION, TRANSLATION), default=ROTATION)
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("wang-solve", help="tile a torus with Wang tiles")
    p.add_argument("wang")
    p.add_argument("--torus", type=_size, required=True, metavar="WxH")
    p.add_argument("--limit", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_wang_solve)

    p = sub.add_parser("build", help="placement list standing for a Wang torus tiling")
    p.add_argument("wang")
    p.add_argument("assignment")
    p.add_argument("--mode", choices=(ROTATION, TRANSLATION), default=ROTATION)
    p.add_argument("--out")
    p.add_argument("--pieces", help="also write the pieces as .poly")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check that a tiling covers its region exactly once")
    p.add_argument("pieces")
    p.add_argument("tiling")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact-cover search for a tiling")
    p.add_argument("pieces")
    p.add_argument("--torus", type=_size, metavar="WxH")
    p.add_argument("--rect", type=_size, metavar="WxH")
    p.add_argument("--translation-only", action="store_true")
    p.add_argument("--all", action="store_true", help="enumerate tilings up to --cap")
    p.add_argument("--cap", type=int, help="enumeration cap (config enumerate_cap)")
    p.add_argument("--limit", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("render", help="draw pieces or a tiling as SVG")
    p.add_argument("pieces")
    p.add_argument("tiling", nargs="?")
    p.add_argument("--svg", required=True)
    p.add_argument("--color-by", choices=("piece", "orientation"), default=COLOR_BY[0])
    p.add_argument("--cell-pixels", type=int)
    p.add_argument("--viewport", type=_viewport, metavar="x0,y0,x1,y1")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("kl", help="KL-label pieces for a matching graph")
    p.add_argument("pieces")
    p.add_argument("graph")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--scale", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("refute", help="bounded search showing a piece subset cannot tile")
    p.add_argument("subset", choices=("teeth", "rods"))
    p.add_argument("--radius", type=int)
    p.add_argument("--window", type=int, default=12)
    p.add_argument("--wang", help=".wang file whose rod is used")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_refute)
    return parser


def run_command(func: Callable, args, config: Config) -> CommandResult:
    started = time.perf_counter()
    try:
        result = func(args, config)
    except FormatError as e:
        logger.error(f"{args.command}: {e}")
        result = CommandResult(ExitCodes.USAGE, {"error": str(e)}, [str(e)])
    except BudgetExhausted as e:
        logger.warning(f"{args.command}: {e}")
        result = CommandResult(ExitCodes.BUDGET, {"error": str(e)}, [str(e)])
    except PolytileError as e:
        logger.error(f"{args.command}: {e}")
        result = CommandResult(ExitCodes.FAILURE, {"error": str(e)}, [str(e)])
    result.report["seconds"] = round(time.perf_counter() - started, 3)
    return result


def main(argv: Optional[List[str]] = None) -> int:
    parser = get_parser()
    args = parser.parse_args(argv)
    setup_logging()
    config = get_config(args.config)
    result = run_command(args.func, args, config)
    if args.json:
        print(json.dumps(result.report, sort_keys=True))
    else:
        for line in result.lines:
            print(line)
    return result.status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit status: 0 on success, 1 when the input is well formed but fails the
check (not suitably connected, knot not realizable, a bound violated), 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from pathlib import Path

from knotile.enumerate import SearchConstraints, census, generate
from knotile.enumerate.layouts import (
    LayoutFormatError,
    bundled_layouts,
    conjecture_report,
    layout_profiles,
    load_layout,
)
from knotile.enumerate.search import (
    classify,
    layout_minima,
    min_tile_number,
    verify_bounds,
)
from knotile.invariants import (
    CrossingLimitError,
    TableValidationError,
    bracket,
    default_table,
    format_identification,
    identify,
    jones,
    load_knot_table,
)
from knotile.render import render_ascii, render_svg
from knotile.tiles import (
    KnotMosaic,
    Mosaic,
    MosaicFormatError,
    NotSuitablyConnected,
    is_suitably_connected,
    tile_number_of_mosaic,
)
from knotile.trace import is_reduced, trace, writhe

log = logging.getLogger("knotile")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def format_record(fields: dict) -> str:
    """``key=value`` pairs on one line; values never contain spaces."""
    return " ".join(f"{k}={str(v).replace(' ', '')}" for k, v in fields.items())


def parse_record(line: str) -> dict[str, str]:
    out = {}
    for part in line.split():
        k, _, v = part.partition("=")
        out[k] = v
    return out


def _read_mosaic(path: str) -> Mosaic:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return Mosaic.parse(text)


def _table(args):
    return load_knot_table(args.table) if getattr(args, "table", None) else default_table()


def mosaic_info(m: KnotMosaic, table) -> dict:
    t = trace(m)
    d = t.diagram
    b = bracket(d)
    fields = {
        "mosaic": m.to_line(),
        "size": m.size,
        "tiles": tile_number_of_mosaic(m),
        "components": t.component_count,
        "crossings": t.crossing_count,
        "reduced": str(is_reduced(d)).lower(),
        "writhe": writhe(d),
        "bracket": b.format("A"),
    }
    fields["jones"] = jones(d).format("A")
    fields["identification"] = format_identification(identify(d, table))
    return fields


def cmd_validate(args) -> int:
    m = _read_mosaic(args.file)
    if not is_suitably_connected(m):
        print(format_record({"valid": "false", "size": m.size}))
        return EXIT_FAIL
    print(format_record({"valid": "true", "size": m.size, "tiles": tile_number_of_mosaic(m)}))
    return EXIT_OK


def cmd_info(args) -> int:
    m = _read_mosaic(args.file)
    try:
        km = KnotMosaic.of(m)
    except NotSuitablyConnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(format_record(mosaic_info(km, _table(args))))
    return EXIT_OK


def cmd_render(args) -> int:
    m = _read_mosaic(args.file)
    text = render_svg(m) if args.format == "svg" else render_ascii(m)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _constraints(args, size: int | None = None, **extra) -> SearchConstraints:
    return SearchConstraints(
        size if size is not None else args.size,
        max_tiles=args.max_tiles,
        min_tiles=args.min_tiles,
        single_component=args.knots_only,
        forbid_split_trivial=args.no_split,
        require_reduced=args.reduced,
        min_crossings=args.min_crossings,
        canonical=args.canonical,
        **extra,
    )


def _emit_stream(args, c: SearchConstraints) -> int:
    shown = 0
    if args.identify:
        for x in classify(c, _table(args)):
            print(format_record({
                "mosaic": x.mosaic.to_line(), "tiles": x.tile_number, "components": x.components,
                "crossings": x.crossings, "identification": format_identification(x.identification),
            }))
            shown += 1
            if args.limit and shown >= args.limit:
                break
    else:
        for m in generate(c):
            print(m.to_line())
            shown += 1
            if args.limit and shown >= args.limit:
                break
    return EXIT_OK


def cmd_enumerate(args) -> int:
    return _emit_stream(args, _constraints(args))


def cmd_census(args) -> int:
    sizes = range(1, args.size + 1) if args.upto else [args.size]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["size", "count"])
    for n in sizes:
        w.writerow([n, census(n)])
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def _layouts_arg(specs):
    try:
        return [load_layout(s) for s in specs]
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from None


def cmd_search(args) -> int:
    table = _table(args)
    layouts = _layouts_arg(args.layout) if args.layout else None
    if args.size > 5 and not layouts:
        layouts = [L for L in bundled_layouts().values() if L.size == args.size]
    try:
        r = min_tile_number(args.knot, args.size, table, layouts)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if not r.realizable:
        print(format_record({"knot": args.knot, "size": args.size, "tile_number": "not-realizable"}))
        return EXIT_FAIL
    print(format_record({
        "knot": args.knot, "size": args.size, "tile_number": r.tile_number,
        "witness": r.witness.to_line(),
    }))
    return EXIT_OK


def cmd_fill_layout(args) -> int:
    layouts = _layouts_arg(args.layout)
    if args.summary:
        hits = layout_minima(layouts, _table(args), components=args.components,
                             min_crossings=args.min_crossings)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "tile_number", "fills", "crossings", "witness"])
        for name, h in hits.items():
            xs = ";".join(map(str, sorted(h.crossing_counts)))
            w.writerow([name, h.tile_number, h.fills, xs, h.witness.to_line() if h.witness else ""])
        sys.stdout.write(buf.getvalue())
        return EXIT_OK
    for layout in layouts:
        rc = _emit_stream(args, _constraints(args, layout.size, allowed=layout.allowed))
        if rc:
            return rc
    return EXIT_OK


def cmd_layouts(args) -> int:
    if args.profiles:
        n = args.profiles
        report = layout_profiles(n)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["size", "tile_number", "patterns"])
        for t, grids in report.patterns.items():
            w.writerow([n, t, len(grids)])
        sys.stdout.write(buf.getvalue())
        if n == 7:
            print("# " + conjecture_report(7).summary())
        return EXIT_OK
    for name, L in bundled_layouts().items():
        if args.size and L.size != args.size:
            continue
        if args.show:
            print(L.to_text())
        else:
            print(format_record({"name": name, "size": L.size, "tiles": L.tile_count,
                                 "open_slots": L.four_point_count}))
    return EXIT_OK


def _read_triples(args) -> list[tuple[str, int, int]]:
    rows = []
    text = ""
    if args.file:
        text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    for spec in args.triple or ():
        text += "\n" + spec
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line or line.lower().startswith("knot"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise UsageError(f"expected knot,m,t in {raw!r}")
        try:
            rows.append((parts[0], int(parts[1]), int(parts[2])))
        except ValueError:
            raise UsageError(f"non-integer value in {raw!r}") from None
    if not rows:
        raise UsageError("no (knot, m, t) rows given")
    return rows


def cmd_verify_bounds(args) -> int:
    try:
        report = verify_bounds(_read_triples(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(report.to_csv())
    return EXIT_OK if report.passed else EXIT_FAIL


def _add_filters(p) -> None:
    p.add_argument("--max-tiles", type=int, default=None)
    p.add_argument("--min-tiles", type=int, default=0)
    p.add_argument("--min-crossings", type=int, default=0)
    p.add_argument("--knots-only", action="store_true", help="single-component mosaics only")
    p.add_argument("--no-split", action="store_true", help="drop mosaics with crossing-free components")
    p.add_argument("--reduced", action="store_true", help="drop mosaics with nugatory crossings")
    p.add_argument("--canonical", action="store_true", help="one mosaic per symmetry class")
    p.add_argument("--identify", action="store_true", help="emit key=value records with identification")
    p.add_argument("--limit", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotile", description="Knot mosaic toolkit.")
    ap.add_argument("--table", help="knot table file (default: $KNOTILE_TABLE or the bundled table)")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that a mosaic is suitably connected")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="invariants and identification of a mosaic")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("render", help="draw a mosaic")
    p.add_argument("file")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="stream the mosaics of a board size")
    p.add_argument("--size", type=int, required=True)
    _add_filters(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", help="count suitably connected mosaics (CSV)")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--upto", action="store_true", help="every size from 1 up to --size")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("search", help="least tile number of a knot on a board size")
    p.add_argument("--knot", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--layout", action="append", help="bundled layout name or file (repeatable)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fill-layout", help="mosaics allowed by a layout")
    p.add_argument("--layout", action="append", required=True)
    p.add_argument("--summary", action="store_true", help="CSV of least tile number per identified knot")
    p.add_argument("--components", type=int, default=1, help="component count for --summary")
    _add_filters(p)
    p.set_defaults(func=cmd_fill_layout)

    p = sub.add_parser("layouts", help="list bundled layouts or occupancy profiles")
    p.add_argument("--size", type=int)
    p.add_argument("--show", action="store_true")
    p.add_argument("--profiles", type=int, metavar="N", help="tile numbers allowed by the profile rules")
    p.set_defaults(func=cmd_layouts)

    p = sub.add_parser("verify-bounds", help="check tile numbers against the mosaic-number bounds")
    p.add_argument("file", nargs="?", help="CSV rows knot,m,t ('-' for stdin)")
    p.add_argument("--triple", action="append", help="one knot,m,t row (repeatable)")
    p.set_defaults(func=cmd_verify_bounds)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, MosaicFormatError, LayoutFormatError, TableValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # constraint validation (board size, bounds) is a usage problem
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrossingLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""Regenerate the bundled example mosaics under src/knotile/data/mosaics.

Every fixture is found by search, so the files can be rebuilt from scratch:

    python scripts/build_fixtures.py            # everything (a few minutes)
    python scripts/build_fixtures.py --skip-six # leave the 6-board files alone

Each file carries ``# knot:`` and ``# tiles:`` header lines that the fixture
tests compare against ``info``.
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from knotile.enumerate import SearchConstraints
from knotile.enumerate.layouts import layouts_for
from knotile.enumerate.search import classify, layout_minima, min_tile_number
from knotile.moves import MoveKind, applicable_moves, apply_move
from knotile.tiles import KnotMosaic, Mosaic, canonical_form, tile_number_of_mosaic

OUT = Path(__file__).resolve().parents[1] / "src" / "knotile" / "data" / "mosaics"
log = logging.getLogger("fixtures")

FIVE_BOARD = ("4_1", "5_1", "5_2", "6_1", "6_2", "7_4")
SIX_BOARD = (
    "6_3", "7_1", "7_2", "7_3", "7_5", "7_6", "7_7",
    "8_1", "8_2", "8_3", "8_4", "8_7", "8_8", "8_9", "8_13", "9_5", "9_20",
)


def write(name: str, m: Mosaic, knot: str, note: str = "") -> None:
    lines = [f"# knot: {knot}", f"# tiles: {tile_number_of_mosaic(m)}"]
    if note:
        lines.append(f"# {note}")
    path = OUT / f"{name}.mosaic"
    path.write_text("\n".join(lines) + "\n" + m.to_text())
    log.info("wrote %s  %s", path.name, m.to_line())


def corner_trefoil() -> tuple[KnotMosaic, KnotMosaic]:
    """A 13-tile trefoil with an arc in the bottom-right corner that one push turns into 12 tiles."""
    c = SearchConstraints(4, max_tiles=13, min_tiles=13, single_component=True, min_crossings=3)
    for x in classify(c):
        m = x.mosaic
        if isinstance(x.identification, str) or x.identification[0][0] != "3_1" or not m.grid[3][3]:
            continue
        for mv in applicable_moves(m):
            if mv.kind == MoveKind.CORNER_PUSH:
                pushed = apply_move(m, mv)
                if tile_number_of_mosaic(pushed) == 12:
                    return m, pushed
    raise RuntimeError("no corner trefoil found")


def stretched(m: Mosaic, row: int) -> KnotMosaic:
    """Insert a row below ``row`` that carries the vertical strands straight through (board grows by one)."""
    n = m.size
    grid = [list(r) + [0] for r in m.grid]
    through = [6 if t.mask & 4 else 0 for t in m.grid[row]] + [0]
    grid.insert(row + 1, through)
    return KnotMosaic.of(Mosaic.from_rows(grid[: n + 1]))


def small_boards() -> None:
    write("unknot-t4", Mosaic.parse("21/34"), "unknot", "2x2 circle")
    r = min_tile_number("0^2_1", 3)
    write("unlink2-t7", r.witness, "0^2_1", "two-component unlink on a 3-board")
    m13, m12 = corner_trefoil()
    write("trefoil-t13-corner", m13, "3_1", "arc in the bottom-right corner")
    write("trefoil-t12", m12, "3_1", "corner arc pushed inward")
    write("trefoil-stretched-t15", stretched(m12, 1), "3_1", "row of vertical segments inserted")
    write("trefoil-stretched-t18", stretched(stretched(m12, 1), 2), "3_1", "two rows inserted")
    for name, knot in (("hopf-t12", "2^2_1"), ("solomon-t12", "4^2_1")):
        write(name, min_tile_number(knot, 4).witness, knot)
    # a two-component 4-board drawing with crossings but more tiles than needed
    c = SearchConstraints(4, min_tiles=14, max_tiles=14, forbid_split_trivial=True, min_crossings=2)
    two = next(x for x in classify(c) if x.components == 2 and x.identification == [("2^2_1", False)])
    write("hopf-t14", two.mosaic, "2^2_1", "two components, not tile-minimal")
    # one crossing on a single curve: a kink, which a flip removes
    c = SearchConstraints(4, single_component=True, min_crossings=1)
    kink = min(
        (canonical_form(x.mosaic) for x in classify(c) if x.crossings == 1),
        key=lambda m: (tile_number_of_mosaic(m), m.to_line()),
    )
    write("kink-t" + str(tile_number_of_mosaic(kink)), kink, "unknot", "one nugatory crossing")


def five_board() -> None:
    for knot in FIVE_BOARD:
        r = min_tile_number(knot, 5)
        write(f"{knot}-t{r.tile_number}", r.witness, knot)


def six_board() -> None:
    hits = layout_minima(layouts_for(6, 22))
    for knot in SIX_BOARD:
        hit = hits[knot]
        note = "needs more crossings than the crossing number" if knot == "7_3" else ""
        write(f"{knot}-t{hit.tile_number}", hit.witness, knot, note)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-six", action="store_true")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    OUT.mkdir(parents=True, exist_ok=True)
    small_boards()
    five_board()
    if not args.skip_six:
        six_board()


if __name__ == "__main__":
    main()

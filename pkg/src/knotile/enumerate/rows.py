"""Row catalogues: every horizontally consistent row of tiles, indexed by its top boundary."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from knotile.tiles import TILES, TileKind

MAX_SIZE = 8
INF = 10**9

# crossing tiles share one connection pattern; rows are built over this shadow
# alphabet and the two crossing kinds are expanded afterwards
SHADOW_TILES = tuple(t for t in TILES if t != TileKind.CROSS_B)

_R, _L, _T, _B = 2, 8, 1, 4


@dataclass(frozen=True, slots=True)
class Row:
    tiles: tuple[TileKind, ...]
    top: int  # bit c set when column c has a connection point on its top edge
    bottom: int
    count: int  # non-blank tiles
    crossings: tuple[int, ...]  # columns holding a crossing (stored as CROSS_A)


def _build_rows(n: int, alphabet) -> list[Row]:
    rows = []

    def extend(c, prefix, need_left, top, bottom):
        if c == n:
            if not need_left:
                tiles = tuple(prefix)
                rows.append(Row(
                    tiles, top, bottom, sum(1 for t in tiles if t),
                    tuple(i for i, t in enumerate(tiles) if t >= TileKind.CROSS_A),
                ))
            return
        for t in alphabet:
            m = t.mask
            if bool(m & _L) != need_left:
                continue
            if c == n - 1 and m & _R:
                continue
            prefix.append(t)
            extend(c + 1, prefix, bool(m & _R),
                   top | (1 << c if m & _T else 0), bottom | (1 << c if m & _B else 0))
            prefix.pop()

    extend(0, [], False, 0, 0)
    return rows


@lru_cache(maxsize=None)
def row_catalog(n: int, shadow: bool = True) -> dict[int, tuple[Row, ...]]:
    """Rows of an ``n``-board keyed by top mask."""
    if not 1 <= n <= MAX_SIZE:
        raise ValueError(f"board size must be in 1..{MAX_SIZE}")
    by_top: dict[int, list[Row]] = {}
    for row in _build_rows(n, SHADOW_TILES if shadow else TILES):
        by_top.setdefault(row.top, []).append(row)
    return {k: tuple(v) for k, v in by_top.items()}


@lru_cache(maxsize=None)
def min_tiles_to_close(n: int) -> tuple[dict[int, int], ...]:
    """``table[k][mask]``: fewest tiles in ``k`` more rows entering with ``mask`` and closing off.

    Entry ``k = 0`` is zero for the empty mask and infinite otherwise.
    """
    cat = row_catalog(n)
    masks = range(1 << n)
    table = [{m: (0 if m == 0 else INF) for m in masks}]
    for _ in range(n):
        prev = table[-1]
        cur = {}
        for m in masks:
            best = INF
            for row in cat.get(m, ()):
                rest = prev[row.bottom]
                if rest < INF and row.count + rest < best:
                    best = row.count + rest
            cur[m] = best
        table.append(cur)
    return tuple(table)

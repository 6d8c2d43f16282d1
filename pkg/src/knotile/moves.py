"""Planar isotopy moves on knot mosaics and a greedy normalizer built from them.

Every rule is written for one orientation and applied in all eight board
orientations by conjugating with a symmetry. A move is only offered when it
strictly lowers the key ``(tile number, segment tiles, serialized form)``,
which is what makes :func:`simplify` terminate.

Rules:

* ``LINE_ROW_COLLAPSE``: a row holding only blanks and vertical segments is
  deleted and the rows below move up.
* ``SEGMENT_COLLAPSE``: the top part of a column holding only blanks and
  horizontal segments, with nothing connecting the region left of it to the
  rows below, is absorbed by sliding that region one step right.
* ``CAP_REDUCE``: a crossing-free 2x3 window is replaced by an equivalent
  crossing-free filling with fewer tiles (an arc-segment-arc turning into a cap).
* ``CORNER_PUSH``: a lone arc in the top-left of its neighbourhood is pushed
  into the diagonally adjacent cell.
* ``SEGMENT_PAIR_ELIM``: a crossing-free 2x4 window is replaced by an
  equivalent filling with the same tile count and fewer segment tiles.

Two crossing-free windows are equivalent when they show the same connection
points on the window boundary, pair those points up the same way, and hold the
same number of closed loops: the strands are then isotopic inside the window
(closed crossing-free loops are split unknots wherever they sit).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from knotile.tiles import (
    CROSSINGS,
    SYMMETRIES,
    TILE_CHARS,
    KnotMosaic,
    Mosaic,
    Symmetry,
    TileKind,
    dihedral_transform,
    tile_number_of_mosaic,
)

_T, _R, _B, _L = 1, 2, 4, 8


class MoveKind(enum.IntEnum):
    # tile-number-decreasing rules first: this is the order simplify tries them in
    LINE_ROW_COLLAPSE = 0
    SEGMENT_COLLAPSE = 1
    CAP_REDUCE = 2
    CORNER_PUSH = 3
    SEGMENT_PAIR_ELIM = 4


@dataclass(frozen=True, order=True)
class MoveInstance:
    kind: MoveKind
    anchor: tuple[int, int]
    variant: int  # index into SYMMETRIES

    def __str__(self) -> str:
        return f"{self.kind.name}@{self.anchor[0]},{self.anchor[1]}/{SYMMETRIES[self.variant]}"


class InapplicableMove(ValueError):
    pass


def _segments(grid) -> int:
    return sum(1 for row in grid for t in row if t in (TileKind.SEG_H, TileKind.SEG_V))


def mosaic_key(m: Mosaic) -> tuple:
    """Order that every move strictly decreases."""
    return (tile_number_of_mosaic(m), _segments(m.grid), m.to_line())


def _tile_with(mask: int) -> TileKind | None:
    return _TWO_POINT.get(mask)


_TWO_POINT = {t.mask: t for t in TileKind if 0 < bin(t.mask).count("1") <= 2}
_TWO_POINT[0] = TileKind.BLANK


# --- rules in their reference orientation ------------------------------------
# Each takes a mutable grid (list of lists) and an anchor, and returns the
# rewritten grid or None. They never see crossings move between cells except by
# whole-block translation.


def _line_row_collapse(g, r, c):
    n = len(g)
    if c != 0:
        return None
    row = g[r]
    if not any(t == TileKind.SEG_V for t in row):
        return None
    if any(t not in (TileKind.BLANK, TileKind.SEG_V) for t in row):
        return None
    out = [list(x) for x in g[:r]] + [list(x) for x in g[r + 1:]]
    out.append([TileKind.BLANK] * n)
    return out


def _segment_collapse(g, r, c):
    # anchor (r, c): column c, rows 0..r hold only blanks and horizontal segments;
    # the block rows 0..r, columns 0..c-1 slides right by one
    n = len(g)
    if c == 0 or r >= n:
        return None
    col = [g[i][c] for i in range(r + 1)]
    if any(t not in (TileKind.BLANK, TileKind.SEG_H) for t in col):
        return None
    if not any(t == TileKind.SEG_H for t in col):
        return None
    if r + 1 < n and any(g[r][j].mask & _B for j in range(c + 1)):
        return None
    out = [list(x) for x in g]
    for i in range(r + 1):
        for j in range(c, 0, -1):
            out[i][j] = g[i][j - 1]
        out[i][0] = TileKind.BLANK
    return out


def _corner_push(g, r, c):
    n = len(g)
    if r + 1 >= n or c + 1 >= n or g[r][c] != TileKind.ARC_BR:
        return None
    x, y, z = g[r][c + 1], g[r + 1][c], g[r + 1][c + 1]
    if x.is_crossing or y.is_crossing or bin(x.mask).count("1") != 2 or bin(y.mask).count("1") != 2:
        return None
    if x.mask & _B or y.mask & _R:
        return None
    if z == TileKind.BLANK:
        z2 = TileKind.ARC_TL
    elif z == TileKind.ARC_BR:
        z2 = TileKind.DOUBLE_B
    else:
        return None
    x2 = _tile_with((x.mask & ~_L) | _B)
    y2 = _tile_with((y.mask & ~_T) | _R)
    out = [list(row) for row in g]
    out[r][c] = TileKind.BLANK
    out[r][c + 1], out[r + 1][c], out[r + 1][c + 1] = x2, y2, z2
    return out


# --- crossing-free window rewriting ------------------------------------------

_PLAIN = tuple(t for t in TileKind if t not in CROSSINGS)


def _window_boundary(h: int, w: int):
    """Boundary edge slots of an ``h x w`` window in clockwise order: (row, col, side)."""
    pts = [(0, j, _T) for j in range(w)]
    pts += [(i, w - 1, _R) for i in range(h)]
    pts += [(h - 1, j, _B) for j in reversed(range(w))]
    pts += [(i, 0, _L) for i in reversed(range(h))]
    return pts


def _strand_partner(tile: TileKind, side: int) -> int:
    for a, b in tile.strands:
        if a == side:
            return int(b)
        if b == side:
            return int(a)
    raise KeyError(side)


_STEP = {_T: (-1, 0, _B), _R: (0, 1, _L), _B: (1, 0, _T), _L: (0, -1, _R)}


def _window_signature(win) -> tuple | None:
    """(boundary mask, boundary pairing, closed loops) of a crossing-free window."""
    h, w = len(win), len(win[0])
    bpts = _window_boundary(h, w)
    index = {p: k for k, p in enumerate(bpts)}
    present = tuple(bool(win[i][j].mask & s) for i, j, s in bpts)
    used = set()
    pairing = []
    for k, (i, j, s) in enumerate(bpts):
        if not present[k] or (i, j, s) in used:
            continue
        ci, cj, cs = i, j, s
        while True:
            used.add((ci, cj, cs))
            out = _strand_partner(win[ci][cj], cs)
            used.add((ci, cj, out))
            if (ci, cj, out) in index:
                pairing.append((k, index[(ci, cj, out)]))
                break
            di, dj, back = _STEP[out]
            ci, cj, cs = ci + di, cj + dj, back
    # every remaining strand end lies on a closed loop
    loops = 0
    seen = set(used)
    for i in range(h):
        for j in range(w):
            for s in (_T, _R, _B, _L):
                if win[i][j].mask & s and (i, j, s) not in seen:
                    loops += 1
                    ci, cj, cs = i, j, s
                    while (ci, cj, cs) not in seen:
                        seen.add((ci, cj, cs))
                        out = _strand_partner(win[ci][cj], cs)
                        seen.add((ci, cj, out))
                        di, dj, back = _STEP[out]
                        ci, cj, cs = ci + di, cj + dj, back
    return present, tuple(sorted(pairing)), loops


@lru_cache(maxsize=None)
def _window_table(h: int, w: int) -> dict:
    """Best crossing-free filling per signature, best meaning least (tiles, segments, text)."""
    best: dict = {}
    cells = [(i, j) for i in range(h) for j in range(w)]
    grid = [[TileKind.BLANK] * w for _ in range(h)]

    def rec(k):
        if k == len(cells):
            sig = _window_signature(grid)
            key = _window_key(grid)
            if sig not in best or key < best[sig][0]:
                best[sig] = (key, tuple(tuple(r) for r in grid))
            return
        i, j = cells[k]
        for t in _PLAIN:
            m = t.mask
            if j > 0 and bool(grid[i][j - 1].mask & _R) != bool(m & _L):
                continue
            if i > 0 and bool(grid[i - 1][j].mask & _B) != bool(m & _T):
                continue
            grid[i][j] = t
            rec(k + 1)
        grid[i][j] = TileKind.BLANK

    rec(0)
    return {sig: fill for sig, (_, fill) in best.items()}


def _window_key(win) -> tuple:
    tiles = sum(1 for row in win for t in row if t)
    return (tiles, _segments(win), "".join(TILE_CHARS[t] for row in win for t in row))


def _window_rewrite(h, w, want):
    def rule(g, r, c):
        n = len(g)
        if r + h > n or c + w > n:
            return None
        win = [g[r + i][c:c + w] for i in range(h)]
        if any(t.is_crossing for row in win for t in row):
            return None
        best = _window_table(h, w).get(_window_signature(win))
        if best is None or not want(_window_key(win), _window_key(best)):
            return None
        out = [list(row) for row in g]
        for i in range(h):
            out[r + i][c:c + w] = list(best[i])
        return out
    return rule


_RULES = {
    MoveKind.LINE_ROW_COLLAPSE: _line_row_collapse,
    MoveKind.SEGMENT_COLLAPSE: _segment_collapse,
    MoveKind.CAP_REDUCE: _window_rewrite(2, 3, lambda old, new: new[0] < old[0]),
    MoveKind.CORNER_PUSH: _corner_push,
    MoveKind.SEGMENT_PAIR_ELIM: _window_rewrite(2, 4, lambda old, new: new[0] == old[0] and new[1] < old[1]),
}


def _as_lists(m: Mosaic):
    return [list(row) for row in m.grid]


def _apply_in_frame(m: Mosaic, kind: MoveKind, anchor, s: Symmetry, framed=None):
    """Run ``kind`` at ``anchor`` (given in ``m``'s coordinates) in the frame ``s``."""
    n = m.size
    if framed is None:
        framed = _as_lists(dihedral_transform(m, s))
    r, c = s.cell(*anchor, n)
    out = _RULES[kind](framed, r, c)
    if out is None:
        return None
    back = dihedral_transform(Mosaic(tuple(map(tuple, out))), s.inverse)
    return KnotMosaic(back.grid)


def _candidates(m: Mosaic):
    n = m.size
    key = mosaic_key(m)
    frames = [_as_lists(dihedral_transform(m, s)) for s in SYMMETRIES]
    for kind in MoveKind:
        for r in range(n):
            for c in range(n):
                results = set()
                for v, s in enumerate(SYMMETRIES):
                    out = _apply_in_frame(m, kind, (r, c), s, frames[v])
                    if out is None or out in results or mosaic_key(out) >= key:
                        continue
                    results.add(out)
                    yield MoveInstance(kind, (r, c), v), out


def applicable_moves(m: KnotMosaic) -> list[MoveInstance]:
    """Every rule match, ordered by (rule, row, column, variant)."""
    return [mv for mv, _ in _candidates(m)]


def apply_move(m: KnotMosaic, mv: MoveInstance) -> KnotMosaic:
    out = _apply_in_frame(m, mv.kind, mv.anchor, SYMMETRIES[mv.variant])
    if out is None or mosaic_key(out) >= mosaic_key(m):
        raise InapplicableMove(f"{mv} does not apply to {m.to_line()}")
    return out


def step_bound(n: int) -> int:
    return len(MoveKind) * n ** 4


def simplify(m: KnotMosaic, trace_steps: list | None = None) -> KnotMosaic:
    """Apply the first available move until none is left."""
    cur = KnotMosaic.of(m) if not isinstance(m, KnotMosaic) else m
    bound = step_bound(cur.size)
    for _ in range(bound):
        nxt = next(_candidates(cur), None)
        if nxt is None:
            return cur
        mv, cur = nxt
        if trace_steps is not None:
            trace_steps.append(mv)
    if next(_candidates(cur), None) is None:
        return cur
    raise RuntimeError(f"simplify exceeded {bound} steps")


__all__ = [
    "InapplicableMove",
    "MoveInstance",
    "MoveKind",
    "applicable_moves",
    "apply_move",
    "mosaic_key",
    "simplify",
    "step_bound",
]

"""Mosaic tiles, boards, and the structural queries used throughout the engine.

Tile indices follow the usual mosaic numbering:

====  ===========  =====================================
idx   name         strands (edge pairs)
====  ===========  =====================================
0     BLANK        none
1     ARC_BL       bottom-left
2     ARC_BR       bottom-right
3     ARC_TR       top-right
4     ARC_TL       top-left
5     SEG_H        left-right
6     SEG_V        top-bottom
7     DOUBLE_A     bottom-left + top-right
8     DOUBLE_B     bottom-right + top-left
9     CROSS_A      left-right over top-bottom
10    CROSS_B      top-bottom over left-right
====  ===========  =====================================

Boards are indexed ``(row, column)`` from the top-left corner, both 0-based.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Sequence


class EdgeSide(enum.IntEnum):
    """Midpoint of one tile edge. Values are bit flags so sets pack into a nibble."""

    TOP = 1
    RIGHT = 2
    BOTTOM = 4
    LEFT = 8

    @property
    def opposite(self) -> EdgeSide:
        return _OPPOSITE[self]

    def rotated(self, quarter_turns: int = 1) -> EdgeSide:
        """Image under ``quarter_turns`` counterclockwise quarter turns."""
        side = self
        for _ in range(quarter_turns % 4):
            side = _CCW[side]
        return side

    def reflected(self) -> EdgeSide:
        """Image under the left-right mirror."""
        return _MIRROR[self]

    @property
    def letter(self) -> str:
        return self.name[0]


T, R, B, L = EdgeSide.TOP, EdgeSide.RIGHT, EdgeSide.BOTTOM, EdgeSide.LEFT
SIDES: tuple[EdgeSide, ...] = (T, R, B, L)
_OPPOSITE = {T: B, B: T, L: R, R: L}
_CCW = {T: L, L: B, B: R, R: T}
_MIRROR = {T: T, B: B, L: R, R: L}
# unit vectors with y pointing up the page
SIDE_VECTOR = {T: (0, 1), R: (1, 0), B: (0, -1), L: (-1, 0)}
# (row, col) offset of the neighbouring cell across each edge
SIDE_STEP = {T: (-1, 0), R: (0, 1), B: (1, 0), L: (0, -1)}


class TileKind(enum.IntEnum):
    BLANK = 0
    ARC_BL = 1
    ARC_BR = 2
    ARC_TR = 3
    ARC_TL = 4
    SEG_H = 5
    SEG_V = 6
    DOUBLE_A = 7
    DOUBLE_B = 8
    CROSS_A = 9
    CROSS_B = 10

    @property
    def strands(self) -> tuple[tuple[EdgeSide, EdgeSide], ...]:
        """Edge pairs joined by a curve on this tile. For crossings the over strand is first."""
        return _STRANDS[self]

    @property
    def mask(self) -> int:
        """Bit mask of the connection points (see :class:`EdgeSide`)."""
        return _MASKS[self]

    @property
    def is_crossing(self) -> bool:
        return self >= TileKind.CROSS_A

    @property
    def char(self) -> str:
        return TILE_CHARS[self]

    def partner(self, side: EdgeSide) -> EdgeSide:
        """Other end of the strand entering through ``side``."""
        return _PARTNER[self][side]


_STRANDS: dict[TileKind, tuple[tuple[EdgeSide, EdgeSide], ...]] = {
    TileKind.BLANK: (),
    TileKind.ARC_BL: ((B, L),),
    TileKind.ARC_BR: ((B, R),),
    TileKind.ARC_TR: ((T, R),),
    TileKind.ARC_TL: ((T, L),),
    TileKind.SEG_H: ((L, R),),
    TileKind.SEG_V: ((T, B),),
    TileKind.DOUBLE_A: ((B, L), (T, R)),
    TileKind.DOUBLE_B: ((B, R), (T, L)),
    TileKind.CROSS_A: ((L, R), (T, B)),
    TileKind.CROSS_B: ((T, B), (L, R)),
}
_MASKS = {k: sum({s for pair in v for s in pair}) for k, v in _STRANDS.items()}
_PARTNER = {
    k: {**{a: b for a, b in v}, **{b: a for a, b in v}} for k, v in _STRANDS.items()
}

TILE_CHARS = "0123456789A"
TILES: tuple[TileKind, ...] = tuple(TileKind)
ARCS = (TileKind.ARC_BL, TileKind.ARC_BR, TileKind.ARC_TR, TileKind.ARC_TL)
SEGMENTS = (TileKind.SEG_H, TileKind.SEG_V)
DOUBLE_ARCS = (TileKind.DOUBLE_A, TileKind.DOUBLE_B)
CROSSINGS = (TileKind.CROSS_A, TileKind.CROSS_B)
FOUR_POINT = DOUBLE_ARCS + CROSSINGS


def connection_points(tile: TileKind) -> frozenset[EdgeSide]:
    """Edges of ``tile`` carrying a connection point."""
    return frozenset(s for s in SIDES if tile.mask & s)


def tiles_with_mask(mask: int) -> tuple[TileKind, ...]:
    return tuple(t for t in TILES if t.mask == mask)


def _transform_tile(tile: TileKind, edge_map) -> TileKind:
    mapped = [(edge_map(a), edge_map(b)) for a, b in tile.strands]
    pairs = frozenset(frozenset(p) for p in mapped)
    for cand in TILES:
        cand_pairs = frozenset(frozenset(p) for p in cand.strands)
        if cand_pairs != pairs:
            continue
        if cand.is_crossing and frozenset(cand.strands[0]) != frozenset(mapped[0]):
            continue
        return cand
    raise AssertionError(f"tile set not closed under transform: {tile!r}")


@dataclass(frozen=True)
class Symmetry:
    """Board symmetry: optional left-right mirror followed by counterclockwise quarter turns."""

    quarter_turns: int = 0
    reflect: bool = False

    def __post_init__(self):
        object.__setattr__(self, "quarter_turns", self.quarter_turns % 4)

    @property
    def inverse(self) -> Symmetry:
        if self.reflect:
            return self
        return Symmetry(-self.quarter_turns, False)

    def side(self, side: EdgeSide) -> EdgeSide:
        if self.reflect:
            side = side.reflected()
        return side.rotated(self.quarter_turns)

    def tile(self, tile: TileKind) -> TileKind:
        return _TILE_IMAGE[self][tile]

    def cell(self, row: int, col: int, n: int) -> tuple[int, int]:
        """Where the cell ``(row, col)`` of an ``n``-board lands."""
        if self.reflect:
            col = n - 1 - col
        for _ in range(self.quarter_turns):
            row, col = n - 1 - col, row
        return row, col

    def __str__(self) -> str:
        return f"rot{90 * self.quarter_turns}" + ("+mirror" if self.reflect else "")


SYMMETRIES: tuple[Symmetry, ...] = tuple(
    Symmetry(k, f) for f in (False, True) for k in range(4)
)
IDENTITY = SYMMETRIES[0]
_TILE_IMAGE = {s: {t: _transform_tile(t, s.side) for t in TILES} for s in SYMMETRIES}


class MosaicFormatError(ValueError):
    """Raised for malformed mosaic text."""


class NotSuitablyConnected(ValueError):
    """Raised when a knot mosaic is required but the grid has unmatched connection points."""


Grid = tuple[tuple[TileKind, ...], ...]


@dataclass(frozen=True, slots=True, eq=False)
class Mosaic:
    """An ``n x n`` array of tiles. Immutable; not necessarily suitably connected.

    Equality and hashing look at the grid only, so a :class:`KnotMosaic` equals
    the plain :class:`Mosaic` with the same tiles.
    """

    grid: Grid

    def __eq__(self, other):
        if not isinstance(other, Mosaic):
            return NotImplemented
        return self.grid == other.grid

    def __hash__(self):
        return hash(self.grid)

    def __post_init__(self):
        n = len(self.grid)
        if n < 1 or any(len(row) != n for row in self.grid):
            raise MosaicFormatError("mosaic grid must be square with size >= 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Mosaic:
        return cls(tuple(tuple(TileKind(t) for t in row) for row in rows))

    @classmethod
    def blank(cls, n: int) -> Mosaic:
        return cls(((TileKind.BLANK,) * n,) * n)

    @classmethod
    def parse(cls, text: str) -> Mosaic:
        """Read the ``.mosaic`` text form; rows may also be joined by ``/`` on one line."""
        body = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            body.extend(part.strip() for part in line.split("/"))
        if not body:
            raise MosaicFormatError("empty mosaic")
        n = len(body)
        for line in body:
            if len(line) != n:
                raise MosaicFormatError(f"expected {n} tiles per row, got {line!r}")
            bad = set(line.upper()) - set(TILE_CHARS)
            if bad:
                raise MosaicFormatError(f"unknown tile characters {sorted(bad)}")
        return cls(tuple(tuple(TileKind(TILE_CHARS.index(ch)) for ch in line.upper()) for line in body))

    @property
    def size(self) -> int:
        return len(self.grid)

    def __getitem__(self, pos: tuple[int, int]) -> TileKind:
        r, c = pos
        return self.grid[r][c]

    def cells(self) -> Iterator[tuple[int, int, TileKind]]:
        for r, row in enumerate(self.grid):
            for c, t in enumerate(row):
                yield r, c, t

    def replace(self, changes: dict[tuple[int, int], TileKind]) -> Mosaic:
        rows = [list(row) for row in self.grid]
        for (r, c), t in changes.items():
            rows[r][c] = TileKind(t)
        return type(self)(tuple(tuple(row) for row in rows))

    def to_text(self) -> str:
        return "\n".join("".join(TILE_CHARS[t] for t in row) for row in self.grid) + "\n"

    def to_line(self) -> str:
        """Single-line form: rows joined by ``/``."""
        return "/".join("".join(TILE_CHARS[t] for t in row) for row in self.grid)

    def __str__(self) -> str:
        return self.to_line()


class KnotMosaic(Mosaic):
    """A mosaic known to be suitably connected."""

    __slots__ = ()

    def __post_init__(self):
        Mosaic.__post_init__(self)
        if not is_suitably_connected(self):
            raise NotSuitablyConnected(f"mosaic {self.to_line()} is not suitably connected")

    @classmethod
    def of(cls, m: Mosaic) -> KnotMosaic:
        if isinstance(m, KnotMosaic):
            return m
        return cls(m.grid)

    @classmethod
    def _trusted(cls, grid: Grid) -> KnotMosaic:
        # skip validation; callers guarantee suitable connectedness
        obj = object.__new__(cls)
        object.__setattr__(obj, "grid", grid)
        return obj


def is_suitably_connected(m: Mosaic) -> bool:
    n = m.size
    g = m.grid
    for r in range(n):
        row = g[r]
        for c in range(n):
            mask = _MASKS[row[c]]
            right = bool(mask & R)
            if c == n - 1:
                if right:
                    return False
            elif right != bool(_MASKS[row[c + 1]] & L):
                return False
            if c == 0 and mask & L:
                return False
            down = bool(mask & B)
            if r == n - 1:
                if down:
                    return False
            elif down != bool(_MASKS[g[r + 1][c]] & T):
                return False
            if r == 0 and mask & T:
                return False
    return True


def tile_number_of_mosaic(m: Mosaic) -> int:
    """Count of non-blank tiles."""
    return sum(1 for row in m.grid for t in row if t)


def crossing_count(m: Mosaic) -> int:
    return sum(1 for row in m.grid for t in row if t >= TileKind.CROSS_A)


def entry_points_between(m: Mosaic, axis: str, index: int) -> int:
    """Matched connection points across the boundary after row (or column) ``index``.

    ``axis`` is ``"row"`` or ``"col"``; ``index`` runs over ``0 .. n-2``.
    """
    n = m.size
    if not 0 <= index < n - 1:
        raise IndexError(f"boundary index {index} outside 0..{n - 2}")
    if axis == "row":
        pairs = ((m.grid[index][c], B, m.grid[index + 1][c], T) for c in range(n))
    elif axis == "col":
        pairs = ((m.grid[r][index], R, m.grid[r][index + 1], L) for r in range(n))
    else:
        raise ValueError(f"axis must be 'row' or 'col', not {axis!r}")
    return sum(1 for a, sa, b, sb in pairs if a.mask & sa and b.mask & sb)


def occupied_spans(m: Mosaic) -> tuple[set[int], set[int]]:
    rows = {r for r, row in enumerate(m.grid) if any(row)}
    cols = {c for c in range(m.size) if any(row[c] for row in m.grid)}
    return rows, cols


def row_counts(m: Mosaic) -> tuple[int, ...]:
    return tuple(sum(1 for t in row if t) for row in m.grid)


def column_counts(m: Mosaic) -> tuple[int, ...]:
    return tuple(sum(1 for row in m.grid if row[c]) for c in range(m.size))


def dihedral_transform(m: Mosaic, s: Symmetry) -> Mosaic:
    n = m.size
    out = [[TileKind.BLANK] * n for _ in range(n)]
    image = _TILE_IMAGE[s]
    for r, row in enumerate(m.grid):
        for c, t in enumerate(row):
            rr, cc = s.cell(r, c, n)
            out[rr][cc] = image[t]
    grid = tuple(map(tuple, out))
    if isinstance(m, KnotMosaic):
        return KnotMosaic._trusted(grid)
    return Mosaic(grid)


def dihedral_orbit(m: Mosaic) -> list[Mosaic]:
    return [dihedral_transform(m, s) for s in SYMMETRIES]


def canonical_form(m: Mosaic) -> Mosaic:
    """Dihedral image with the lexicographically least serialization."""
    return min(dihedral_orbit(m), key=Mosaic.to_line)


def is_canonical(m: Mosaic) -> bool:
    key = m.to_line()
    return all(key <= img.to_line() for img in dihedral_orbit(m))


class CapKind(enum.Enum):
    TOP = "top"
    RIGHT = "right"
    BOTTOM = "bottom"
    LEFT = "left"


@dataclass(frozen=True)
class Cap:
    kind: CapKind
    position: tuple[int, int]  # first tile of the pair in row-major order

    @property
    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        r, c = self.position
        if self.kind in (CapKind.TOP, CapKind.BOTTOM):
            return (r, c), (r, c + 1)
        return (r, c), (r + 1, c)

    @property
    def feet(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Cells receiving the free ends of the cap."""
        dr, dc = {
            CapKind.TOP: (1, 0),
            CapKind.BOTTOM: (-1, 0),
            CapKind.LEFT: (0, 1),
            CapKind.RIGHT: (0, -1),
        }[self.kind]
        (r0, c0), (r1, c1) = self.cells
        return (r0 + dr, c0 + dc), (r1 + dr, c1 + dc)


# (kind, first tile, second tile, second cell offset)
_CAP_PATTERNS = (
    (CapKind.TOP, TileKind.ARC_BR, TileKind.ARC_BL, (0, 1)),
    (CapKind.RIGHT, TileKind.ARC_BL, TileKind.ARC_TL, (1, 0)),
    (CapKind.BOTTOM, TileKind.ARC_TR, TileKind.ARC_TL, (0, 1)),
    (CapKind.LEFT, TileKind.ARC_BR, TileKind.ARC_TR, (1, 0)),
)


def find_caps(m: Mosaic) -> list[Cap]:
    """All caps, ordered by position (row-major) then kind."""
    n = m.size
    caps = []
    for r, c, t in m.cells():
        for kind, first, second, (dr, dc) in _CAP_PATTERNS:
            rr, cc = r + dr, c + dc
            if t == first and rr < n and cc < n and m.grid[rr][cc] == second:
                caps.append(Cap(kind, (r, c)))
    return caps


_LINE_RE = re.compile(r"^[0-9A]+(/[0-9A]+)*$")


def looks_like_mosaic_line(text: str) -> bool:
    return bool(_LINE_RE.match(text.strip().upper()))

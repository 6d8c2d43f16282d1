"""Layouts (boards of tile-choice slots), filling them, and row/column occupancy profiles."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterator, Union

from knotile.enumerate.generate import SearchConstraints, generate
from knotile.tiles import (
    FOUR_POINT,
    SYMMETRIES,
    TILE_CHARS,
    TILES,
    EdgeSide,
    Mosaic,
    MosaicFormatError,
    Symmetry,
    TileKind,
)

_EDGE_LETTERS = "TRBL"


class LayoutFormatError(ValueError):
    pass


@dataclass(frozen=True)
class LayoutSlot:
    """Tile kinds permitted at one position, plus connection points every choice must have."""

    kinds: frozenset
    edges: int = 0

    def __post_init__(self):
        if not self.kinds:
            raise ValueError("a slot must allow at least one tile kind")
        for k in self.kinds:
            if TileKind(k).mask & self.edges != self.edges:
                raise ValueError(f"{TileKind(k).name} lacks a required connection point")

    @classmethod
    def of(cls, kinds, edges: int | None = None) -> LayoutSlot:
        kinds = frozenset(TileKind(k) for k in kinds)
        if edges is None:
            edges = 15
            for k in kinds:
                edges &= k.mask
        return cls(kinds, edges)

    @property
    def is_blank(self) -> bool:
        return self.kinds == {TileKind.BLANK}

    def token(self) -> str:
        text = "".join(TILE_CHARS[k] for k in sorted(self.kinds))
        if self.edges:
            text += ":" + "".join(ch for i, ch in enumerate(_EDGE_LETTERS) if self.edges >> i & 1)
        return text

    @classmethod
    def parse(cls, token: str) -> LayoutSlot:
        kinds_text, _, edge_text = token.partition(":")
        try:
            kinds = [TileKind(TILE_CHARS.index(ch)) for ch in kinds_text]
        except ValueError:
            raise LayoutFormatError(f"bad tile index in slot {token!r}") from None
        edges = 0
        for ch in edge_text:
            if ch not in _EDGE_LETTERS:
                raise LayoutFormatError(f"bad edge letter in slot {token!r}")
            edges |= 1 << _EDGE_LETTERS.index(ch)
        try:
            return cls.of(kinds, edges if edge_text else None)
        except ValueError as exc:
            raise LayoutFormatError(f"slot {token!r}: {exc}") from None

    def transformed(self, s: Symmetry) -> LayoutSlot:
        edges = 0
        for side in EdgeSide:
            if self.edges & side:
                edges |= s.side(side)
        return LayoutSlot(frozenset(s.tile(k) for k in self.kinds), edges)


BLANK_SLOT = LayoutSlot.of([TileKind.BLANK])
FOUR_POINT_SLOT = LayoutSlot.of(FOUR_POINT)


@dataclass(frozen=True)
class Layout:
    size: int
    slots: tuple[tuple[LayoutSlot, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.slots) != self.size or any(len(r) != self.size for r in self.slots):
            raise LayoutFormatError("a layout must be square")

    @property
    def allowed(self) -> tuple[tuple[frozenset, ...], ...]:
        return tuple(tuple(s.kinds for s in row) for row in self.slots)

    @property
    def tile_count(self) -> int:
        """Positions that cannot be blank."""
        return sum(1 for row in self.slots for s in row if TileKind.BLANK not in s.kinds)

    @property
    def four_point_count(self) -> int:
        return sum(1 for row in self.slots for s in row if s.kinds <= set(FOUR_POINT) and s.edges == 15)

    def matches(self, m: Mosaic) -> bool:
        return m.size == self.size and all(
            m.grid[r][c] in self.slots[r][c].kinds for r in range(self.size) for c in range(self.size)
        )

    def transformed(self, s: Symmetry) -> Layout:
        n = self.size
        out = [[None] * n for _ in range(n)]
        for r in range(n):
            for c in range(n):
                r2, c2 = s.cell(r, c, n)
                out[r2][c2] = self.slots[r][c].transformed(s)
        return Layout(n, tuple(map(tuple, out)), self.name)

    def to_text(self) -> str:
        lines = [f"# {self.name}"] if self.name else []
        width = max(len(s.token()) for row in self.slots for s in row)
        for row in self.slots:
            lines.append(" ".join(s.token().ljust(width) for s in row).rstrip())
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str, name: str = "") -> Layout:
        rows = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append(tuple(LayoutSlot.parse(tok) for tok in line.split()))
        if not rows:
            raise LayoutFormatError("empty layout")
        return cls(len(rows), tuple(rows), name)

    def key(self) -> str:
        return "/".join(" ".join(s.token() for s in row) for row in self.slots)


def layout_of(m: Mosaic) -> Layout:
    """Abstract a mosaic into a layout: four-point cells become open slots, the rest stay fixed."""
    rows = []
    for row in m.grid:
        rows.append(tuple(FOUR_POINT_SLOT if t in FOUR_POINT else LayoutSlot.of([t]) for t in row))
    return Layout(m.size, tuple(rows))


def layout_orbit(layout: Layout) -> list[Layout]:
    """Distinct images of ``layout`` under the eight board symmetries."""
    seen, out = set(), []
    for s in SYMMETRIES:
        image = layout.transformed(s)
        if image.key() not in seen:
            seen.add(image.key())
            out.append(image)
    return out


def canonical_layout(layout: Layout) -> Layout:
    return min(layout_orbit(layout), key=Layout.key)


def fill_layout(layout: Layout, c: SearchConstraints | None = None) -> Iterator:
    """Every suitably connected mosaic allowed by ``layout`` that also meets ``c``."""
    base = c if c is not None else SearchConstraints(layout.size)
    if base.size != layout.size:
        raise ValueError("constraint size differs from the layout size")
    fields = {k: getattr(base, k) for k in base.__dataclass_fields__}
    fields["allowed"] = layout.allowed
    yield from generate(SearchConstraints(**fields))



def _layout_dir() -> Path:
    return Path(str(resources.files("knotile") / "data" / "layouts"))


@lru_cache(maxsize=None)
def bundled_layouts() -> dict[str, Layout]:
    out = {}
    for path in sorted(_layout_dir().glob("*.layout")):
        out[path.stem] = Layout.parse(path.read_text(), path.stem)
    return out


def load_layout(spec: Union[str, os.PathLike]) -> Layout:
    """A bundled layout by name, or a layout file by path."""
    bundled = bundled_layouts()
    if isinstance(spec, str) and spec in bundled:
        return bundled[spec]
    path = Path(spec)
    if not path.exists():
        raise FileNotFoundError(f"no bundled layout or file named {spec!r}")
    return Layout.parse(path.read_text(), path.stem)


def layouts_for(size: int, tile_count: int | None = None) -> list[Layout]:
    return [
        L for L in bundled_layouts().values()
        if L.size == size and (tile_count is None or L.tile_count == tile_count)
    ]


# --- occupancy profiles ------------------------------------------------------
#
# A profile is the occupancy pattern (which cells are non-blank) of a
# space-efficient prime-knot mosaic with every row or every column occupied.
# The rules below are necessary conditions collected from the structure lemmas:
#   * corners are blank;
#   * the first and last occupied line of each direction holds only caps:
#     one cap or two adjacent caps (2 or 4 cells, one run);
#   * the line next to it is that run widened by one cell on each side (the
#     cap feet have four connection points, so they need both neighbours),
#     giving 4 or 6 cells;
#   * the feet also connect onward, so the third line covers the cap run;
#   * lines strictly between those have at least five non-blank cells.
# Both rows and columns must satisfy these simultaneously.


def _pc(x: int) -> int:
    return bin(x).count("1")


def _widen(m: int, n: int) -> int:
    return ((m << 1) | m | (m >> 1)) & ((1 << n) - 1)


def _cap_run(m: int, n: int) -> bool:
    if m & 1 or m >> (n - 1) & 1 or _pc(m) not in (2, 4):
        return False
    low = m & -m
    return m // low == (1 << _pc(m)) - 1


def _lines_ok(seq: list[int], n: int) -> bool:
    while seq and not seq[0]:
        seq = seq[1:]
    while seq and not seq[-1]:
        seq = seq[:-1]
    if len(seq) < 4 or 0 in seq:
        return False
    for cap, nxt, third in ((seq[0], seq[1], seq[2]), (seq[-1], seq[-2], seq[-3])):
        if not _cap_run(cap, n) or nxt != _widen(cap, n) or _pc(nxt) != _pc(cap) + 2:
            return False
        if third & cap != cap:
            return False
    return all(_pc(x) >= 5 for x in seq[2:-2])


def _columns(grid: tuple[int, ...], n: int) -> list[int]:
    return [sum(((grid[r] >> c) & 1) << r for r in range(n)) for c in range(n)]


@dataclass
class ProfileReport:
    size: int
    patterns: dict[int, list[tuple[int, ...]]]  # tile number -> occupancy grids (row bitmasks)

    @property
    def tile_numbers(self) -> set[int]:
        return set(self.patterns)

    def render(self, grid: tuple[int, ...]) -> str:
        n = self.size
        return "\n".join("".join("#" if r >> c & 1 else "." for c in range(n)) for r in grid)


def layout_profiles(n: int) -> ProfileReport:
    """Occupancy patterns allowed by the rules above, grouped by tile number."""
    if not 4 <= n <= 8:
        raise ValueError("profiles are computed for boards of size 4 to 8")
    caps = [m for m in range(1 << n) if _cap_run(m, n)]
    wide = [m for m in range(1 << n) if _pc(m) >= 5]
    found: dict[int, set] = {}
    full_cols = (1 << n) - 1
    for k in range(4, n + 1):
        for top, bottom in itertools.product(caps, repeat=2):
            for middle in itertools.product(wide, repeat=k - 4):
                rows = [top, _widen(top, n), *middle, _widen(bottom, n), bottom]
                if not _lines_ok(rows, n):
                    continue
                for off in range(n - k + 1):
                    grid = (0,) * off + tuple(rows) + (0,) * (n - k - off)
                    cols = _columns(grid, n)
                    every_col = all(cols)
                    if k < n and not every_col:
                        continue
                    if _lines_ok(cols, n):
                        found.setdefault(sum(map(_pc, grid)), set()).add(grid)
    return ProfileReport(n, {t: sorted(g) for t, g in sorted(found.items())})


SEVEN_BOARD_CONJECTURE = frozenset({27, 29, 31, 32, 34, 36, 37, 39, 40, 41})


@dataclass
class ConsistencyReport:
    size: int
    predicted: frozenset
    computed: frozenset

    @property
    def missing(self) -> list[int]:
        return sorted(self.predicted - self.computed)

    @property
    def extra(self) -> list[int]:
        return sorted(self.computed - self.predicted)

    @property
    def consistent(self) -> bool:
        return self.predicted == self.computed

    def summary(self) -> str:
        head = "CONJECTURE-CONSISTENT" if self.consistent else "CONJECTURE-DISCREPANT"
        return (
            f"{head} (conjectural, not a proof) size={self.size} "
            f"computed={sorted(self.computed)} predicted={sorted(self.predicted)} "
            f"missing={self.missing} extra={self.extra}"
        )


def conjecture_report(n: int = 7, predicted=SEVEN_BOARD_CONJECTURE) -> ConsistencyReport:
    return ConsistencyReport(n, frozenset(predicted), frozenset(layout_profiles(n).tile_numbers))


__all__ = [
    "BLANK_SLOT",
    "FOUR_POINT_SLOT",
    "ConsistencyReport",
    "Layout",
    "LayoutFormatError",
    "LayoutSlot",
    "ProfileReport",
    "bundled_layouts",
    "canonical_layout",
    "conjecture_report",
    "fill_layout",
    "layout_of",
    "layout_orbit",
    "layout_profiles",
    "layouts_for",
    "load_layout",
]

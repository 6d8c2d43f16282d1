"""Depth-first generation of knot mosaics under search constraints."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from knotile.enumerate.rows import MAX_SIZE, min_tiles_to_close, row_catalog
from knotile.tiles import CROSSINGS, KnotMosaic, Mosaic, TileKind, is_canonical
from knotile.trace import component_count, is_reduced, trace


@dataclass(frozen=True)
class SearchConstraints:
    size: int
    max_tiles: int | None = None
    min_tiles: int = 0
    single_component: bool = False
    forbid_split_trivial: bool = False
    require_reduced: bool = False
    min_crossings: int = 0
    canonical: bool = False
    # per-cell sets of permitted tile kinds (a layout); None leaves every cell free
    allowed: tuple[tuple[frozenset, ...], ...] | None = None

    def __post_init__(self):
        if not 1 <= self.size <= MAX_SIZE:
            raise ValueError(f"size must be in 1..{MAX_SIZE}")
        if self.min_tiles < 0 or self.min_crossings < 0 or (self.max_tiles is not None and self.max_tiles < 0):
            raise ValueError("bounds must be nonnegative")
        if self.allowed is not None:
            if len(self.allowed) != self.size or any(len(r) != self.size for r in self.allowed):
                raise ValueError("allowed-kinds grid must match the board size")

    @property
    def budget(self) -> int:
        return self.size * self.size if self.max_tiles is None else self.max_tiles

    @property
    def needs_trace(self) -> bool:
        return self.single_component or self.forbid_split_trivial or self.require_reduced


def shadow_passes(shadow: Mosaic, c: SearchConstraints) -> bool:
    """Filters that do not depend on which crossing kind sits in each crossing cell."""
    if c.single_component and not c.forbid_split_trivial and not c.require_reduced:
        return component_count(shadow) == 1
    t = trace(shadow)
    if c.single_component and t.component_count != 1:
        return False
    if c.forbid_split_trivial and any(k == 0 for k in t.passes):
        return False
    if c.require_reduced and not is_reduced(t.diagram):
        return False
    return True


def _shadow_kinds(kinds) -> frozenset:
    return frozenset(TileKind.CROSS_A if k == TileKind.CROSS_B else TileKind(k) for k in kinds)


def _restricted_catalogs(c: SearchConstraints) -> list[dict]:
    cat = row_catalog(c.size)
    if c.allowed is None:
        return [cat] * c.size
    out = []
    for cells in c.allowed:
        sets = [_shadow_kinds(k) for k in cells]
        out.append({
            mask: kept for mask, rows in cat.items()
            if (kept := tuple(r for r in rows if all(t in s for t, s in zip(r.tiles, sets))))
        })
    return out


def generate_shadow_rows(c: SearchConstraints) -> Iterator[tuple]:
    """Row tuples of every suitably connected shadow board within the tile budget.

    Crossing cells hold ``CROSS_A`` as a placeholder for either crossing kind.
    """
    n = c.size
    cats = _restricted_catalogs(c)
    close = min_tiles_to_close(n)
    budget = c.budget
    lo = c.min_tiles
    min_x = c.min_crossings
    stack: list = []

    def dfs(i, mask, used, xs):
        rest = n - i - 1
        for row in cats[i].get(mask, ()):
            total = used + row.count
            if total + close[rest][row.bottom] > budget:
                continue
            stack.append(row)
            if rest == 0:
                nx = xs + len(row.crossings)
                if total >= lo and nx >= min_x:
                    yield tuple(stack)
            else:
                yield from dfs(i + 1, row.bottom, total, xs + len(row.crossings))
            stack.pop()

    if close[n][0] <= budget:
        yield from dfs(0, 0, 0, 0)


def generate_shadows(c: SearchConstraints) -> Iterator[Mosaic]:
    for rows in generate_shadow_rows(c):
        shadow = KnotMosaic._trusted(tuple(r.tiles for r in rows))
        if c.needs_trace and not shadow_passes(shadow, c):
            continue
        yield shadow


def expand_crossings(shadow: Mosaic, allowed=None) -> Iterator[KnotMosaic]:
    """Every assignment of crossing kinds to the crossing cells, CROSS_A-first order."""
    cells = [(r, col) for r, col, t in shadow.cells() if t.is_crossing]
    if not cells:
        yield KnotMosaic._trusted(shadow.grid)
        return
    rows = [list(row) for row in shadow.grid]
    options = [
        CROSSINGS if allowed is None else tuple(k for k in CROSSINGS if k in allowed[r][col])
        for r, col in cells
    ]
    for kinds in itertools.product(*options):
        for (r, col), k in zip(cells, kinds):
            rows[r][col] = k
        yield KnotMosaic._trusted(tuple(tuple(row) for row in rows))


def generate(c: SearchConstraints) -> Iterator[KnotMosaic]:
    """Stream the suitably connected ``c.size``-mosaics meeting ``c``, in deterministic order."""
    for shadow in generate_shadows(c):
        for m in expand_crossings(shadow, c.allowed):
            if c.canonical and not is_canonical(m):
                continue
            yield m


def count(c: SearchConstraints) -> int:
    """``len(list(generate(c)))`` without building the mosaics when no filter needs them."""
    if c.needs_trace or c.canonical or c.allowed is not None:
        return sum(1 for _ in generate(c))
    return sum(1 << sum(len(r.crossings) for r in rows) for rows in generate_shadow_rows(c))


__all__ = [
    "SearchConstraints",
    "generate",
    "generate_shadows",
    "generate_shadow_rows",
    "expand_crossings",
    "count",
    "random_mosaic",
]


def random_mosaic(n: int, rng, max_tiles: int | None = None) -> KnotMosaic:
    """A random suitably connected ``n``-mosaic (not uniform over all of them).

    Rows are drawn one at a time among those that can still be closed off
    within the tile budget, so the walk never dead-ends.
    """
    cat = row_catalog(n)
    close = min_tiles_to_close(n)
    budget = n * n if max_tiles is None else max_tiles
    rows, mask, used = [], 0, 0
    for i in range(n):
        rest = n - i - 1
        options = [r for r in cat.get(mask, ()) if used + r.count + close[rest][r.bottom] <= budget]
        row = options[rng.randrange(len(options))]
        rows.append(tuple(CROSSINGS[rng.randrange(2)] if t.is_crossing else t for t in row.tiles))
        mask, used = row.bottom, used + row.count
    return KnotMosaic._trusted(tuple(rows))

"""Identification of whole shadow families and tile-number minimization per knot."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from knotile.enumerate.generate import SearchConstraints, generate_shadows
from knotile.family import ShadowFamily, resolution_classes, shadow_family
from knotile.invariants import (
    LINKS,
    UNKNOT,
    UNKNOWN,
    EMPTY,
    KnotTable,
    default_table,
    identify_polynomials,
    unlink_name,
)
from knotile.laurent import LaurentPoly
from knotile.tiles import CROSSINGS, KnotMosaic, canonical_form

log = logging.getLogger(__name__)

_UNLINK_RE = re.compile(r"0\^(\d+)_1$")


def family_identities(fam: ShadowFamily, table: KnotTable) -> list:
    """Identification of every resolution of ``fam`` (indexed like the family's arrays).

    Resolutions sharing a bracket and writhe share an identification, so each
    distinct pair is looked up once.
    """
    idents, inverse = family_classes(fam, table)
    return [idents[i] for i in inverse]


def family_classes(fam: ShadowFamily, table: KnotTable) -> tuple[list, np.ndarray]:
    """Identification per (bracket, writhe) class, and the class of each resolution."""
    comps = fam.trace.component_count
    first, inverse = resolution_classes(fam)
    idents = []
    for m in first:
        m = int(m)
        b = LaurentPoly(fam.bracket_terms(m))
        f = LaurentPoly(fam.jones_terms(m)) if comps == 1 else None
        idents.append(identify_polynomials(comps, b, f, table))
    return idents, inverse


def allowed_masks(fam: ShadowFamily, allowed) -> np.ndarray:
    """Resolution indices compatible with per-cell allowed kinds (all of them when ``allowed`` is None)."""
    masks = np.arange(len(fam))
    if allowed is None:
        return masks
    keep = np.ones(len(fam), dtype=bool)
    for i, (r, c) in enumerate(fam.cells):
        bit = (masks >> i) & 1
        for b, kind in enumerate(CROSSINGS):
            if kind not in allowed[r][c]:
                keep &= bit != b
    return masks[keep]


@dataclass
class Classified:
    mosaic: KnotMosaic
    tile_number: int
    components: int
    crossings: int
    identification: object


def classify(c: SearchConstraints, table: KnotTable | None = None) -> Iterator[Classified]:
    """Every mosaic meeting ``c`` together with its identification, shadow by shadow."""
    table = table if table is not None else default_table()
    for shadow in generate_shadows(c):
        fam = shadow_family(shadow)
        idents = family_identities(fam, table)
        tiles = sum(1 for row in shadow.grid for t in row if t)
        for m in allowed_masks(fam, c.allowed):
            mosaic = fam.mosaic(int(m))
            if c.canonical and canonical_form(mosaic) != mosaic:
                continue
            yield Classified(mosaic, tiles, fam.trace.component_count, fam.crossing_count, idents[m])


@dataclass(frozen=True)
class Target:
    """What a tile-number search is looking for."""

    name: str
    components: int
    min_crossings: int

    def matches(self, ident) -> bool:
        if isinstance(ident, str):
            return ident == self.name
        return any(name == self.name for name, _ in ident)


def resolve_target(name: str, table: KnotTable | None = None) -> Target:
    table = table if table is not None else default_table()
    if name == UNKNOT:
        return Target(UNKNOT, 1, 0)
    if name in table:
        return Target(name, 1, table[name].crossing_number)
    for link in LINKS:
        if link.name == name:
            return Target(name, link.components, link.pd.crossing_count)
    m = _UNLINK_RE.match(name)
    if m and int(m.group(1)) >= 2:
        return Target(name, int(m.group(1)), 0)
    raise KeyError(f"unknown knot {name!r}")


@dataclass
class SearchResult:
    knot: str
    size: int
    tile_number: int | None  # None: not realizable
    witness: KnotMosaic | None = None
    shadows_examined: int = 0

    @property
    def realizable(self) -> bool:
        return self.tile_number is not None


def _best_witness(found: Iterable[KnotMosaic]) -> KnotMosaic:
    return min((canonical_form(m) for m in found), key=lambda m: m.to_line())


def _matches_in(fam: ShadowFamily, target: Target, table: KnotTable, allowed=None) -> list[KnotMosaic]:
    if fam.trace.component_count != target.components:
        return []
    idents = family_identities(fam, table)
    return [fam.mosaic(int(m)) for m in allowed_masks(fam, allowed) if target.matches(idents[m])]


EXHAUSTIVE_MAX = 5


def min_tile_number(
    knot: str,
    n: int,
    table: KnotTable | None = None,
    layouts: Sequence | None = None,
) -> SearchResult:
    """Fewest non-blank tiles over ``n``-mosaics identifying as ``knot``.

    Boards up to 5 are searched exhaustively, raising the exact tile count one
    step at a time so the first hit is the minimum. A 6-board is only searched
    inside the given layouts (and their dihedral images).
    """
    table = table if table is not None else default_table()
    target = resolve_target(knot, table)
    if n > EXHAUSTIVE_MAX:
        if not layouts:
            raise ValueError(f"boards larger than {EXHAUSTIVE_MAX} need layouts to search")
        return _layout_minimum(target, n, table, layouts)
    examined = 0
    for t in range(n * n + 1):
        c = SearchConstraints(
            n, max_tiles=t, min_tiles=t,
            single_component=target.components == 1,
            min_crossings=target.min_crossings,
        )
        found = []
        for shadow in generate_shadows(c):
            examined += 1
            found += _matches_in(shadow_family(shadow), target, table)
        if found:
            return SearchResult(knot, n, t, _best_witness(found), examined)
    return SearchResult(knot, n, None, None, examined)


def _layout_minimum(target: Target, n: int, table: KnotTable, layouts) -> SearchResult:
    # the fills of a symmetric image of a layout are the images of its fills, so
    # canonical witnesses and minima come out the same without the orbit
    for layout in layouts:
        if layout.size != n:
            raise ValueError(f"layout {layout.name} is for a {layout.size}-board")
    best = layout_minima(layouts, table, components=target.components,
                         min_crossings=target.min_crossings).get(target.name)
    if best is None:
        return SearchResult(target.name, n, None)
    return SearchResult(target.name, n, best.tile_number, best.witness, best.shadows_examined)


@dataclass
class LayoutHit:
    tile_number: int
    witness: KnotMosaic | None
    crossing_counts: set[int]
    fills: int
    shadows_examined: int = 0


def _names(ident) -> list[str]:
    return [ident] if isinstance(ident, str) else [name for name, _ in ident]


def _wants_witness(name: str) -> bool:
    return name not in (UNKNOT, UNKNOWN, EMPTY) and not _UNLINK_RE.match(name)


def layout_minima(
    layouts, table: KnotTable | None = None, components: int = 1, min_crossings: int = 0,
) -> dict[str, LayoutHit]:
    """For each identified name, the least tile number among fills of ``layouts``.

    The hit records the crossing counts of every fill realizing that tile
    number and, for table knots and links, the canonical-least witness.
    """
    table = table if table is not None else default_table()
    # name -> [tile number, [(family, masks)], crossing counts, fills]
    raw: dict[str, list] = {}
    examined = 0
    for layout in layouts:
        c = SearchConstraints(layout.size, single_component=components == 1,
                              min_crossings=min_crossings, allowed=layout.allowed)
        for shadow in generate_shadows(c):
            examined += 1
            fam = shadow_family(shadow)
            if fam.trace.component_count != components:
                continue
            t = sum(1 for row in shadow.grid for x in row if x)
            idents, inverse = family_classes(fam, table)
            ok = allowed_masks(fam, layout.allowed)
            cls_of = inverse[ok]
            for k in np.unique(cls_of):
                masks = ok[cls_of == k]
                for name in _names(idents[k]):
                    cur = raw.get(name)
                    if cur is None or t < cur[0]:
                        raw[name] = cur = [t, [], set(), 0]
                    if t == cur[0]:
                        if _wants_witness(name):
                            cur[1].append((fam, masks))
                        cur[2].add(fam.crossing_count)
                        cur[3] += len(masks)
    out = {}
    for name, (t, groups, xs, fills) in sorted(raw.items()):
        witness = _best_witness(f.mosaic(int(m)) for f, ms in groups for m in ms) if groups else None
        out[name] = LayoutHit(t, witness, xs, fills, examined)
    return out


def knot_minima(c: SearchConstraints, table: KnotTable | None = None) -> dict[str, int]:
    """Smallest tile number at which each identified name occurs among mosaics meeting ``c``.

    Unidentified mosaics are tallied under ``"unknown"``.
    """
    out: dict[str, int] = {}
    table = table if table is not None else default_table()
    for shadow in generate_shadows(c):
        fam = shadow_family(shadow)
        t = sum(1 for row in shadow.grid for x in row if x)
        idents, inverse = family_classes(fam, table)
        for k in np.unique(inverse[allowed_masks(fam, c.allowed)]):
            for name in _names(idents[k]):
                if t < out.get(name, 1 << 30):
                    out[name] = t
    return out


@dataclass
class BoundsRow:
    knot: str
    mosaic_number: int
    tile_number: int
    lower: int
    upper: int

    @property
    def passed(self) -> bool:
        return self.lower <= self.tile_number <= self.upper


@dataclass
class BoundsReport:
    rows: list[BoundsRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_csv(self) -> str:
        lines = ["knot,mosaic_number,tile_number,lower,upper,status"]
        for r in self.rows:
            status = "pass" if r.passed else "fail"
            lines.append(f"{r.knot},{r.mosaic_number},{r.tile_number},{r.lower},{r.upper},{status}")
        return "\n".join(lines) + "\n"


def tile_bounds(m: int) -> tuple[int, int]:
    """Lower and upper tile-number bounds for a prime knot of mosaic number ``m``."""
    if m < 4:
        raise ValueError("the bounds apply from mosaic number 4 on")
    return 5 * m - 8, m * m - (4 if m % 2 == 0 else 8)


def verify_bounds(results: Iterable[tuple[str, int, int]]) -> BoundsReport:
    report = BoundsReport()
    for knot, m, t in results:
        lo, hi = tile_bounds(m)
        report.rows.append(BoundsRow(knot, m, t, lo, hi))
    return report


__all__ = [
    "BoundsReport",
    "BoundsRow",
    "Classified",
    "SearchResult",
    "Target",
    "allowed_masks",
    "classify",
    "family_identities",
    "knot_minima",
    "layout_minima",
    "LayoutHit",
    "family_classes",
    "min_tile_number",
    "resolve_target",
    "tile_bounds",
    "verify_bounds",
    "UNKNOWN",
    "unlink_name",
]

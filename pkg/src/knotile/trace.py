"""Follow the curves of a knot mosaic and extract its planar diagram."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from knotile.tiles import (
    SIDE_STEP,
    SIDE_VECTOR,
    EdgeSide,
    KnotMosaic,
    Mosaic,
    NotSuitablyConnected,
    TileKind,
    is_suitably_connected,
)

Crossing = tuple[int, int, int, int]

_CCW_NEXT = {EdgeSide.TOP: EdgeSide.LEFT, EdgeSide.LEFT: EdgeSide.BOTTOM,
             EdgeSide.BOTTOM: EdgeSide.RIGHT, EdgeSide.RIGHT: EdgeSide.TOP}


class PDFormatError(ValueError):
    pass


@dataclass(frozen=True)
class PlanarDiagram:
    """Crossings as ``X(a, b, c, d)``: arc labels counterclockwise from the incoming under-strand.

    ``components`` lists, for each component that passes through a crossing, its
    arc labels in the direction of travel. Crossing-free circles carry no labels
    and are only counted in ``free_loops``. ``signs`` holds the crossing signs
    for the chosen orientation, or is ``None`` when they cannot be recovered
    from the labels alone.
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...] = ()
    free_loops: int = 0
    signs: tuple[int, ...] | None = None

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_loops

    @property
    def labels(self) -> list[int]:
        return sorted({a for x in self.crossings for a in x})

    def validate(self) -> None:
        counts: dict[int, int] = {}
        for x in self.crossings:
            if len(x) != 4:
                raise PDFormatError(f"crossing {x} does not have four arcs")
            for a in x:
                counts[a] = counts.get(a, 0) + 1
        bad = sorted(a for a, k in counts.items() if k != 2)
        if bad:
            raise PDFormatError(f"arc labels {bad} do not appear exactly twice")
        if self.signs is not None and len(self.signs) != len(self.crossings):
            raise PDFormatError("one sign per crossing required")

    def mirror(self) -> PlanarDiagram:
        """Diagram with every crossing switched (the mirror image)."""
        if self.signs is None:
            raise ValueError("mirror needs crossing signs to find the over-strand direction")
        out = []
        for (a, b, c, d), s in zip(self.crossings, self.signs):
            # positive: over strand runs d -> b, so d becomes the incoming under-arc
            out.append((d, a, b, c) if s > 0 else (b, c, d, a))
        return PlanarDiagram(tuple(out), self.components, self.free_loops,
                             tuple(-s for s in self.signs))

    def to_text(self) -> str:
        return ",".join("X({},{},{},{})".format(*x) for x in self.crossings)

    @classmethod
    def from_text(cls, text: str, free_loops: int = 0) -> PlanarDiagram:
        """Parse ``X(a,b,c,d),...``; orientation is read off consecutive arc labels."""
        text = text.strip()
        crossings = []
        if text:
            for m in re.finditer(r"X\s*[\(\[]\s*([^\)\]]*)[\)\]]", text):
                try:
                    crossings.append(tuple(int(v) for v in m.group(1).split(",")))
                except ValueError as exc:
                    raise PDFormatError(f"bad crossing {m.group(0)!r}") from exc
            leftover = re.sub(r"X\s*[\(\[][^\)\]]*[\)\]]", "", text).replace(",", "").strip()
            if leftover or not crossings:
                raise PDFormatError(f"cannot parse PD code {text!r}")
        pd = cls(tuple(crossings), free_loops=free_loops)
        pd.validate()
        comps = _components_from_labels(pd.crossings)
        signs = _signs_from_labels(pd.crossings, comps)
        return cls(pd.crossings, comps, free_loops, signs)


def _components_from_labels(crossings) -> tuple[tuple[int, ...], ...]:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, d in crossings:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    groups: dict[int, list[int]] = {}
    for a in sorted(parent):
        groups.setdefault(find(a), []).append(a)
    return tuple(sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0]))


def _signs_from_labels(crossings, comps) -> tuple[int, ...] | None:
    succ = {}
    for comp in comps:
        for i, a in enumerate(comp):
            succ[a] = comp[(i + 1) % len(comp)]
    signs = []
    for a, b, c, d in crossings:
        fwd, back = succ[d] == b, succ[b] == d
        if fwd == back:
            return None
        signs.append(1 if fwd else -1)
    return tuple(signs)


@dataclass(frozen=True)
class TraceResult:
    diagram: PlanarDiagram
    component_count: int
    crossing_count: int
    paths: tuple[tuple[tuple[int, int], ...], ...]
    # number of crossing passes on each path, aligned with ``paths``
    passes: tuple[int, ...] = field(default=())
    crossing_cells: tuple[tuple[int, int], ...] = field(default=())


def _walk(grid, start_r, start_c, in_side, visited):
    """Follow one closed curve; return the list of (row, col, in_side, out_side)."""
    visits = []
    r, c, side = start_r, start_c, in_side
    while True:
        tile = grid[r][c]
        out = tile.partner(side)
        visited.add((r, c, side))
        visited.add((r, c, out))
        visits.append((r, c, side, out))
        dr, dc = SIDE_STEP[out]
        r, c, side = r + dr, c + dc, out.opposite
        if (r, c, side) == (start_r, start_c, in_side):
            return visits


def trace(m: Mosaic) -> TraceResult:
    """Trace every closed curve of a suitably connected mosaic.

    Components are discovered in row-major order of their first tile; each is
    oriented in the direction it is first walked, entering its first tile
    through the lowest-valued free edge of the first strand there.
    """
    if not isinstance(m, KnotMosaic) and not is_suitably_connected(m):
        raise NotSuitablyConnected(m.to_line())
    grid = m.grid
    n = m.size
    crossing_index = {}
    for r in range(n):
        for c in range(n):
            if grid[r][c] >= TileKind.CROSS_A:
                crossing_index[(r, c)] = len(crossing_index)
    # per crossing: side -> label, plus the under-strand entry/exit and over exit
    side_labels: list[dict[EdgeSide, int]] = [{} for _ in crossing_index]
    under_in: list[EdgeSide | None] = [None] * len(crossing_index)
    under_out: list[EdgeSide | None] = [None] * len(crossing_index)
    over_out: list[EdgeSide | None] = [None] * len(crossing_index)

    visited: set = set()
    components: list[tuple[int, ...]] = []
    paths = []
    passes = []
    free = 0
    next_label = 1
    for r in range(n):
        for c in range(n):
            tile = grid[r][c]
            for a, b in tile.strands:
                if (r, c, a) in visited:
                    continue
                start = min(a, b)
                visits = _walk(grid, r, c, start, visited)
                paths.append(tuple((vr, vc) for vr, vc, _, _ in visits))
                crossing_visits = [v for v in visits if grid[v[0]][v[1]] >= TileKind.CROSS_A]
                passes.append(len(crossing_visits))
                if not crossing_visits:
                    free += 1
                    continue
                k = len(crossing_visits)
                base = next_label
                next_label += k
                components.append(tuple(range(base, base + k)))
                for j, (vr, vc, s_in, s_out) in enumerate(crossing_visits):
                    x = crossing_index[(vr, vc)]
                    side_labels[x][s_in] = base + j
                    side_labels[x][s_out] = base + (j + 1) % k
                    over = grid[vr][vc].strands[0]
                    if s_in in over:
                        over_out[x] = s_out
                    else:
                        under_in[x] = s_in
                        under_out[x] = s_out

    crossings = []
    signs = []
    for x in range(len(crossing_index)):
        s = under_in[x]
        order = [s]
        for _ in range(3):
            order.append(_CCW_NEXT[order[-1]])
        crossings.append(tuple(side_labels[x][side] for side in order))
        ox, oy = SIDE_VECTOR[over_out[x]]
        ux, uy = SIDE_VECTOR[under_out[x]]
        signs.append(1 if ox * uy - oy * ux > 0 else -1)
    pd = PlanarDiagram(tuple(crossings), tuple(components), free, tuple(signs))
    return TraceResult(
        diagram=pd,
        component_count=len(paths),
        crossing_count=len(crossing_index),
        paths=tuple(paths),
        passes=tuple(passes),
        crossing_cells=tuple(crossing_index),
    )


def component_count(m: Mosaic) -> int:
    """Number of closed curves, without building the diagram."""
    grid = m.grid
    visited: set = set()
    count = 0
    for r, row in enumerate(grid):
        for c, tile in enumerate(row):
            for a, _ in tile.strands:
                if (r, c, a) not in visited:
                    _walk(grid, r, c, a, visited)
                    count += 1
    return count


def split_trivial_components(t: TraceResult) -> list[tuple[tuple[int, int], ...]]:
    """Paths of the components that meet no crossing."""
    return [p for p, k in zip(t.paths, t.passes) if k == 0]


def nugatory_crossings(d: PlanarDiagram) -> list[int]:
    """Indices of crossings that are cut vertices of the projection graph.

    Each crossing is cut open into four stubs; it is nugatory when the stubs
    fall into more than one connected piece of what remains.
    """
    ends: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(d.crossings):
        for pos, a in enumerate(x):
            ends.setdefault(a, []).append((i, pos))
    out = []
    for v in range(d.crossing_count):
        parent: dict = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def node(end):
            i, pos = end
            return ("stub", pos) if i == v else ("x", i)

        for (e1, e2) in ends.values():
            parent[find(node(e1))] = find(node(e2))
        roots = {find(("stub", pos)) for pos in range(4)}
        if len(roots) > 1:
            out.append(v)
    return out


def is_reduced(d: PlanarDiagram) -> bool:
    return not nugatory_crossings(d)


def writhe(d: PlanarDiagram) -> int:
    if d.signs is None:
        raise ValueError("diagram has no orientation data")
    return sum(d.signs)


__all__ = [
    "PlanarDiagram",
    "PDFormatError",
    "TraceResult",
    "trace",
    "component_count",
    "split_trivial_components",
    "nugatory_crossings",
    "is_reduced",
    "writhe",
]

"""Text and SVG drawings of mosaics."""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

from knotile.tiles import EdgeSide, Mosaic, TileKind

# 3x3 character cell per tile; under-strands of crossings are drawn with a gap
_ASCII = {
    TileKind.BLANK: ("   ", "   ", "   "),
    TileKind.ARC_BL: ("   ", "─╮ ", " │ "),
    TileKind.ARC_BR: ("   ", " ╭─", " │ "),
    TileKind.ARC_TR: (" │ ", " ╰─", "   "),
    TileKind.ARC_TL: (" │ ", "─╯ ", "   "),
    TileKind.SEG_H: ("   ", "───", "   "),
    TileKind.SEG_V: (" │ ", " │ ", " │ "),
    TileKind.DOUBLE_A: (" ╰─", "─╮ ", " │ "),
    TileKind.DOUBLE_B: ("─╯ ", " ╭─", " │ "),
    TileKind.CROSS_A: (" ╵ ", "───", " ╷ "),
    TileKind.CROSS_B: (" │ ", "╴│╶", " │ "),
}


def render_ascii(m: Mosaic) -> str:
    lines = []
    for row in m.grid:
        for k in range(3):
            lines.append("".join(_ASCII[t][k] for t in row).rstrip())
    return "\n".join(lines) + "\n"


TILE_PX = 40
GAP_FRACTION = 0.15

# edge midpoints in tile-local coordinates (x right, y down), as fractions
_MID = {
    EdgeSide.TOP: (0.5, 0.0),
    EdgeSide.RIGHT: (1.0, 0.5),
    EdgeSide.BOTTOM: (0.5, 1.0),
    EdgeSide.LEFT: (0.0, 0.5),
}
# corner shared by the two edges of an arc
_CORNER = {
    frozenset((EdgeSide.BOTTOM, EdgeSide.LEFT)): (0.0, 1.0),
    frozenset((EdgeSide.BOTTOM, EdgeSide.RIGHT)): (1.0, 1.0),
    frozenset((EdgeSide.TOP, EdgeSide.RIGHT)): (1.0, 0.0),
    frozenset((EdgeSide.TOP, EdgeSide.LEFT)): (0.0, 0.0),
}


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _strand_path(x0: float, y0: float, a: EdgeSide, b: EdgeSide, under: bool) -> str:
    s = TILE_PX
    (ax, ay), (bx, by) = _MID[a], _MID[b]
    p = lambda fx, fy: f"{_fmt(x0 + fx * s)} {_fmt(y0 + fy * s)}"  # noqa: E731
    if a.opposite == b:
        if not under:
            return f"M {p(ax, ay)} L {p(bx, by)}"
        # two halves stopping short of the centre
        h = GAP_FRACTION / 2
        ux, uy = bx - ax, by - ay
        return (
            f"M {p(ax, ay)} L {p(0.5 - ux * h, 0.5 - uy * h)} "
            f"M {p(0.5 + ux * h, 0.5 + uy * h)} L {p(bx, by)}"
        )
    # quarter circle of radius half a tile around the shared corner
    r = _fmt(s / 2)
    cx, cy = _CORNER[frozenset((a, b))]
    sweep = 1 if (ax - cx) * (by - cy) - (ay - cy) * (bx - cx) > 0 else 0
    return f"M {p(ax, ay)} A {r} {r} 0 0 {sweep} {p(bx, by)}"


def render_svg(m: Mosaic, grid_lines: bool = True) -> str:
    """One ``<path>`` per strand; under-strands of crossings have a gap of 15% of the tile width."""
    n = m.size
    size = n * TILE_PX
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if grid_lines:
        out.append(
            f'<rect class="board" x="0" y="0" width="{size}" height="{size}" '
            'fill="white" stroke="#ccc"/>'
        )
    for r, c, t in m.cells():
        x0, y0 = c * TILE_PX, r * TILE_PX
        for i, (a, b) in enumerate(t.strands):
            under = t.is_crossing and i == 1
            d = _strand_path(x0, y0, a, b, under)
            out.append(
                f'<path d={quoteattr(d)} fill="none" stroke="black" stroke-width="3" '
                f'data-tile="{r},{c}"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def strand_count(m: Mosaic) -> int:
    return sum(len(t.strands) for _, _, t in m.cells())

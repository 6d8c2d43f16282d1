import pytest

from knotile.enumerate import SearchConstraints, generate
from knotile.enumerate.layouts import (
    BLANK_SLOT,
    FOUR_POINT_SLOT,
    SEVEN_BOARD_CONJECTURE,
    Layout,
    LayoutFormatError,
    LayoutSlot,
    bundled_layouts,
    canonical_layout,
    conjecture_report,
    fill_layout,
    layout_of,
    layout_orbit,
    layout_profiles,
    layouts_for,
    load_layout,
)
from knotile.enumerate.search import classify
from knotile.tiles import FOUR_POINT, SYMMETRIES, EdgeSide, Mosaic, TileKind, dihedral_transform

from conftest import fixture


def test_slot_tokens():
    assert FOUR_POINT_SLOT.token() == "789A:TRBL"
    assert BLANK_SLOT.token() == "0"
    assert LayoutSlot.parse("2:RB") == LayoutSlot.of([TileKind.ARC_BR])
    assert LayoutSlot.parse("56").edges == 0


def test_slot_validation():
    with pytest.raises(LayoutFormatError):
        LayoutSlot.parse("2:T")
    with pytest.raises(LayoutFormatError):
        LayoutSlot.parse("Z")
    with pytest.raises(LayoutFormatError):
        LayoutSlot.parse("9:X")
    with pytest.raises(ValueError):
        LayoutSlot(frozenset())


def test_layout_parse_errors():
    with pytest.raises(LayoutFormatError):
        Layout.parse("# nothing\n")
    with pytest.raises(LayoutFormatError):
        Layout.parse("0 0\n0\n")


def test_bundled_layouts():
    layouts = bundled_layouts()
    expected = {
        "four-12": (4, 12, 4),
        "five-17": (5, 17, 7),
        "six-22-staircase": (6, 22, 10),
        "six-22-diamond": (6, 22, 10),
        "six-24": (6, 24, 12),
        "six-27": (6, 27, 13),
        "six-32": (6, 32, 16),
    }
    assert {k: (v.size, v.tile_count, v.four_point_count) for k, v in layouts.items()} == expected
    for layout in layouts.values():
        assert Layout.parse(layout.to_text(), layout.name) == layout


def test_load_layout(tmp_path):
    assert load_layout("five-17") is bundled_layouts()["five-17"]
    path = tmp_path / "blank.layout"
    path.write_text("0 0\n0 0\n")
    assert load_layout(path).size == 2
    with pytest.raises(FileNotFoundError):
        load_layout("no-such-layout")


def test_layouts_for():
    assert [L.name for L in layouts_for(6, 22)] == ["six-22-diamond", "six-22-staircase"]
    assert len(layouts_for(6)) == 5


def test_blank_layout_fills_once():
    layout = Layout(3, tuple((BLANK_SLOT,) * 3 for _ in range(3)))
    assert list(fill_layout(layout)) == [Mosaic.blank(3)]


def test_fill_layout_size_mismatch():
    with pytest.raises(ValueError):
        list(fill_layout(bundled_layouts()["four-12"], SearchConstraints(5)))


def test_four_point_slots_range_over_four_kinds():
    layout = bundled_layouts()["four-12"]
    seen = set()
    for m in fill_layout(layout):
        assert layout.matches(m)
        seen |= {m.grid[1][1]}
    assert seen == set(FOUR_POINT)


def test_layout_symmetry():
    layout = bundled_layouts()["five-17"]
    for s in SYMMETRIES:
        image = layout.transformed(s)
        fills = {dihedral_transform(m, s) for m in fill_layout(layout)}
        assert fills == set(fill_layout(image))
    assert canonical_layout(layout) in layout_orbit(layout)


def test_layout_of_fixture():
    m = fixture("7_4-t17")
    layout = layout_of(m)
    assert layout.matches(m)
    assert canonical_layout(layout) == canonical_layout(bundled_layouts()["five-17"])


def test_five_board_layout_knots():
    c = SearchConstraints(5, single_component=True, require_reduced=True, allowed=bundled_layouts()["five-17"].allowed)
    names = set()
    for x in classify(c):
        if not isinstance(x.identification, str):
            names |= {n for n, _ in x.identification}
    assert {"4_1", "5_1", "5_2", "6_1", "6_2", "7_4"} <= names


def test_profiles():
    assert layout_profiles(5).tile_numbers == {17}
    assert layout_profiles(4).tile_numbers == {12}
    with pytest.raises(ValueError):
        layout_profiles(3)


def test_profile_render():
    report = layout_profiles(5)
    (grid,) = report.patterns[17][:1]
    text = report.render(grid)
    assert text.count("#") == 17
    assert len(text.splitlines()) == 5


def test_conjecture_report_is_labelled():
    report = conjecture_report(7)
    assert set(report.predicted) == set(SEVEN_BOARD_CONJECTURE)
    summary = report.summary()
    assert "conjectur" in summary.lower()
    if not report.consistent:
        assert "missing=" in summary and "extra=" in summary


def test_six_board_layouts_match_profiles():
    sizes = {L.tile_count for L in layouts_for(6)}
    assert sizes == layout_profiles(6).tile_numbers


def test_required_edges_everywhere():
    layout = bundled_layouts()["six-22-diamond"]
    for row in layout.slots:
        for slot in row:
            for k in slot.kinds:
                assert k.mask & slot.edges == slot.edges
    assert EdgeSide.TOP & FOUR_POINT_SLOT.edges

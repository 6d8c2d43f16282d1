import pytest
from hypothesis import given

from knotile.tiles import (
    SYMMETRIES,
    CapKind,
    EdgeSide,
    KnotMosaic,
    Mosaic,
    MosaicFormatError,
    NotSuitablyConnected,
    Symmetry,
    TileKind,
    canonical_form,
    column_counts,
    connection_points,
    dihedral_orbit,
    dihedral_transform,
    entry_points_between,
    find_caps,
    is_suitably_connected,
    occupied_spans,
    row_counts,
    tile_number_of_mosaic,
)

from conftest import fixture
from strategies import knot_mosaics, symmetries

T, R, B, L = EdgeSide.TOP, EdgeSide.RIGHT, EdgeSide.BOTTOM, EdgeSide.LEFT


def test_connection_points_examples():
    assert connection_points(TileKind.BLANK) == frozenset()
    assert connection_points(TileKind.ARC_BL) == {B, L}
    assert connection_points(TileKind.CROSS_A) == {T, R, B, L}


def test_connection_point_census():
    sizes = [len(connection_points(t)) for t in TileKind]
    assert sizes.count(0) == 1
    assert sizes.count(2) == 6
    assert sizes.count(4) == 4


def test_quarter_turn_cycles_sides():
    assert [T.rotated(k) for k in range(4)] == [T, L, B, R]
    assert all(s.rotated(4) == s for s in EdgeSide)


def test_tile_set_closed_under_symmetries():
    for s in SYMMETRIES:
        images = {s.tile(t) for t in TileKind}
        assert images == set(TileKind)
        for t in TileKind:
            assert {s.side(x) for x in connection_points(t)} == connection_points(s.tile(t))


def test_crossing_kinds_under_symmetry():
    quarter = Symmetry(1)
    mirror = Symmetry(0, True)
    assert quarter.tile(TileKind.CROSS_A) == TileKind.CROSS_B
    assert quarter.tile(TileKind.CROSS_B) == TileKind.CROSS_A
    # a planar reflection keeps a horizontal over-strand horizontal
    assert mirror.tile(TileKind.CROSS_A) == TileKind.CROSS_A
    # transposition (mirror then quarter turn) exchanges the two
    assert Symmetry(1, True).tile(TileKind.CROSS_A) == TileKind.CROSS_B


def test_hand_rotated_trefoil():
    # the 12-tile trefoil turned a quarter counterclockwise, drawn cell by cell
    m = fixture("trefoil-t12")
    assert m.to_line() == "0210/2A91/3984/0340"
    assert dihedral_transform(m, Symmetry(1)).to_line() == "0210/2A71/39A4/0340"


def test_symmetry_group():
    assert len(set(SYMMETRIES)) == 8
    for s in SYMMETRIES:
        for t in TileKind:
            assert s.inverse.tile(s.tile(t)) == t


def test_suitably_connected_examples():
    assert is_suitably_connected(Mosaic.parse("21/34"))
    assert is_suitably_connected(Mosaic.blank(4))
    assert not is_suitably_connected(Mosaic.parse("20/34"))
    with pytest.raises(NotSuitablyConnected):
        KnotMosaic.of(Mosaic.parse("20/34"))


def test_boundary_points_are_rejected():
    assert not is_suitably_connected(Mosaic.parse("5"))
    assert not is_suitably_connected(Mosaic.parse("06/06"))


def test_tile_numbers():
    assert tile_number_of_mosaic(Mosaic.blank(4)) == 0
    assert tile_number_of_mosaic(fixture("trefoil-t13-corner")) == 13
    assert tile_number_of_mosaic(fixture("trefoil-t12")) == 12


def test_entry_points(circle):
    assert entry_points_between(circle, "row", 0) == 2
    assert entry_points_between(circle, "col", 0) == 2
    assert entry_points_between(Mosaic.blank(3), "row", 1) == 0
    with pytest.raises(IndexError):
        entry_points_between(circle, "row", 1)
    with pytest.raises(ValueError):
        entry_points_between(circle, "diagonal", 0)


def test_occupied_spans(circle):
    assert occupied_spans(Mosaic.blank(3)) == (set(), set())
    assert occupied_spans(circle) == ({0, 1}, {0, 1})
    rows, cols = occupied_spans(fixture("4_1-t17"))
    assert rows == cols == set(range(5))


def test_find_caps(circle):
    assert find_caps(Mosaic.blank(3)) == []
    kinds = {(c.kind, c.position) for c in find_caps(circle)}
    # the circle is a cap seen from each of its four sides
    assert kinds == {
        (CapKind.TOP, (0, 0)),
        (CapKind.BOTTOM, (1, 0)),
        (CapKind.LEFT, (0, 0)),
        (CapKind.RIGHT, (0, 1)),
    }


def test_cap_feet():
    caps = [c for c in find_caps(fixture("trefoil-t12")) if c.kind == CapKind.TOP]
    assert [c.position for c in caps] == [(0, 1)]
    assert caps[0].feet == ((1, 1), (1, 2))


def test_parse_formats():
    text = "# comment\n21\n34\n"
    assert Mosaic.parse(text) == Mosaic.parse("21/34")
    assert Mosaic.parse("0a/00").grid[0][1] == TileKind.CROSS_B
    for bad in ("", "# only\n", "21/3", "21/3x", "212/34"):
        with pytest.raises(MosaicFormatError):
            Mosaic.parse(bad)


def test_row_and_column_counts():
    m = fixture("trefoil-t12")
    assert row_counts(m) == (2, 4, 4, 2)
    assert column_counts(m) == (2, 4, 4, 2)


def test_canonical_examples():
    blank = Mosaic.blank(3)
    assert canonical_form(blank) == blank
    assert canonical_form(Mosaic.parse("21/34")) == Mosaic.parse("21/34")


@given(knot_mosaics())
def test_roundtrip(m):
    assert Mosaic.parse(m.to_text()) == m
    assert Mosaic.parse(m.to_line()) == m


@given(knot_mosaics(), symmetries)
def test_symmetry_preserves_connectedness(m, s):
    img = dihedral_transform(m, s)
    assert is_suitably_connected(img)
    assert tile_number_of_mosaic(img) == tile_number_of_mosaic(m)
    assert dihedral_transform(img, s.inverse) == m


@given(knot_mosaics())
def test_four_quarter_turns(m):
    img = m
    for _ in range(4):
        img = dihedral_transform(img, Symmetry(1))
    assert img == m


@given(knot_mosaics(), symmetries)
def test_canonical_form_is_orbit_invariant(m, s):
    c = canonical_form(m)
    assert canonical_form(dihedral_transform(m, s)) == c
    assert canonical_form(c) == c
    assert c in dihedral_orbit(m)


@given(knot_mosaics())
def test_entry_points_even(m):
    for axis in ("row", "col"):
        for i in range(m.size - 1):
            assert entry_points_between(m, axis, i) % 2 == 0


@given(knot_mosaics())
def test_occupied_lines_hold_two_tiles(m):
    assert all(k != 1 for k in row_counts(m))
    assert all(k != 1 for k in column_counts(m))

import pytest
from hypothesis import assume, given

from knotile.tiles import KnotMosaic, Mosaic, TileKind, crossing_count, dihedral_transform
from knotile.trace import (
    PDFormatError,
    PlanarDiagram,
    component_count,
    is_reduced,
    nugatory_crossings,
    split_trivial_components,
    trace,
    writhe,
)

from conftest import fixture
from strategies import knot_mosaics, symmetries

RIGHT_TREFOIL = "X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)"


def test_circle(circle):
    t = trace(circle)
    assert (t.component_count, t.crossing_count) == (1, 0)
    assert split_trivial_components(t) == [t.paths[0]]
    assert is_reduced(t.diagram)
    assert writhe(t.diagram) == 0


def test_trefoil(trefoil):
    t = trace(trefoil)
    assert (t.component_count, t.crossing_count) == (1, 3)
    assert split_trivial_components(t) == []
    assert is_reduced(t.diagram)
    assert abs(writhe(t.diagram)) == 3


def test_two_components():
    t = trace(fixture("hopf-t12"))
    assert t.component_count == 2
    assert split_trivial_components(t) == []
    unlink = trace(fixture("unlink2-t7"))
    assert unlink.component_count == 2
    assert len(split_trivial_components(unlink)) == 2


def test_kink_is_not_reduced():
    t = trace(fixture("kink-t7"))
    assert t.crossing_count == 1
    assert nugatory_crossings(t.diagram) == [0]
    assert not is_reduced(t.diagram)


def test_pd_text_roundtrip():
    d = PlanarDiagram.from_text(RIGHT_TREFOIL)
    assert d.to_text() == RIGHT_TREFOIL
    assert d.component_count == 1
    # a cut-vertex oracle on this 3-vertex graph finds no cut vertex
    assert is_reduced(d)


def test_writhe_of_standard_trefoil():
    d = PlanarDiagram.from_text(RIGHT_TREFOIL)
    assert writhe(d) == 3
    assert writhe(d.mirror()) == -3


def test_pd_validation():
    with pytest.raises(PDFormatError):
        PlanarDiagram.from_text("X(1,2,3,4)")
    with pytest.raises(PDFormatError):
        PlanarDiagram.from_text("X(1,2,3)")
    with pytest.raises(PDFormatError):
        PlanarDiagram.from_text("Y(1,1,2,2)")


def test_trace_labels_appear_twice(trefoil):
    d = trace(trefoil).diagram
    d.validate()
    assert sorted(d.labels) == list(range(1, 7))


def test_every_tile_visited():
    m = fixture("7_4-t17")
    t = trace(m)
    seen = {cell for path in t.paths for cell in path}
    assert seen == {(r, c) for r, c, k in m.cells() if k != TileKind.BLANK}


@given(knot_mosaics())
def test_crossing_count_matches_tiles(m):
    t = trace(m)
    assert t.crossing_count == crossing_count(m) == t.diagram.crossing_count
    assert t.component_count == component_count(m)
    # each crossing tile is passed twice, once by each strand
    assert sum(t.passes) == 2 * t.crossing_count


@given(knot_mosaics())
def test_strand_ends_consumed(m):
    t = trace(m)
    steps = sum(len(p) for p in t.paths)
    strands = sum(len(k.strands) for _, _, k in m.cells())
    assert steps == strands


@given(knot_mosaics(), symmetries)
def test_symmetry_invariants(m, s):
    t, u = trace(m), trace(dihedral_transform(m, s))
    assert t.component_count == u.component_count
    assert is_reduced(t.diagram) == is_reduced(u.diagram)


@given(knot_mosaics())
def test_split_components_have_no_crossings(m):
    t = trace(m)
    split = split_trivial_components(t)
    assert set(split) <= set(t.paths)
    crossing_cells = {(r, c) for r, c, k in m.cells() if k.is_crossing}
    for path in t.paths:
        assert (path in split) == (not crossing_cells & set(path))


@given(knot_mosaics(max_size=4))
def test_writhe_independent_of_orientation(m):
    t = trace(m)
    if t.component_count != 1 or t.crossing_count == 0:
        return
    # reversing the only component keeps every crossing sign
    d = t.diagram
    rev = PlanarDiagram.from_text(_reversed_pd(d))
    # one- and two-arc components leave the direction unreadable from labels alone
    assume(rev.signs is not None)
    assert writhe(rev) == writhe(d)


def _reversed_pd(d: PlanarDiagram) -> str:
    labels = d.labels
    top = max(labels)
    # relabel arc k as top+1-k and rotate each record to start at the new incoming under-arc
    out = []
    for a, b, c, d_ in d.crossings:
        a, b, c, d_ = (top + 1 - x for x in (a, b, c, d_))
        out.append((c, d_, a, b))
    return ",".join("X({},{},{},{})".format(*x) for x in out)

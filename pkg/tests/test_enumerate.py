import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotile.enumerate import SearchConstraints, census, count, generate
from knotile.enumerate.census import transfer_matrix
from knotile.enumerate.generate import random_mosaic
from knotile.enumerate.search import classify
from knotile.tiles import (
    Mosaic,
    TileKind,
    canonical_form,
    crossing_count,
    dihedral_orbit,
    is_suitably_connected,
    tile_number_of_mosaic,
)
from knotile.trace import is_reduced, split_trivial_components, trace

from oracles import brute_force_mosaics


def all_of(n, **kw):
    return list(generate(SearchConstraints(n, **kw)))


def test_small_boards_against_brute_force():
    assert set(all_of(1)) == set(brute_force_mosaics(1)) == {Mosaic.blank(1)}
    two = all_of(2)
    assert set(two) == set(brute_force_mosaics(2))
    assert set(two) == {Mosaic.blank(2), Mosaic.parse("21/34")}


def test_census_small():
    assert [census(n) for n in (1, 2, 3, 4)] == [1, 2, 22, 2594]


def test_census_agrees_with_generate():
    for n in (1, 2, 3, 4):
        assert len(all_of(n)) == census(n) == count(SearchConstraints(n))


def test_census_range():
    with pytest.raises(ValueError):
        census(0)
    with pytest.raises(ValueError):
        census(9)


def test_transfer_matrix_parity():
    # an odd number of vertical connections can never cross a row boundary
    m = transfer_matrix(3)
    for top, row in enumerate(m):
        for bottom, ways in enumerate(row):
            if (bin(top).count("1") + bin(bottom).count("1")) % 2:
                assert ways == 0


def test_three_board_contents():
    kinds = Counter()
    for m in all_of(3):
        t = trace(m)
        kinds[(t.component_count, t.crossing_count)] += 1
    # only blanks, unknots and the two-component unlink
    assert set(kinds) <= {(0, 0), (1, 0), (1, 1), (2, 0), (2, 2)}
    for x in classify(SearchConstraints(3)):
        assert x.identification in ("empty", "unknot") or x.identification == [("0^2_1", False)]


def test_budget_pruning_is_monotone():
    for n in (3, 4):
        every = all_of(n)
        for t in (0, 4, 7, 9, 12):
            pruned = all_of(n, max_tiles=t)
            assert pruned == [m for m in every if tile_number_of_mosaic(m) <= t]


def test_min_tiles_filter():
    got = all_of(4, min_tiles=12, max_tiles=12)
    assert got and all(tile_number_of_mosaic(m) == 12 for m in got)


def test_filters_hold():
    c = SearchConstraints(4, single_component=True, forbid_split_trivial=True, require_reduced=True, min_crossings=2)
    got = list(generate(c))
    assert got
    rng = random.Random(7)
    for m in rng.sample(got, max(1, len(got) // 100)):
        assert is_suitably_connected(m)
        t = trace(m)
        assert t.component_count == 1
        assert not split_trivial_components(t)
        assert is_reduced(t.diagram)
        assert crossing_count(m) >= 2


def test_canonical_dedup():
    full = all_of(4, max_tiles=10)
    reps = all_of(4, max_tiles=10, canonical=True)
    assert len({canonical_form(m) for m in reps}) == len(reps)
    assert all(canonical_form(m) == m for m in reps)
    orbit_union = {img for m in reps for img in dihedral_orbit(m)}
    assert orbit_union == set(full)


def test_space_efficient_four_board_knots():
    c = SearchConstraints(4, max_tiles=12, single_component=True, min_crossings=2, require_reduced=True)
    names = set()
    for x in classify(c):
        ident = x.identification
        names |= {ident} if isinstance(ident, str) else {name for name, _ in ident}
    # reduced but non-alternating fills can still be unknots
    assert names == {"3_1", "unknot"}


def test_allowed_blank_only():
    blank = tuple(tuple(frozenset({TileKind.BLANK}) for _ in range(3)) for _ in range(3))
    assert all_of(3, allowed=blank) == [Mosaic.blank(3)]


def test_allowed_restricts_crossings():
    free = frozenset(TileKind)
    grid = [[free] * 4 for _ in range(4)]
    grid[1][1] = frozenset(TileKind) - {TileKind.CROSS_B}
    allowed = tuple(tuple(r) for r in grid)
    got = all_of(4, max_tiles=12, allowed=allowed)
    assert got == [m for m in all_of(4, max_tiles=12) if m.grid[1][1] != TileKind.CROSS_B]


def test_constraint_validation():
    with pytest.raises(ValueError):
        SearchConstraints(0)
    with pytest.raises(ValueError):
        SearchConstraints(4, max_tiles=-1)
    with pytest.raises(ValueError):
        SearchConstraints(3, allowed=((frozenset(),),))


@given(st.integers(1, 8), st.randoms(use_true_random=False), st.integers(0, 40))
def test_random_mosaic(n, rng, budget):
    m = random_mosaic(n, rng, max_tiles=budget)
    assert m.size == n
    assert is_suitably_connected(m)
    assert tile_number_of_mosaic(m) <= budget

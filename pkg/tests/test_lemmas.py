"""Structure properties over the complete sets of tile-minimal mosaics on 4- and 5-boards."""

import pytest

from knotile.tiles import Mosaic

from lemmas import CHECKS, MINIMAL, blank_corners, lemma_failures, minimal_sets, zero_two_four


@pytest.mark.parametrize("n", [4, 5])
def test_minimal_sets_nonempty(n):
    sets = minimal_sets(n)
    assert set(sets) == MINIMAL[n][0]


@pytest.mark.parametrize("n", [4, 5])
def test_structure_lemmas(n):
    assert lemma_failures(n) == []


def test_corners_hold_for_every_minimum():
    for n in (4, 5):
        for mosaics in minimal_sets(n).values():
            assert all(map(blank_corners, mosaics))


def test_checks_reject_counterexamples():
    # a long horizontal row of three tiles breaks the 0-2-4 rule
    m = Mosaic.parse("0000/2551/3554/0000")
    assert not zero_two_four(m)
    assert not CHECKS["blank corners"](Mosaic.parse("21/34"))

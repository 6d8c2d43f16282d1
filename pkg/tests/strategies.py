"""Hypothesis strategies for mosaics and diagrams."""

from __future__ import annotations

from hypothesis import strategies as st

from knotile.enumerate.generate import random_mosaic
from knotile.tiles import SYMMETRIES


@st.composite
def knot_mosaics(draw, min_size: int = 2, max_size: int = 5):
    n = draw(st.integers(min_size, max_size))
    rng = draw(st.randoms(use_true_random=False))
    return random_mosaic(n, rng)


symmetries = st.sampled_from(SYMMETRIES)


KNOTTED = (
    "trefoil-t12", "hopf-t14", "4_1-t17", "5_1-t17", "5_2-t17", "6_1-t17", "6_2-t17", "7_4-t17",
)


@st.composite
def knotted_mosaics(draw):
    """A knotted fixture with every crossing re-drawn at random, in a random orientation."""
    from knotile.tiles import CROSSINGS, KnotMosaic, dihedral_transform

    from conftest import fixture

    base = fixture(draw(st.sampled_from(KNOTTED)))
    rows = [[draw(st.sampled_from(CROSSINGS)) if t.is_crossing else t for t in row] for row in base.grid]
    m = KnotMosaic._trusted(tuple(map(tuple, rows)))
    return dihedral_transform(m, draw(symmetries))

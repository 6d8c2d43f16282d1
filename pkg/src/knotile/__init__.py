"""Knot mosaics: validation, tracing, invariants, simplification and tile-number search."""

from knotile.tiles import (
    Cap,
    CapKind,
    EdgeSide,
    KnotMosaic,
    Mosaic,
    Symmetry,
    TileKind,
    canonical_form,
    connection_points,
    dihedral_transform,
    entry_points_between,
    find_caps,
    is_suitably_connected,
    occupied_spans,
    tile_number_of_mosaic,
)

__version__ = "0.1.0"

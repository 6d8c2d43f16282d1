"""Brute-force reference: test every one of the ``11**(n*n)`` grids."""

from __future__ import annotations

import itertools

import numpy as np

from knotile.tiles import EdgeSide, Mosaic, TILES

_MASK = np.array([t.mask for t in TILES], dtype=np.uint8)


def _ok(cells: np.ndarray, n: int) -> np.ndarray:
    """Vectorized suitable-connectedness over a batch of flattened grids."""
    m = _MASK[cells]
    ok = np.ones(len(cells), dtype=bool)
    T, R, B, L = (int(s) for s in (EdgeSide.TOP, EdgeSide.RIGHT, EdgeSide.BOTTOM, EdgeSide.LEFT))
    for r in range(n):
        for c in range(n):
            x = m[:, r * n + c]
            if r == 0:
                ok &= (x & T) == 0
            if c == 0:
                ok &= (x & L) == 0
            if c == n - 1:
                ok &= (x & R) == 0
            else:
                ok &= ((x & R) > 0) == ((m[:, r * n + c + 1] & L) > 0)
            if r == n - 1:
                ok &= (x & B) == 0
            else:
                ok &= ((x & B) > 0) == ((m[:, (r + 1) * n + c] & T) > 0)
    return ok


def naive_mosaics(n: int, chunk_cells: int = 6) -> set[Mosaic]:
    """All suitably connected ``n``-mosaics by exhaustive filtering (no pruning)."""
    cells = n * n
    tail = min(cells, chunk_cells)
    head = cells - tail
    # every combination of the last `tail` cells, reused for each head prefix
    tail_grid = np.array(list(itertools.product(range(len(TILES)), repeat=tail)), dtype=np.uint8)
    found: set[Mosaic] = set()
    for prefix in itertools.product(range(len(TILES)), repeat=head):
        batch = np.empty((len(tail_grid), cells), dtype=np.uint8)
        batch[:, :head] = prefix
        batch[:, head:] = tail_grid
        for flat in batch[_ok(batch, n)]:
            found.add(Mosaic.from_rows(flat.reshape(n, n).tolist()))
    return found

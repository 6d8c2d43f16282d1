"""Transfer-matrix count of suitably connected boards.

Independent of the row catalogue used by :mod:`knotile.enumerate.generate`:
transitions are counted column by column straight from the tile masks.
"""

from __future__ import annotations

from functools import lru_cache

from knotile.enumerate.rows import MAX_SIZE
from knotile.tiles import EdgeSide, TILES


@lru_cache(maxsize=None)
def transfer_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """``M[top][bottom]``: number of tile rows with the given boundary patterns."""
    size = 1 << n
    matrix = [[0] * size for _ in range(size)]
    for top in range(size):
        # states: (right point pending, bottom mask so far) -> ways
        states = {(False, 0): 1}
        for c in range(n):
            want_top = bool(top >> c & 1)
            nxt: dict[tuple[bool, int], int] = {}
            for (pending, bottom), ways in states.items():
                for t in TILES:
                    m = t.mask
                    if bool(m & EdgeSide.TOP) != want_top or bool(m & EdgeSide.LEFT) != pending:
                        continue
                    key = (bool(m & EdgeSide.RIGHT), bottom | ((m & EdgeSide.BOTTOM) and 1 << c))
                    nxt[key] = nxt.get(key, 0) + ways
            states = nxt
        for (pending, bottom), ways in states.items():
            if not pending:
                matrix[top][bottom] += ways
    return tuple(tuple(r) for r in matrix)


def census(n: int) -> int:
    """Number of suitably connected ``n``-mosaics (all tiles, both crossing kinds)."""
    if not 1 <= n <= MAX_SIZE:
        raise ValueError(f"census supports 1 <= n <= {MAX_SIZE}")
    matrix = transfer_matrix(n)
    size = 1 << n
    vec = [0] * size
    vec[0] = 1
    for _ in range(n):
        vec = [sum(vec[a] * matrix[a][b] for a in range(size) if vec[a]) for b in range(size)]
    return vec[0]

"""Invariants for every crossing assignment of one crossing pattern at once.

A *shadow* fixes where the crossings are but not which strand is on top. Its
``2**c`` resolutions share the loop counts of their smoothing states, so the
state sum can be reorganized: count the loops once per smoothing, then spread
the counts over all crossing assignments with a Walsh-Hadamard transform
(switching a crossing swaps which of its smoothings is the A one).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from knotile.tiles import CROSSINGS, KnotMosaic, Mosaic, TileKind
from knotile.trace import PlanarDiagram, TraceResult, trace


def state_loop_counts(d: PlanarDiagram) -> np.ndarray:
    """Loop count of every smoothing state; bit ``i`` set selects the B-smoothing of crossing ``i``."""
    c = d.crossing_count
    if c == 0:
        return np.array([d.free_loops], dtype=np.int64)
    labels = sorted({a for x in d.crossings for a in x})
    index = {a: i for i, a in enumerate(labels)}
    xs = np.array([[index[a] for a in x] for x in d.crossings], dtype=np.int64)
    n_states = 1 << c
    states = np.arange(n_states, dtype=np.int64)
    lab = np.tile(np.arange(len(labels), dtype=np.int64), (n_states, 1))
    rows = states
    bits = [(states >> i) & 1 for i in range(c)]
    while True:
        before = lab.copy()
        for i in range(c):
            a, b, cc, e = xs[i]
            bit = bits[i].astype(bool)
            for p, q in ((a, np.where(bit, e, b)), (cc, np.where(bit, b, e))):
                lp = lab[:, p]
                lq = lab[rows, q]
                m = np.minimum(lp, lq)
                # relabel whole classes so merges propagate transitively
                lab = np.where(lab == lp[:, None], m[:, None], lab)
                lab = np.where(lab == lq[:, None], m[:, None], lab)
        if np.array_equal(lab, before):
            break
    loops = (lab == np.arange(len(labels))[None, :]).sum(axis=1)
    return loops + d.free_loops


def _wht(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    rest = a.shape[1:]
    h = 1
    while h < n:
        v = a.reshape((n // (2 * h), 2, h) + rest)
        a = np.stack((v[:, 0] + v[:, 1], v[:, 0] - v[:, 1]), axis=1).reshape((n,) + rest)
        h *= 2
    return a


@lru_cache(maxsize=None)
def _krawtchouk(c: int) -> np.ndarray:
    """``K[w, k]`` = coefficient of ``x^k`` in ``(1+x)^(c-w) (1-x)^w``."""
    out = np.zeros((c + 1, c + 1), dtype=np.int64)
    for w in range(c + 1):
        for k in range(c + 1):
            out[w, k] = sum(
                comb(c - w, k - j) * comb(w, j) * (-1) ** j for j in range(0, min(w, k) + 1)
            )
    return out


def distance_profile(loops: np.ndarray, c: int) -> tuple[np.ndarray, int]:
    """``H[m, l, k]``: states ``u`` with ``loops[u] == l0 + l`` at Hamming distance ``k`` from ``m``."""
    n = 1 << c
    lo = int(loops.min())
    span = int(loops.max()) - lo + 1
    f = np.zeros((n, span), dtype=np.int64)
    f[np.arange(n), loops - lo] = 1
    fh = _wht(f)
    weights = np.array([bin(s).count("1") for s in range(n)], dtype=np.int64)
    g = fh[:, :, None] * _krawtchouk(c)[weights][:, None, :]
    h = _wht(g) // n
    return h, lo


@lru_cache(maxsize=None)
def _term_matrix(c: int, lo: int, span: int):
    """Coefficient vectors of ``A^(c-2k) delta^(l-1)`` over a shared exponent range."""
    terms = {}
    for li in range(span):
        j = lo + li - 1
        for k in range(c + 1):
            base = c - 2 * k
            vec = {}
            if j >= 0:
                for i in range(j + 1):
                    e = base + 2 * j - 4 * i
                    vec[e] = vec.get(e, 0) + (-1) ** j * comb(j, i)
            else:
                # only reachable for the empty diagram
                vec[base] = 1
            terms[(li, k)] = vec
    exps = sorted({e for v in terms.values() for e in v})
    emin = exps[0]
    width = exps[-1] - emin + 1
    mat = np.zeros((span, c + 1, width), dtype=np.int64)
    for (li, k), vec in terms.items():
        for e, v in vec.items():
            mat[li, k, e - emin] = v
    return mat, emin


@dataclass
class ShadowFamily:
    """Brackets and Jones polynomials of all resolutions of one shadow.

    Row ``m`` of the arrays corresponds to switching crossing ``i`` (in
    row-major cell order) to ``CROSS_B`` when bit ``i`` of ``m`` is set.
    """

    shadow: Mosaic
    trace: TraceResult
    cells: tuple[tuple[int, int], ...]
    bracket: np.ndarray  # (2**c, width) coefficients, exponent of column j is bracket_min + j
    bracket_min: int
    writhe: np.ndarray  # (2**c,)

    @property
    def crossing_count(self) -> int:
        return len(self.cells)

    def __len__(self):
        return 1 << len(self.cells)

    def mosaic(self, m: int) -> KnotMosaic:
        rows = [list(r) for r in self.shadow.grid]
        for i, (r, c) in enumerate(self.cells):
            rows[r][c] = CROSSINGS[m >> i & 1]
        return KnotMosaic._trusted(tuple(map(tuple, rows)))

    def bracket_terms(self, m: int) -> dict[int, int]:
        row = self.bracket[m]
        return {self.bracket_min + int(j): int(row[j]) for j in np.flatnonzero(row)}

    def jones_terms(self, m: int) -> dict[int, int]:
        w = int(self.writhe[m])
        sign = -1 if w % 2 else 1
        return {e - 3 * w: sign * v for e, v in self.bracket_terms(m).items()}


def shadow_family(shadow: Mosaic) -> ShadowFamily:
    """All ``2**c`` resolutions of ``shadow``; its crossing cells may hold either kind."""
    grid = [list(r) for r in shadow.grid]
    cells = tuple((r, c) for r, row in enumerate(grid) for c, t in enumerate(row) if t.is_crossing)
    for r, c in cells:
        grid[r][c] = TileKind.CROSS_A
    base = KnotMosaic._trusted(tuple(map(tuple, grid)))
    t = trace(base)
    d = t.diagram
    c = len(cells)
    # trace numbers crossings in row-major order, the same order as ``cells``
    loops = state_loop_counts(d)
    h, lo = distance_profile(loops, c)
    mat, emin = _term_matrix(c, lo, h.shape[1])
    coeffs = np.einsum("mlk,lke->me", h, mat)
    n = 1 << c
    signs = np.array(d.signs, dtype=np.int64)
    flips = ((np.arange(n)[:, None] >> np.arange(c)[None, :]) & 1) if c else np.zeros((1, 0), dtype=np.int64)
    writhe = (signs[None, :] * (1 - 2 * flips)).sum(axis=1) if c else np.zeros(1, dtype=np.int64)
    return ShadowFamily(base, t, cells, coeffs, emin, writhe)


def resolution_classes(fam: ShadowFamily) -> tuple[np.ndarray, np.ndarray]:
    """Group resolutions with equal (bracket, writhe); returns (representatives, inverse index)."""
    stacked = np.concatenate([fam.bracket, fam.writhe[:, None]], axis=1)
    _, first, inverse = np.unique(stacked, axis=0, return_index=True, return_inverse=True)
    return first, inverse.reshape(-1)

"""Vectorized twins of the scalar kernels, for grid sweeps and long row sums.

Same math as parity_core, expressed over numpy blocks. The scalar versions
stay the reference; tests pin these twins against them on overlapping ranges.
Block sizes are chosen so temporaries stay around tens of megabytes.
"""

from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from .errors import BoundExceeded
from .parity_core import DEFAULT_ORACLE_BOUND, Coeffs

# cells per broadcast block; 2^23 int64 cells is 64 MB per temporary
_BLOCK_CELLS = 1 << 23
_K_CHUNK = 1 << 16


def _f_block(c: Coeffs, top_n: np.ndarray, bot_k: np.ndarray) -> np.ndarray:
    """F evaluated elementwise on broadcastable int64 arrays of F-arguments."""
    a1, a2, a3, a4 = c
    top = a1 * top_n + a2 * bot_k
    bot = a3 * top_n + a4 * bot_k
    ok = (bot_k <= top_n) & (top >= 0) & (bot >= 0)
    mask = (bot & ~top) | (bot_k & ~top_n)
    return ((mask == 0) & ok).astype(np.int64)


def f_affine_grid(c: Coeffs, affine: tuple[int, int, int, int], bound: int) -> np.ndarray:
    """Grid of F(p*n+q, p2*k+q2) for 0 <= n, k <= bound, shape (bound+1, bound+1)."""
    p, q, p2, q2 = affine
    n = np.arange(bound + 1, dtype=np.int64)
    k = np.arange(bound + 1, dtype=np.int64)
    return _f_block(c, (p * n + q)[:, None], (p2 * k + q2)[None, :])


def f_grid(c: Coeffs, bound: int) -> np.ndarray:
    """Plain F(n, k) grid for 0 <= n, k <= bound."""
    return f_affine_grid(c, (1, 0, 1, 0), bound)


def row_sums_at(
    c: Coeffs,
    ns: np.ndarray | list[int],
    oracle_bound: int = DEFAULT_ORACLE_BOUND,
) -> np.ndarray:
    """sum_direct(c, n) for every n in ns, computed in numpy blocks."""
    ns = np.asarray(ns, dtype=np.int64)
    out = np.zeros(len(ns), dtype=np.int64)
    if len(ns) == 0:
        return out
    if int(ns.min()) < 0:
        raise ValueError("indices must be nonnegative")
    kmax = int(ns.max())
    if kmax > oracle_bound:
        raise BoundExceeded(f"n={kmax} exceeds oracle bound {oracle_bound}")
    row_block = max(1, _BLOCK_CELLS // min(kmax + 1, _K_CHUNK))
    for i in range(0, len(ns), row_block):
        rows = ns[i : i + row_block, None]
        for k0 in range(0, kmax + 1, _K_CHUNK):
            k = np.arange(k0, min(k0 + _K_CHUNK, kmax + 1), dtype=np.int64)[None, :]
            out[i : i + row_block] += _f_block(c, rows, k).sum(axis=1)
    return out


def row_sums(c: Coeffs, n_max: int, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> np.ndarray:
    """sum_direct(c, n) for all 0 <= n <= n_max."""
    return row_sums_at(c, np.arange(n_max + 1, dtype=np.int64), oracle_bound)


def parity_triangle_rows(num_rows: int) -> Iterator[int]:
    """Rows of Pascal's triangle mod 2, row n packed as an int (bit k = C(n,k) mod 2).

    Built by the carry-free doubling row ^= row << 1, which is exactly
    Pascal's rule with addition replaced by XOR.
    """
    row = 1
    for _ in range(num_rows):
        yield row
        row ^= row << 1

import logging
import numpy as np

from typing import Iterable

logger = logging.getLogger(__name__)


def gf2_rank(columns: Iterable[int]) -> int:
    """
    Rank over GF(2) of a matrix given as bit-packed columns.

    Parameters
    ----------
    columns: iterable of int
        Each column as an int whose bit i is the entry in row i

    Returns
    -------
        int
    """

    pivots = {}
    for column in columns:
        while column:
            top = column.bit_length() - 1
            if top not in pivots:
                pivots[top] = column
                break
            column ^= pivots[top]
    return len(pivots)


def gf2_rank_dense(matrix) -> int:
    """
    Rank over GF(2) of a dense 0/1 matrix by row echelon reduction.

    Parameters
    ----------
    matrix: array_like
        Two-dimensional array of 0/1 entries

    Returns
    -------
        int
    """

    m = np.array(matrix, dtype=np.uint8) % 2
    if m.ndim != 2:
        raise ValueError(f"Expected a two-dimensional matrix, got shape {m.shape}")

    n_rows, n_cols = m.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        candidates = np.nonzero(m[rank:, col])[0]
        if len(candidates) == 0:
            continue
        pivot = rank + candidates[0]
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        hits = np.nonzero(m[:, col])[0]
        for row in hits:
            if row != rank:
                m[row] ^= m[rank]
        rank += 1
    return rank

"""Exact rank of integer matrices by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from typing import Sequence


def rank_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, computed with Python integers only.

    Every division is exact: after step ``k`` each entry is a ``(k+1)``-minor
    of the input, so no fractions or modular reductions are involved.
    """
    rows = [[int(x) for x in r] for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    nrows = len(rows)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[col]
        tail = prow[col + 1 :]
        for r in range(rank + 1, nrows):
            row = rows[r]
            f = row[col]
            if f:
                row[col + 1 :] = [(p * x - f * y) // prev for x, y in zip(row[col + 1 :], tail)]
            else:
                row[col + 1 :] = [(p * x) // prev for x in row[col + 1 :]]
            row[col] = 0
        prev = p
        rank += 1
    return rank

"""Brute-force reference implementations used to cross-check the fast paths.

Nothing here shares code with the search kernels it checks: containment is
decided by walking every row injection and every column injection, and
extremal values by enumerating every column set.
"""
from __future__ import annotations

from itertools import combinations, permutations

from .matrix import BitMatrix


def naive_contains(F: BitMatrix, A: BitMatrix, mode: str = "berge") -> bool:
    k, l = F.rows, F.ncols
    if k > A.rows or l > A.ncols:
        return False
    Frows = F.to_rows()
    Arows = A.to_rows()
    for rows in permutations(range(A.rows), k):
        for cols in permutations(range(A.ncols), l):
            ok = True
            for i, r in enumerate(rows):
                for j, a in enumerate(cols):
                    f, x = Frows[i][j], Arows[r][a]
                    if (mode == "berge" and f == "1" and x == "0") or (mode == "config" and f != x):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


def naive_bh(F: BitMatrix, m: int) -> int:
    """Largest simple m-rowed matrix with no Berge copy of F, by exhaustive search.

    Only for m <= 3 (2^8 column sets).
    """
    if m > 3:
        raise ValueError("naive_bh enumerates 2^(2^m) sets; m <= 3 only")
    universe = range(1 << m)
    for size in range(1 << m, -1, -1):
        for cols in combinations(universe, size):
            if not naive_contains(F, BitMatrix(m, cols)):
                return size
    return 0

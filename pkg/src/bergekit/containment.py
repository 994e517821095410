"""Berge-hypergraph (F << A) and configuration (F < A) containment.

Rows of F are assigned to distinct rows of A one at a time.  For every
column j of F we keep ``cand[j]``, the bitmask of A-columns that still agree
with the rows assigned so far.  A partial assignment survives only if the
columns of F can be matched to distinct A-columns inside their candidate
sets, so dead branches are cut as soon as Hall's condition breaks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .matrix import BitMatrix, popcount, repeat

Mode = Literal["berge", "config"]


@dataclass(frozen=True)
class Embedding:
    """Row injection rows(F) -> rows(A) plus column injection cols(F) -> cols(A)."""

    row_map: tuple[int, ...]
    col_map: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"row_map": list(self.row_map), "col_map": list(self.col_map)}


def _augment(j, cand, owner, assign, visited):
    free = cand[j] & ~visited[0]
    while free:
        low = free & -free
        visited[0] |= low
        a = low.bit_length() - 1
        o = owner.get(a)
        if o is None or _augment(o, cand, owner, assign, visited):
            owner[a] = j
            assign[j] = a
            return True
        free = cand[j] & ~visited[0]
    return False


def perfect_matching(cand: list[int]) -> list[int] | None:
    """Match every left vertex j into a distinct bit of ``cand[j]``.

    Kuhn's augmenting paths; lowest column index tried first so the result
    is reproducible.  Returns the assignment or None when none is perfect.
    """
    owner: dict[int, int] = {}
    assign = [-1] * len(cand)
    for j in range(len(cand)):
        if not _augment(j, cand, owner, assign, [0]):
            return None
    return assign


def _search(F: BitMatrix, A: BitMatrix, exact: bool) -> Embedding | None:
    k, l = F.rows, F.ncols
    m, n = A.rows, A.ncols
    if k > m or l > n:
        return None
    rowmask = [0] * m
    for a, c in enumerate(A.cols):
        for r in range(m):
            if (c >> r) & 1:
                rowmask[r] |= 1 << a
    frows = [[j for j, c in enumerate(F.cols) if (c >> i) & 1] for i in range(k)]
    asum = [popcount(x) for x in rowmask]

    def compatible(i, r):
        if asum[r] < len(frows[i]):
            return False
        return not exact or n - asum[r] >= l - len(frows[i])

    # In Berge mode a zero row of F places no constraint: fill those last.
    order = [i for i in range(k) if frows[i] or exact] + [i for i in range(k) if not frows[i] and not exact]
    n_search = sum(1 for i in range(k) if frows[i] or exact)
    compat = [[compatible(i, r) for r in range(m)] for i in range(k)]
    allcols = (1 << n) - 1
    row_map = [-1] * k

    def dfs(pos, cand, used):
        if pos == n_search:
            assign = perfect_matching(cand)
            if assign is None:
                return None
            free = [r for r in range(m) if not (used >> r) & 1]
            for i, r in zip(order[pos:], free):
                row_map[i] = r
            return Embedding(tuple(row_map), tuple(assign))
        i = order[pos]
        fi = frows[i]
        for r in range(m):
            if (used >> r) & 1 or not compat[i][r]:
                continue
            rm = rowmask[r]
            new = list(cand)
            ok = True
            if exact:
                inv = ~rm
                fset = set(fi)
                for j in range(l):
                    new[j] &= rm if j in fset else inv
                    if not new[j]:
                        ok = False
                        break
            else:
                for j in fi:
                    new[j] &= rm
                    if not new[j]:
                        ok = False
                        break
            if not ok or perfect_matching(new) is None:
                continue
            row_map[i] = r
            found = dfs(pos + 1, new, used | (1 << r))
            if found is not None:
                return found
        return None

    return dfs(0, [allcols] * l, 0)


def berge_contains(F: BitMatrix, A: BitMatrix) -> Embedding | None:
    """Witness that F is a Berge hypergraph of A, or None."""
    return _search(F, A, exact=False)


def config_contains(F: BitMatrix, A: BitMatrix) -> Embedding | None:
    """Witness that F is a configuration of A (0s must match too), or None."""
    return _search(F, A, exact=True)


def contains(F: BitMatrix, A: BitMatrix, mode: Mode = "berge") -> Embedding | None:
    if mode == "berge":
        return berge_contains(F, A)
    if mode == "config":
        return config_contains(F, A)
    raise ValueError(f"unknown mode {mode!r}")


def contains_t_fold(F: BitMatrix, t: int, A: BitMatrix) -> bool:
    """Whether t·F << A."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return berge_contains(repeat(F, t), A) is not None


def verify_embedding(F: BitMatrix, A: BitMatrix, e: Embedding, mode: Mode = "berge") -> bool:
    rm, cm = e.row_map, e.col_map
    if len(rm) != F.rows or len(cm) != F.ncols:
        return False
    if len(set(rm)) != len(rm) or len(set(cm)) != len(cm):
        return False
    if any(not 0 <= r < A.rows for r in rm) or any(not 0 <= a < A.ncols for a in cm):
        return False
    for j, a in enumerate(cm):
        for i, r in enumerate(rm):
            f = F.entry(i, j)
            x = A.entry(r, a)
            if mode == "berge" and f and not x:
                return False
            if mode == "config" and f != x:
                return False
    return True

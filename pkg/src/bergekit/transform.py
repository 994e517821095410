"""Down-shifting T_i, the downset normalisation T(A), and support pruning."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .matrix import BitMatrix, is_simple, mask, popcount


@dataclass(frozen=True)
class Downset:
    """A subset-closed family of subsets of ``range(universe_size)``."""

    universe_size: int
    members: frozenset[int]

    def __post_init__(self):
        for s in self.members:
            sub = s
            while sub:
                low = sub & -sub
                if s ^ low not in self.members:
                    raise ValueError(f"family is not closed under subsets at {s:#x}")
                sub ^= low

    def to_matrix(self) -> BitMatrix:
        return BitMatrix(self.universe_size, tuple(sorted(self.members, key=lambda s: (popcount(s), s))))

    def __len__(self) -> int:
        return len(self.members)


def is_downset(A: BitMatrix) -> bool:
    present = set(A.cols)
    for c in present:
        sub = c
        while sub:
            low = sub & -sub
            if c ^ low not in present:
                return False
            sub ^= low
    return True


def shift_row(A: BitMatrix, i: int) -> BitMatrix:
    """T_i: clear row ``i`` in each column unless that would duplicate a column.

    Single left-to-right pass, checking against the current column set.
    """
    if not is_simple(A):
        raise ValueError("shift_row needs a simple matrix")
    if not 0 <= i < A.rows:
        raise IndexError(f"row {i} out of range")
    bit = 1 << i
    present = set(A.cols)
    out = []
    for c in A.cols:
        if c & bit and (c ^ bit) not in present:
            present.discard(c)
            present.add(c ^ bit)
            out.append(c ^ bit)
        else:
            out.append(c)
    return BitMatrix(A.rows, tuple(out))


def shift_fixpoint_matrix(A: BitMatrix) -> BitMatrix:
    """Sweep T_0, T_1, ..., T_{m-1} until a full sweep changes nothing."""
    cur = A
    while True:
        before = cur
        for i in range(cur.rows):
            cur = shift_row(cur, i)
        if cur == before:
            return cur


def shift_fixpoint(A: BitMatrix) -> Downset:
    B = shift_fixpoint_matrix(A)
    return Downset(B.rows, frozenset(B.cols))


def prune_support_columns(A: BitMatrix, supports: Iterable[Iterable[int] | int], c: int) -> BitMatrix:
    """Delete columns until every support S is covered by 0 or more than ``c`` columns.

    A support given as an int is taken as a row mask.
    """
    sups: Sequence[int] = [s if isinstance(s, int) else mask(s) for s in supports]
    cols = list(A.cols)
    changed = True
    while changed:
        changed = False
        for S in sups:
            hits = [x for x in cols if x & S == S]
            if 0 < len(hits) <= c:
                cols = [x for x in cols if x & S != S]
                changed = True
    return BitMatrix(A.rows, tuple(cols))

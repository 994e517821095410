"""Exact extremal numbers at desk scale: Bh(m,F), forb(m,family) and f(F,P).

``solve_bh`` searches downsets only, which is enough because shifting turns
any F-avoiding simple matrix into an F-avoiding downset of the same size.
Candidate sets are decided in order of (size, colex); a set may be taken
only while every maximal proper subset is in, and excluding a set rules out
all its supersets.  The search state is the family itself as a bitset over
the 2^m subsets.

Avoidance inside the downset search uses a Hall-condition kernel: for every
row injection of F the images of its columns form a "pattern" of supports,
and the pattern embeds in a family D iff for every group J of its columns
at least |J| members of D contain one of the supports in J.  The
``unrestricted`` and ``forb`` solvers instead call the matching-based
containment routines, so the two routes stay independent.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Sequence

from .containment import berge_contains, config_contains
from .matrix import BitMatrix, popcount

DOWNSET_MAX_M = 6
UNRESTRICTED_MAX_M = 4
RELATIVE_MAX_COLS = 24


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: BitMatrix
    nodes: int
    mode: str

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": {"rows": self.witness.rows, "columns": self.witness.to_literal()},
            "nodes": self.nodes,
            "mode": self.mode,
        }


def _layer_order(m: int) -> list[int]:
    return sorted(range(1 << m), key=lambda s: (popcount(s), s))


def _up_masks(m: int) -> list[int]:
    """up[s] = bitset (over the 2^m subsets) of all supersets of s."""
    n = 1 << m
    up = []
    for s in range(n):
        b = 0
        for t in range(n):
            if t & s == s:
                b |= 1 << t
        up.append(b)
    return up


class HallKernel:
    """Decides F << D for families D of subsets of [m] given as bitsets."""

    def __init__(self, F: BitMatrix, m: int, up: Sequence[int] | None = None):
        self.m = m
        up = up if up is not None else _up_masks(m)
        nz = [i for i in range(F.rows) if any((c >> i) & 1 for c in F.cols)]
        col_rows = [[nz.index(i) for i in range(F.rows) if (c >> i) & 1] for c in F.cols]
        patterns: set[tuple[int, ...]] = set()
        if m >= F.rows:
            for phi in permutations(range(m), len(nz)):
                pat = []
                for rows in col_rows:
                    u = 0
                    for r in rows:
                        u |= 1 << phi[r]
                    pat.append(u)
                patterns.add(tuple(sorted(pat)))
        self.constraints: list[list[tuple[int, int]]] = []
        self.by_set: list[list[int]] = [[] for _ in range(1 << m)]
        for pat in sorted(patterns):
            counts: dict[int, int] = {}
            for u in pat:
                counts[u] = counts.get(u, 0) + 1
            us = sorted(counts)
            need_by_mask: dict[int, int] = {}
            for J in range(1, 1 << len(us)):
                M = 0
                need = 0
                for b, u in enumerate(us):
                    if (J >> b) & 1:
                        M |= up[u]
                        need += counts[u]
                if need_by_mask.get(M, 0) < need:
                    need_by_mask[M] = need
            cons = sorted(need_by_mask.items(), key=lambda x: -x[1])
            idx = len(self.constraints)
            self.constraints.append(cons)
            trigger = 0
            for u in us:
                trigger |= up[u]
            for s in range(1 << m):
                if (trigger >> s) & 1:
                    self.by_set[s].append(idx)

    def _embeds(self, idx: int, D: int) -> bool:
        for M, need in self.constraints[idx]:
            if (D & M).bit_count() < need:
                return False
        return True

    def contains(self, D: int) -> bool:
        return any(self._embeds(i, D) for i in range(len(self.constraints)))

    def creates(self, D: int, s: int) -> bool:
        """Whether adding subset s to an F-free family D produces a copy of F."""
        D2 = D | (1 << s)
        return any(self._embeds(i, D2) for i in self.by_set[s])


def _family_matrix(m: int, D: int) -> BitMatrix:
    return BitMatrix(m, tuple(s for s in _layer_order(m) if (D >> s) & 1))


def solve_bh(F: BitMatrix, m: int) -> SolveResult:
    """Exact Bh(m,F) by branch and bound over downsets of 2^[m]."""
    if not 0 <= m <= DOWNSET_MAX_M:
        raise ValueError(f"downset solver supports 0 <= m <= {DOWNSET_MAX_M}, got m={m}")
    n = 1 << m
    order = _layer_order(m)
    up = _up_masks(m)
    kernel = HallKernel(F, m, up)
    suffix = [0] * (n + 1)
    for idx in range(n - 1, -1, -1):
        suffix[idx] = suffix[idx + 1] | (1 << order[idx])

    best = [-1, 0]
    nodes = 0

    def dfs(idx, D, size, killed):
        nonlocal nodes
        nodes += 1
        while idx < n and (killed >> order[idx]) & 1:
            idx += 1
        if idx == n:
            if size > best[0]:
                best[0], best[1] = size, D
            return
        if size + (suffix[idx] & ~killed).bit_count() <= best[0]:
            return
        s = order[idx]
        if not kernel.creates(D, s):
            dfs(idx + 1, D | (1 << s), size + 1, killed)
        dfs(idx + 1, D, size, killed | up[s])

    dfs(0, 0, 0, 0)
    return SolveResult(best[0], _family_matrix(m, best[1]), nodes, "downset")


def _search_all_sets(m: int, bad: Callable[[BitMatrix], bool], mode: str) -> SolveResult:
    """Largest set of distinct m-row columns for which ``bad`` stays false.

    ``bad`` must be monotone: once true for a column set, true for supersets.
    """
    order = _layer_order(m)
    n = len(order)
    best = [-1, ()]
    nodes = 0
    chosen: list[int] = []

    def dfs(idx):
        nonlocal nodes
        nodes += 1
        if len(chosen) + (n - idx) <= best[0]:
            return
        if idx == n:
            best[0], best[1] = len(chosen), tuple(chosen)
            return
        s = order[idx]
        chosen.append(s)
        if not bad(BitMatrix(m, tuple(chosen))):
            dfs(idx + 1)
        chosen.pop()
        dfs(idx + 1)

    dfs(0)
    return SolveResult(best[0], BitMatrix(m, best[1]), nodes, mode)


def solve_bh_unrestricted(F: BitMatrix, m: int) -> SolveResult:
    """Exact Bh(m,F) over all simple m-rowed matrices, no downset assumption."""
    if not 0 <= m <= UNRESTRICTED_MAX_M:
        raise ValueError(f"unrestricted solver supports m <= {UNRESTRICTED_MAX_M}, got m={m}")
    return _search_all_sets(m, lambda A: berge_contains(F, A) is not None, "unrestricted")


def solve_forb_family(family: Sequence[BitMatrix], m: int) -> SolveResult:
    """Exact forb(m, family): largest simple matrix with no member as a configuration."""
    if not 0 <= m <= UNRESTRICTED_MAX_M:
        raise ValueError(f"forb solver supports m <= {UNRESTRICTED_MAX_M}, got m={m}")
    fam = list(family)
    return _search_all_sets(
        m, lambda A: any(config_contains(B, A) is not None for B in fam), "forb"
    )


def solve_relative(F: BitMatrix, P: BitMatrix) -> SolveResult:
    """f(F,P): most columns of P whose submatrix has no Berge copy of F."""
    if P.ncols > RELATIVE_MAX_COLS:
        raise ValueError(f"relative solver supports at most {RELATIVE_MAX_COLS} columns of P")
    n = P.ncols
    best = [-1, ()]
    nodes = 0
    chosen: list[int] = []

    def dfs(idx):
        nonlocal nodes
        nodes += 1
        if len(chosen) + (n - idx) <= best[0]:
            return
        if idx == n:
            best[0], best[1] = len(chosen), tuple(chosen)
            return
        chosen.append(P.cols[idx])
        if berge_contains(F, BitMatrix(P.rows, tuple(chosen))) is None:
            dfs(idx + 1)
        chosen.pop()
        dfs(idx + 1)

    dfs(0)
    return SolveResult(best[0], BitMatrix(P.rows, best[1]), nodes, "relative")

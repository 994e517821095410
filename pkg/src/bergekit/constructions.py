"""Lower-bound constructions: identity products, the H matrices, exact extremals."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .graphs import chromatic_number, graph_of
from .matrix import (
    BitMatrix,
    K,
    concat,
    identity,
    ones,
    pad_rows,
    product,
    repeat,
    strict_subcolumns,
    zeros,
)


def part_sizes(p: int, m: int) -> list[int]:
    """Split m rows into p parts whose sizes differ by at most one."""
    q, r = divmod(m, p)
    return [q + 1 if i < r else q for i in range(p)]


def expand_product(p: int, m: int) -> BitMatrix:
    """p-fold product of identity matrices on near-equal parts of m rows."""
    if p < 1:
        raise ValueError("p must be at least 1")
    if m < p:
        raise ValueError(f"need m >= p, got m={m}, p={p}")
    return product(*(identity(a) for a in part_sizes(p, m)))


def make_H(p: int, k: int, t: int) -> BitMatrix:
    """H(p,k,t) = [1_p x I_{k-p} | t·[1_p x 0_{k-p} | (K_p minus 1_p) x [0_{k-p} I_{k-p}]]]."""
    if not 1 <= p < k or t < 1:
        raise ValueError(f"H(p,k,t) needs 1 <= p < k and t >= 1, got {(p, k, t)}")
    q = k - p
    head = product(ones(p), identity(q))
    kp = K(p)
    kp_minus_ones = BitMatrix(p, kp.cols[:-1])
    zero_and_id = BitMatrix(q, (0,) + identity(q).cols)
    block = concat(product(ones(p), zeros(q)), product(kp_minus_ones, zero_and_id))
    return concat(head, repeat(block, t))


def make_generalH(parts, t: int) -> BitMatrix:
    """H((a_1..a_s),t) = [I_{a_1} x ... x I_{a_s} | t·S(that product)]."""
    parts = list(parts)
    if not parts or any(a < 1 for a in parts) or t < 1:
        raise ValueError("generalH needs s >= 1, every a_i >= 1 and t >= 1")
    P = product(*(identity(a) for a in parts))
    return concat(P, repeat(strict_subcolumns(P), t))


def ik_extremal(k: int, m: int) -> BitMatrix:
    """K_{k-1} with m-k+1 zero rows appended: 2^{k-1} columns avoiding I_k."""
    if k < 1 or m < k - 1:
        raise ValueError(f"need k >= 1 and m >= k-1, got k={k}, m={m}")
    return pad_rows(K(k - 1), m - (k - 1))


def _low_columns(m: int) -> list[int]:
    return [0] + [1 << i for i in range(m)]


def g1_extremal(m: int) -> BitMatrix:
    """All columns of sum <= 1 plus floor(m/2) disjoint pairs."""
    if m < 2:
        raise ValueError("g1_extremal needs m >= 2")
    pairs = [(1 << 2 * i) | (1 << 2 * i + 1) for i in range(m // 2)]
    return BitMatrix(m, tuple(_low_columns(m) + pairs))


def h2_extremal(m: int) -> BitMatrix:
    """floor(m/3) disjoint triples, the three pairs under each, and all columns of sum <= 1."""
    if m < 3:
        raise ValueError("h2_extremal needs m >= 3")
    cols = _low_columns(m)
    for b in range(m // 3):
        x, y, z = (1 << 3 * b), (1 << 3 * b + 1), (1 << 3 * b + 2)
        cols += [x | y | z, x | y, x | z, y | z]
    return BitMatrix(m, tuple(cols))


def h8_extremal(m: int) -> BitMatrix:
    """The m-1 pairs through row 0 plus all columns of sum <= 1: 2m columns."""
    if m < 1:
        raise ValueError("h8_extremal needs m >= 1")
    return BitMatrix(m, tuple(_low_columns(m) + [1 | (1 << j) for j in range(1, m)]))


def c4free_in_product(m: int) -> BitMatrix:
    """Greedy C_4-free column selection from I_a x I_b (a bipartite graph with no 4-cycle).

    Edges are offered diagonal by diagonal, which spreads degrees evenly and
    reaches roughly (m/2)^(3/2) columns at desk-scale m.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    a, b = part_sizes(2, m)
    nbr_top = [0] * a
    nbr_bot = [0] * b
    cols = []
    for d in range(b):
        for u in range(a):
            v = (u + d) % b
            if any(nbr_top[u] & nbr_top[w] for w in range(a) if w != u and (nbr_bot[v] >> w) & 1):
                continue
            nbr_top[u] |= 1 << v
            nbr_bot[v] |= 1 << u
            cols.append((1 << u) | (1 << (a + v)))
    return BitMatrix(m, tuple(cols))


_CATALOG = {
    "zero": (lambda m: zeros(m), lambda m: 1),
    "empty": (lambda m: BitMatrix(m, ()), lambda m: 0),
    "g1": (g1_extremal, lambda m: 3 * m // 2 + 1),
    "h2": (h2_extremal, lambda m: 4 * (m // 3) + m + 1),
    "h8": (h8_extremal, lambda m: 2 * m),
    "c4free": (c4free_in_product, None),
}


@dataclass(frozen=True)
class ConstructionRecipe:
    """Symbolic construction, expandable at any m.

    kinds: ``IdentityProduct(p)``, ``HpktMatrix(p,k,t)``, ``GeneralH(parts,t)``,
    ``KcliqueConstant(k)`` and ``Catalog(name)``.
    """

    kind: str
    params: tuple = ()

    def expand(self, m: int) -> BitMatrix:
        if self.kind == "IdentityProduct":
            return expand_product(self.params[0], m)
        if self.kind == "HpktMatrix":
            H = make_H(*self.params)
            return pad_rows(H, m - H.rows)
        if self.kind == "GeneralH":
            H = make_generalH(*self.params)
            return pad_rows(H, m - H.rows)
        if self.kind == "KcliqueConstant":
            return ik_extremal(self.params[0], m)
        if self.kind == "Catalog":
            return _CATALOG[self.params[0]][0](m)
        raise ValueError(f"unknown recipe kind {self.kind!r}")

    def size(self, m: int) -> int:
        if self.kind == "IdentityProduct":
            return prod(part_sizes(self.params[0], m))
        if self.kind == "HpktMatrix":
            p, k, t = self.params
            return (k - p) + t * (1 + (2**p - 1) * (k - p + 1))
        if self.kind == "KcliqueConstant":
            return 2 ** (self.params[0] - 1)
        if self.kind == "Catalog":
            formula = _CATALOG[self.params[0]][1]
            if formula is not None:
                return formula(m)
        return self.expand(m).ncols

    def describe(self) -> str:
        if self.kind == "IdentityProduct":
            return f"product(p={self.params[0]})"
        if self.kind == "HpktMatrix":
            return "H(p={},k={},t={})".format(*self.params)
        if self.kind == "GeneralH":
            parts, t = self.params
            return f"generalH(parts={','.join(map(str, parts))},t={t})"
        if self.kind == "KcliqueConstant":
            return f"ik(k={self.params[0]})"
        name = self.params[0]
        if name == "c4free":
            return "relative(C4-free in product(p=2))"
        return f"catalog({name})"


def chi_construction(F: BitMatrix, m: int) -> BitMatrix:
    """The (chi(G(F))-1)-fold identity product on m rows, which avoids F."""
    chi = chromatic_number(graph_of(F))
    if chi <= 1:
        return zeros(m)
    return expand_product(chi - 1, m)

"""The graph G(F) on the rows of F and its exact invariants."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .matrix import MAX_ROWS, BitMatrix, bits, popcount

EXACT_MAX_VERTICES = 12


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless undirected graph; ``adj[v]`` is the neighbour mask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ROWS or len(self.adj) != self.n:
            raise ValueError("bad vertex count")
        for v, a in enumerate(self.adj):
            if (a >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(a):
                if u >= self.n or not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def parse(cls, text: str) -> "SimpleGraph":
        """Parse ``"m;u-v,u-v,..."``."""
        head, _, body = text.partition(";")
        n = int(head)
        edges = []
        for tok in body.split(","):
            tok = tok.strip()
            if tok:
                u, v = tok.split("-")
                edges.append((int(u), int(v)))
        return cls.from_edges(n, edges)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def __str__(self) -> str:
        return f"{self.n};" + ",".join(f"{u}-{v}" for u, v in self.edges())


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def path(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def graph_of(F: BitMatrix) -> SimpleGraph:
    """Join rows i, j when some column of F has 1s in both."""
    adj = [0] * F.rows
    for c in F.cols:
        for i in bits(c):
            adj[i] |= c & ~(1 << i)
    return SimpleGraph(F.rows, tuple(adj))


def _check_size(G: SimpleGraph):
    if G.n > EXACT_MAX_VERTICES:
        raise ValueError(f"exact invariants limited to {EXACT_MAX_VERTICES} vertices, got {G.n}")


def _max_clique(adj, cand, size, best):
    if not cand:
        return max(size, best)
    if size + popcount(cand) <= best:
        return best
    while cand:
        if size + popcount(cand) <= best:
            break
        low = cand & -cand
        v = low.bit_length() - 1
        best = _max_clique(adj, cand & adj[v], size + 1, best)
        cand ^= low
    return best


def clique_number(G: SimpleGraph) -> int:
    _check_size(G)
    return _max_clique(G.adj, (1 << G.n) - 1, 0, 0)


def independence_number(G: SimpleGraph) -> int:
    _check_size(G)
    return clique_number(G.complement())


def _colorable(G: SimpleGraph, k: int) -> bool:
    colors = [-1] * G.n
    order = sorted(range(G.n), key=lambda v: -popcount(G.adj[v]))

    def go(idx, used):
        if idx == G.n:
            return True
        v = order[idx]
        taken = {colors[u] for u in bits(G.adj[v]) if colors[u] >= 0}
        # a fresh colour is interchangeable with any other fresh colour
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colors[v] = c
            if go(idx + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return go(0, 0)


def chromatic_number(G: SimpleGraph) -> int:
    _check_size(G)
    if G.n == 0:
        return 0
    k = clique_number(G)
    while not _colorable(G, k):
        k += 1
    return k


def incidence_matrix(G: SimpleGraph) -> BitMatrix:
    return BitMatrix(G.n, tuple((1 << u) | (1 << v) for u, v in G.edges()))


def components(G: SimpleGraph) -> list[int]:
    seen = 0
    comps = []
    for v in range(G.n):
        if (seen >> v) & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def is_forest(G: SimpleGraph) -> bool:
    return len(G.edges()) == G.n - len(components(G))


def is_bipartite(G: SimpleGraph) -> bool:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(G.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_bipartite_with_cycle(G: SimpleGraph) -> bool:
    return is_bipartite(G) and not is_forest(G)

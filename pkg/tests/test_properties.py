"""Property-based checks over small random matrices."""
from hypothesis import given, settings
from hypothesis import strategies as st

from bergekit.containment import berge_contains, config_contains, contains_t_fold, verify_embedding
from bergekit.graphs import (
    SimpleGraph,
    chromatic_number,
    clique_number,
    graph_of,
    incidence_matrix,
)
from bergekit.matrix import BitMatrix, berge_family, canonical_form, complement, concat, identity, is_simple, relabel
from bergekit.oracles import naive_contains
from bergekit.transform import is_downset, shift_fixpoint_matrix, shift_row


@st.composite
def matrices(draw, max_rows=4, max_cols=4, min_rows=1):
    k = draw(st.integers(min_rows, max_rows))
    cols = draw(st.lists(st.integers(0, (1 << k) - 1), min_size=1, max_size=max_cols))
    return BitMatrix(k, tuple(cols))


@st.composite
def simple_matrices(draw, max_rows=6, max_cols=16):
    m = draw(st.integers(1, max_rows))
    cols = draw(st.lists(st.integers(0, (1 << m) - 1), min_size=1, max_size=max_cols, unique=True))
    return BitMatrix(m, tuple(cols))


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph.from_edges(n, chosen)


@settings(max_examples=150, deadline=None)
@given(matrices(3, 3), matrices(5, 5))
def test_containment_matches_oracle(F, A):
    for mode, fn in (("berge", berge_contains), ("config", config_contains)):
        e = fn(F, A)
        assert (e is not None) == naive_contains(F, A, mode)
        if e is not None:
            assert verify_embedding(F, A, e, mode)


@settings(max_examples=100, deadline=None)
@given(matrices(3, 3), matrices(5, 5), matrices(5, 2))
def test_config_implies_berge_and_monotone(F, A, B):
    if config_contains(F, A) is not None:
        assert berge_contains(F, A) is not None
    if B.rows == A.rows and berge_contains(F, A) is not None:
        assert berge_contains(F, concat(A, B)) is not None


@settings(max_examples=60, deadline=None)
@given(matrices(2, 3), simple_matrices(4, 8))
def test_berge_family_bridge(F, A):
    via_family = any(config_contains(B, A) is not None for B in berge_family(F))
    assert via_family == (berge_contains(F, A) is not None)


@settings(max_examples=150, deadline=None)
@given(simple_matrices(), matrices(3, 3))
def test_shifting(A, F):
    for i in range(A.rows):
        S = shift_row(A, i)
        assert S.ncols == A.ncols and is_simple(S)
    T = shift_fixpoint_matrix(A)
    assert T.ncols == A.ncols and is_simple(T) and is_downset(T)
    assert set(shift_fixpoint_matrix(T).cols) == set(T.cols)
    if berge_contains(F, A) is None:
        assert berge_contains(F, T) is None


@settings(max_examples=100, deadline=None)
@given(matrices(5, 6))
def test_canonical_invariance(A):
    C = canonical_form(A)
    assert canonical_form(C) == C
    perm = list(range(A.rows))[::-1]
    moved = BitMatrix(A.rows, tuple(relabel(c, perm) for c in reversed(A.cols)))
    assert canonical_form(moved) == C


@settings(max_examples=100, deadline=None)
@given(matrices(5, 6))
def test_complement_involution(A):
    assert complement(complement(A)) == A


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_graph_round_trip_and_bounds(G):
    assert graph_of(incidence_matrix(G)) == G
    assert clique_number(G) <= chromatic_number(G)


@settings(max_examples=80, deadline=None)
@given(matrices(4, 6))
def test_column_sum_gives_clique(A):
    top = max(bin(c).count("1") for c in A.cols)
    assert clique_number(graph_of(A)) >= top


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.data())
def test_rowsum_lemma(k, t, data):
    cols = []
    sums = [0] * k
    while min(sums) < k * t:
        c = data.draw(st.integers(1, (1 << k) - 1))
        cols.append(c)
        for i in range(k):
            sums[i] += (c >> i) & 1
    assert contains_t_fold(identity(k), t, BitMatrix(k, tuple(cols)))

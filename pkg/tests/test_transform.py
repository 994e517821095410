import pytest

from bergekit.matrix import BitMatrix, K, concat, identity, ones
from bergekit.transform import (
    Downset,
    is_downset,
    prune_support_columns,
    shift_fixpoint,
    shift_fixpoint_matrix,
    shift_row,
)


def test_shift_row_examples():
    assert shift_row(K(2), 0) == K(2)
    assert shift_row(K(2), 1) == K(2)
    assert shift_row(ones(2), 0).cols == (0b10,)
    assert set(shift_row(concat(identity(2), ones(2)), 0).cols) == {0, 0b10, 0b11}


def test_shift_row_errors():
    with pytest.raises(ValueError):
        shift_row(concat(ones(2), ones(2)), 0)
    with pytest.raises(IndexError):
        shift_row(K(2), 2)


def test_fixpoint_examples():
    assert shift_fixpoint(K(2)).members == frozenset(K(2).cols)
    assert shift_fixpoint(ones(2)).members == frozenset({0})
    assert shift_fixpoint(concat(identity(2), ones(2))).members == frozenset({0, 1, 2})


def test_downset_validation():
    Downset(2, frozenset({0, 1}))
    with pytest.raises(ValueError):
        Downset(2, frozenset({3}))
    assert is_downset(K(3))
    assert not is_downset(ones(2))


def test_fixpoint_idempotent():
    A = BitMatrix(4, (0b1011, 0b0110, 0b1100, 0b0001, 0b1111))
    T = shift_fixpoint_matrix(A)
    assert set(shift_fixpoint_matrix(T).cols) == set(T.cols)


def test_prune_support_columns():
    assert prune_support_columns(K(3), [{0, 1}], 1) == K(3)
    assert prune_support_columns(identity(3), [{0, 1}], 5) == identity(3)
    assert prune_support_columns(ones(2), [{0, 1}], 1).ncols == 0
    assert prune_support_columns(ones(2), [0b11], 1).ncols == 0

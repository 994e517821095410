import numpy as np
import pytest

from bergekit.catalog import c4, named
from bergekit.constructions import make_H
from bergekit.matrix import (
    BitMatrix,
    K,
    berge_family,
    canonical_form,
    complement,
    concat,
    identity,
    is_simple,
    ones,
    pad_rows,
    product,
    reduce_r,
    repeat,
    same_column_set,
    same_up_to_permutation,
    strict_subcolumns,
    strip_zero_rows,
    zeros,
)


def test_literal_round_trip(lit):
    G2 = lit("110,101,011")
    assert G2 == named("G2")
    assert G2.to_literal() == "110,101,011"
    assert G2.to_rows() == ["110", "101", "011"]


def test_text_round_trip():
    A = named("H4")
    assert BitMatrix.parse_text(A.to_text()) == A


@pytest.mark.parametrize("text", ["", "2 2\n10\n", "2 2\n10\n1x\n", "a b\n"])
def test_parse_text_rejects(text):
    with pytest.raises(ValueError):
        BitMatrix.parse_text(text)


def test_bad_literal():
    with pytest.raises(ValueError):
        BitMatrix.parse_literal("10,1")


def test_column_outside_rows():
    with pytest.raises(ValueError):
        BitMatrix(2, (4,))


def test_numpy_round_trip():
    A = named("H7")
    arr = A.to_array()
    assert arr.shape == (4, 4)
    assert BitMatrix.from_array(arr) == A
    assert np.array_equal(arr.sum(axis=0), A.col_sums())


def test_is_simple():
    assert is_simple(K(2))
    assert not is_simple(repeat(ones(2), 2))
    assert is_simple(make_H(1, 3, 1))


def test_concat_and_repeat():
    A = concat(identity(2), identity(2))
    assert (A.rows, A.ncols) == (2, 4) and not is_simple(A)
    assert concat(named("G1"), BitMatrix(3, ())) == named("G1")
    assert repeat(identity(1), 3) == BitMatrix(1, (1, 1, 1))
    with pytest.raises(ValueError):
        concat(identity(2), identity(3))


def test_product():
    assert product(identity(1), identity(1)) == ones(2)
    assert product(identity(2), identity(2)) == named("C4")
    assert c4() == named("C4")
    P = product(identity(3), identity(3))
    assert (P.rows, P.ncols) == (6, 9)
    with pytest.raises(ValueError):
        product(identity(40), identity(30))


def test_complement():
    assert same_column_set(complement(identity(2)), identity(2))
    assert same_column_set(complement(identity(3)), K(3, 2))
    A = named("H5")
    assert complement(complement(A)) == A


def test_reduce_r():
    G1 = named("G1")
    assert reduce_r(G1) == G1
    assert reduce_r(concat(zeros(3), identity(3), ones(3))) == ones(3)
    assert same_column_set(reduce_r(make_H(1, 3, 1)), G1)


def test_canonical_form():
    assert canonical_form(identity(2)) == canonical_form(BitMatrix(2, (2, 1)))
    A = named("H4")
    assert canonical_form(canonical_form(A)) == canonical_form(A)
    B = BitMatrix(4, tuple(c ^ 0 for c in A.cols))
    perm = [2, 0, 3, 1]
    moved = BitMatrix(4, tuple(sum(((c >> i) & 1) << perm[i] for i in range(4)) for c in A.cols[::-1]))
    assert same_up_to_permutation(B, moved)
    assert not same_up_to_permutation(named("H1"), named("H2"))


def test_canonical_form_row_limit():
    with pytest.raises(ValueError):
        canonical_form(identity(11))


def test_strict_subcolumns():
    assert same_column_set(strict_subcolumns(ones(2)), BitMatrix(2, (0, 1, 2)))
    assert strict_subcolumns(identity(2)) == zeros(2)
    assert strict_subcolumns(product(identity(2), identity(2))).ncols == 5


def test_berge_family():
    fam = berge_family(identity(2))
    assert len(fam) == 3
    assert len(berge_family(identity(2), dedupe=False)) == 4
    assert berge_family(ones(2)) == [ones(2)]
    assert len(berge_family(BitMatrix(1, (0,)), dedupe=False)) == 2


def test_berge_family_limit():
    with pytest.raises(ValueError):
        berge_family(zeros(7, 3))


def test_strip_and_pad():
    A = pad_rows(named("G1"), 2)
    assert A.rows == 5
    assert strip_zero_rows(A) == named("G1")


def test_generators():
    assert K(2).cols == (0, 1, 2, 3)
    assert K(3, 2).ncols == 3
    assert zeros(3, 2).cols == (0, 0)

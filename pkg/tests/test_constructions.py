import pytest

from bergekit.catalog import named
from bergekit.constructions import (
    ConstructionRecipe,
    c4free_in_product,
    chi_construction,
    expand_product,
    g1_extremal,
    h2_extremal,
    h8_extremal,
    ik_extremal,
    make_generalH,
    make_H,
    part_sizes,
)
from bergekit.containment import berge_contains
from bergekit.matrix import (
    BitMatrix,
    K,
    concat,
    identity,
    is_simple,
    ones,
    pad_rows,
    product,
    repeat,
    same_column_set,
    zeros,
)


def test_expand_product():
    assert expand_product(1, 4) == identity(4)
    P = expand_product(2, 6)
    assert (P.rows, P.ncols) == (6, 9)
    assert expand_product(2, 4) == named("C4")
    assert part_sizes(3, 7) == [3, 2, 2]
    with pytest.raises(ValueError):
        expand_product(3, 2)


def test_make_H_13():
    H = make_H(1, 3, 1)
    assert sorted(H.cols) == sorted([0b011, 0b101, 0b001, 0, 0b010, 0b100])
    assert is_simple(H)


def test_make_H_berge_equivalences():
    for t in (1, 2):
        alt = concat(named("G1"), repeat(concat(BitMatrix(3, (0,)), identity(3)), t))
        H = make_H(1, 3, t)
        assert berge_contains(alt, H) is not None and berge_contains(H, alt) is not None
        alt2 = concat(ones(3), repeat(named("G2"), t))
        H2 = make_H(2, 3, t)
        assert berge_contains(alt2, H2) is not None


def test_make_H_errors():
    with pytest.raises(ValueError):
        make_H(3, 3, 1)
    with pytest.raises(ValueError):
        make_H(1, 3, 0)


def test_generalH():
    for p, k in ((1, 3), (2, 4), (2, 5), (3, 5)):
        parts = [1] * p + [k - p]
        assert same_column_set(make_generalH(parts, 2), make_H(p, k, 2))
    block = make_generalH((1, 2, 2), 1)
    assert same_column_set(BitMatrix(5, block.cols[:4]), product(ones(1), named("C4")))
    assert make_generalH((2,), 1) == concat(identity(2), zeros(2))
    with pytest.raises(ValueError):
        make_generalH((0, 2), 1)


def test_chi_construction():
    A = chi_construction(named("G2"), 6)
    assert A == product(identity(3), identity(3))
    assert berge_contains(named("G2"), A) is None
    assert berge_contains(repeat(ones(2), 2), expand_product(2, 8)) is None
    assert chi_construction(identity(3), 5) == zeros(5)


def test_ik_extremal():
    assert ik_extremal(3, 5).ncols == 4
    assert ik_extremal(1, 3) == zeros(3)
    assert set(ik_extremal(2, 2).cols) == {0, 1}
    for k in (2, 3, 4):
        assert berge_contains(identity(k), ik_extremal(k, 6)) is None


def test_g1_extremal():
    assert g1_extremal(4).ncols == 7
    assert g1_extremal(2) == K(2)
    assert berge_contains(named("G1"), K(2)) is None
    assert g1_extremal(3).ncols == 5
    for m in range(2, 9):
        assert berge_contains(named("G1"), g1_extremal(m)) is None


def test_h2_h8_extremal():
    assert h2_extremal(6).ncols == 15
    assert h2_extremal(3).ncols == 8
    assert berge_contains(named("H2"), h2_extremal(6)) is None
    for m in range(2, 8):
        W = h8_extremal(m)
        assert W.ncols == 2 * m and berge_contains(named("H8"), W) is None


def test_c4free():
    for m in (4, 8, 12):
        W = c4free_in_product(m)
        assert is_simple(W) and berge_contains(named("C4"), W) is None
    assert c4free_in_product(12).ncols > 12


@pytest.mark.parametrize(
    "recipe",
    [
        ConstructionRecipe("IdentityProduct", (2,)),
        ConstructionRecipe("HpktMatrix", (2, 4, 1)),
        ConstructionRecipe("KcliqueConstant", (3,)),
        ConstructionRecipe("Catalog", ("g1",)),
        ConstructionRecipe("Catalog", ("h2",)),
        ConstructionRecipe("Catalog", ("h8",)),
        ConstructionRecipe("Catalog", ("zero",)),
        ConstructionRecipe("Catalog", ("empty",)),
        ConstructionRecipe("Catalog", ("c4free",)),
    ],
)
def test_recipe_size_matches(recipe):
    for m in (6, 8, 12):
        A = recipe.expand(m)
        assert A.rows == m and A.ncols == recipe.size(m)


def test_recipe_describe():
    assert ConstructionRecipe("IdentityProduct", (2,)).describe() == "product(p=2)"
    assert ConstructionRecipe("GeneralH", ((1, 2, 2), 1)).describe() == "generalH(parts=1,2,2,t=1)"
    with pytest.raises(ValueError):
        ConstructionRecipe("Nope").expand(3)


def test_generalmaximal_saturation():
    # any column added to H((2,2),1) beyond its multiplicity raises the class
    from bergekit.containment import contains_t_fold
    from bergekit.graphs import clique_number, graph_of

    H = make_generalH((2, 2), 1)
    for c in range(16):
        Fp = BitMatrix(4, H.cols + (c,))
        if H.cols.count(c) >= 1 and c in H.cols[4:]:
            continue
        if c in H.cols[:4]:
            assert contains_t_fold(ones(2), 2, Fp)
            continue
        assert contains_t_fold(ones(2), 2, Fp) or clique_number(graph_of(Fp)) == 3

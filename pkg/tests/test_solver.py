import pytest

from bergekit.catalog import named
from bergekit.containment import berge_contains
from bergekit.matrix import BitMatrix, K, berge_family, concat, identity, is_simple, ones, pad_rows, product, repeat, zeros
from bergekit.oracles import naive_bh
from bergekit.solver import (
    HallKernel,
    solve_bh,
    solve_bh_unrestricted,
    solve_forb_family,
    solve_relative,
)


def _valid(res, F, m):
    w = res.witness
    return w.rows == m and is_simple(w) and w.ncols == res.value and berge_contains(F, w) is None


def test_spec_values():
    assert solve_bh(identity(2), 3).value == 2
    assert solve_bh(named("G1"), 4).value == 7
    assert solve_bh(named("H8"), 5).value == 10
    assert solve_bh(BitMatrix(1, (1,)), 4).value == 1


# values computed by the downset solver and cross-checked against the
# unrestricted solver (m<=4) and the naive enumeration oracle (m<=3)
@pytest.mark.parametrize(
    "name,values",
    [
        ("G1", [4, 5, 7, 8, 10]),
        ("H8", [4, 8, 9, 10, 12]),
        ("H2", [4, 8, 9, 11, 15]),
    ],
)
def test_frozen_sequences(name, values):
    F = named(name)
    for m, v in zip(range(2, 7), values):
        res = solve_bh(F, m)
        assert res.value == v and _valid(res, F, m)


def test_h8_m4_witness():
    W = BitMatrix.from_sets(4, [(), (0,), (1,), (2,), (3,), (0, 1), (0, 2), (1, 2), (0, 1, 2)])
    assert berge_contains(named("H8"), W) is None


def test_h2_m5_witness():
    W = BitMatrix.from_sets(5, [(), (0,), (1,), (2,), (3,), (4,), (0, 1), (0, 2), (1, 2), (0, 1, 2), (3, 4)])
    assert berge_contains(named("H2"), W) is None


def test_unrestricted():
    assert solve_bh_unrestricted(ones(1), 3).value == 1
    # every row may carry a 1 in one column: the zero column plus the singletons
    assert solve_bh_unrestricted(repeat(ones(1), 2), 2).value == 3
    for F in (identity(2), named("G1"), named("G2"), ones(3)):
        for m in (3, 4):
            assert solve_bh_unrestricted(F, m).value == solve_bh(F, m).value
    assert solve_bh_unrestricted(named("H8"), 4).value == 9


def test_naive_oracle():
    for F in (identity(2), named("G1"), ones(2), repeat(ones(1), 2)):
        for m in (2, 3):
            assert naive_bh(F, m) == solve_bh(F, m).value


def test_forb_family():
    for m in (2, 3, 4):
        assert solve_forb_family(berge_family(identity(2)), m).value == solve_bh(identity(2), m).value
    assert solve_forb_family([BitMatrix(1, (1,))], 3).value == 1
    assert solve_forb_family([K(2)], 3).value < 8


def test_all_ones_config_equals_berge():
    for F in (ones(2), ones(3), repeat(ones(1), 2)):
        for m in (3, 4):
            assert solve_bh(F, m).value == solve_forb_family([F], m).value


def test_zero_row_invariance():
    for F in (named("G1"), identity(2), ones(2)):
        for m in range(F.rows + 2, 7):
            assert solve_bh(pad_rows(F, 1), m).value == solve_bh(F, m).value


def test_relative():
    res = solve_relative(named("C4"), product(identity(3), identity(3)))
    assert 6 <= res.value < 9
    P = named("H4")
    assert solve_relative(K(5), P).value == P.ncols
    P = concat(zeros(3, 2), identity(3))
    assert solve_relative(ones(1), P).value == 2


def test_regime_errors():
    with pytest.raises(ValueError):
        solve_bh(identity(2), 7)
    with pytest.raises(ValueError):
        solve_bh_unrestricted(identity(2), 5)
    with pytest.raises(ValueError):
        solve_forb_family([identity(2)], 5)
    with pytest.raises(ValueError):
        solve_relative(identity(2), zeros(2, 25))


def test_hall_kernel_matches_containment():
    F = named("H2")
    kernel = HallKernel(F, 4)
    for D in (0b1111, 0b1_0000_0001_0001_0111, (1 << 16) - 1):
        A = BitMatrix(4, tuple(s for s in range(16) if (D >> s) & 1))
        assert kernel.contains(D) == (berge_contains(F, A) is not None)


def test_as_dict():
    d = solve_bh(identity(2), 2).as_dict()
    assert d["value"] == 2 and d["mode"] == "downset" and d["witness"]["rows"] == 2

import pytest

from sympweight.oracles import (
    BudgetExceeded,
    brute_tensor_weights,
    dominates,
    enumeration_budget,
    freudenthal_mult,
    freudenthal_table,
    weyl_dim,
)
from sympweight.weights import enumerate_dominant_weights, orbit_size, weyl_orbit


def test_standard_representation_table():
    table = brute_tensor_weights(1, 0, 2)
    assert table.table == {(1, 0): 1, (0, 1): 1, (0, -1): 1, (-1, 0): 1}


def test_brute_examples():
    assert brute_tensor_weights(1, 1, 2)[(0, 0)] == 4
    assert brute_tensor_weights(1, 1, 2).total == 16
    assert brute_tensor_weights(2, 0, 2)[(0, 0)] == 2


@pytest.mark.parametrize("r, n, m", [(2, 3, 2), (3, 2, 1), (2, 0, 4)])
def test_brute_totals_and_symmetry(r, n, m):
    table = brute_tensor_weights(n, m, r)
    assert table.total == table.meta["pairs"]
    for w, v in table.table.items():
        assert all(table[u] == v for u in weyl_orbit(w))


def test_budget_refusal(monkeypatch):
    with pytest.raises(BudgetExceeded):
        brute_tensor_weights(3, 3, 2, budget=10)
    monkeypatch.setenv("SYMPWEIGHT_BUDGET", "5")
    assert enumeration_budget() == 5
    with pytest.raises(BudgetExceeded):
        brute_tensor_weights(1, 1, 2)
    monkeypatch.delenv("SYMPWEIGHT_BUDGET")
    assert enumeration_budget() == 10**7


def test_dominance():
    assert dominates((2, 0), (0, 0))
    assert dominates((1, 1), (2, 0)) is False
    assert dominates((2, 0), (1, 1))
    assert dominates((1, 0), (0, 0)) is False


@pytest.mark.parametrize(
    "hw, w, expected", [((2, 0), (0, 0), 2), ((1, 1), (1, -1), 1), ((3, 1, 0), (3, 1, 0), 1), ((1, 1), (0, 0), 1)]
)
def test_freudenthal_examples(hw, w, expected):
    assert freudenthal_mult(hw, w) == expected


@pytest.mark.parametrize(
    "hw, expected", [((1, 0), 4), ((1, 0, 0), 6), ((1, 1), 5), ((2, 0), 10), ((2, 0, 0), 21), ((1, 1, 1), 14)]
)
def test_weyl_dim(hw, expected):
    assert weyl_dim(hw) == expected


def test_adjoint_dimension_is_2r2_plus_r():
    for r in range(2, 7):
        assert weyl_dim((2,) + (0,) * (r - 1)) == 2 * r * r + r


@pytest.mark.parametrize("r", [2, 3])
def test_freudenthal_sums_to_weyl_dim(r):
    for N in range(7):
        for m in range(N // 2 + 1):
            hw = (N - m, m) + (0,) * (r - 2)
            table = freudenthal_table(hw)
            assert sum(v * orbit_size(w) for w, v in table.items()) == weyl_dim(hw)
            assert all(freudenthal_mult(hw, u) == freudenthal_mult(hw, w)
                       for w, _ in enumerate_dominant_weights(N - m, m, r) for u in list(weyl_orbit(w))[:3])


def test_freudenthal_general_highest_weight():
    # three nonzero entries: outside the closed formulas, still a valid oracle
    hw = (1, 1, 1)
    assert sum(v * orbit_size(w) for w, v in freudenthal_table(hw).items()) == weyl_dim(hw)


def test_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dim((0, 1))

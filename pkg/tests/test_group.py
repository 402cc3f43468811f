import pytest
from hypothesis import given, strategies as st

from deltanil.errors import InvalidGroupType, NonIncreasingExponents, NonPositiveRank, NotPrime
from deltanil.group import (
    Case,
    GroupType,
    classify_applicability,
    delta_order,
    delta_order_exponent,
    f_J,
    group_type,
    sigma,
    top_gap_index,
)


def test_validate_accepts_and_defaults_ranks():
    g = group_type(3, (3, 5, 7), (1, 1, 2))
    assert (g.s, g.r) == (3, 4)
    assert g.blocks() == [1, 2, 3, 3]
    assert group_type(3, (3, 5, 6, 8, 10)).ranks == (1,) * 5


@pytest.mark.parametrize("p,n,r,exc", [
    (3, (5, 3), (1, 1), NonIncreasingExponents),
    (3, (3, 3), (1, 1), NonIncreasingExponents),
    (3, (0, 2), (1, 1), NonIncreasingExponents),
    (4, (2,), (1,), NotPrime),
    (1, (2,), (1,), NotPrime),
    (True, (2,), (1,), NotPrime),
    (3, (1, 2), (1, 0), NonPositiveRank),
    (3, (1, 2), (1, 2.0), NonPositiveRank),
    (3, (1, 2), (1,), InvalidGroupType),
    (3, (), (), InvalidGroupType),
    (2, (63,), (1,), InvalidGroupType),
])
def test_validate_rejects(p, n, r, exc):
    with pytest.raises(exc):
        group_type(p, n, r)


def test_invalid_inputs_are_value_errors():
    with pytest.raises(ValueError):
        group_type(6, (1,))


def test_sigma_and_top_gap():
    assert sigma(group_type(3, (3, 5, 6, 8, 10))) == 1
    assert sigma(group_type(3, (2, 4, 7))) == 2
    assert sigma(group_type(3, (2,))) is None
    assert top_gap_index(group_type(3, (3, 5, 6, 8, 10))) == 3
    assert top_gap_index(group_type(3, (2, 4, 7))) == 2
    assert top_gap_index(group_type(3, (1, 2, 3))) == 3
    assert top_gap_index(group_type(3, (4,))) is None


def test_f_J():
    g = group_type(3, (3, 5, 6, 8, 10))
    assert f_J(g, 5, 5) == 9
    assert f_J(g, 2, 4) == 5
    assert f_J(g, 4, 2) == 5
    assert f_J(group_type(2, (2,)), 1, 1) == 1


def test_classify():
    assert classify_applicability(group_type(2, (3, 5, 7), (1, 1, 2))).tag is Case.GUARANTEED_CASE1
    assert classify_applicability(group_type(2, (2, 4, 7))).tag is Case.GUARANTEED_CASE2
    assert classify_applicability(group_type(3, (1, 2))).tag is Case.GUARANTEED_CASE3
    ng = classify_applicability(group_type(2, (1, 2)))
    assert ng.tag is Case.NOT_GUARANTEED and not ng.guaranteed
    # one block, p = 2: no gap hypothesis to fail
    assert classify_applicability(group_type(2, (3,), (2,))).guaranteed


def test_delta_order():
    assert delta_order(group_type(2, (1, 2))) == 8
    assert delta_order(group_type(3, (1, 2))) == 27
    assert delta_order(group_type(3, (2, 3))) == 3**7
    assert delta_order(group_type(5, (1,), (4,))) == 1


def test_delta_order_is_exact_for_huge_groups():
    g = group_type(3, (3, 5, 6, 8, 10), (4, 4, 4, 4, 4))
    assert delta_order(g) == 3 ** delta_order_exponent(g)
    assert delta_order(g) > 2**1000


exps = st.lists(st.integers(1, 12), min_size=1, max_size=6, unique=True).map(sorted)


@given(exps, st.sampled_from([2, 3, 5, 7, 11]), st.data())
def test_order_exponent_formula(n, p, data):
    ranks = data.draw(st.lists(st.integers(1, 4), min_size=len(n), max_size=len(n)))
    g = group_type(p, n, ranks)
    s = len(n)
    # diagonal cells contribute r_i^2 (n_i - 1), off-diagonal r_i r_j n_min
    want = sum(ranks[i] ** 2 * (n[i] - 1) for i in range(s))
    want += sum(ranks[i] * ranks[j] * n[min(i, j)] for i in range(s) for j in range(s) if i != j)
    assert delta_order_exponent(g) == want


def test_group_type_is_hashable_value():
    assert group_type(3, [1, 2]) == GroupType(3, (1, 2), (1, 1))
    assert len({group_type(3, (1, 2)), group_type(3, (1, 2), (1, 1))}) == 1


@given(exps, st.sampled_from([2, 3, 5, 7]))
def test_f_J_symmetric_off_diagonal(n, p):
    g = group_type(p, n)
    for i in range(1, g.s + 1):
        assert f_J(g, i, i) == g.n(i) - 1
        for j in range(1, g.s + 1):
            if i != j:
                assert f_J(g, i, j) == f_J(g, j, i)


@given(exps, st.sampled_from([3, 5, 7, 11, 13]), st.data())
def test_odd_primes_always_guaranteed(n, p, data):
    ranks = data.draw(st.lists(st.integers(1, 3), min_size=len(n), max_size=len(n)))
    assert classify_applicability(group_type(p, n, ranks)).guaranteed

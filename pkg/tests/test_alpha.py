import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from deltanil.alpha import (
    alpha,
    alpha_table,
    closed_form_case1,
    closed_form_case2,
    find_violation,
    is_annihilating_function,
)
from deltanil.checks import monotonicity_failures, perturb, perturbable, violation_is_real
from deltanil.errors import CaseNotApplicable
from deltanil.group import f_J, group_type

W = group_type(3, (3, 5, 6, 8, 10))

exps = st.lists(st.integers(1, 12), min_size=1, max_size=6, unique=True).map(lambda x: tuple(sorted(x)))


def test_alpha_examples():
    assert alpha(W, 5, 5, 1) == 1
    assert alpha(W, 5, 4, 2) == 1
    assert alpha(W, 1, 5, 14) == 3
    assert alpha(W, 3, 2, 0) == 0


def test_alpha_rejects_bad_cells():
    with pytest.raises(IndexError):
        alpha(W, 0, 1, 1)
    with pytest.raises(ValueError):
        alpha(W, 1, 1, -1)


def test_table_saturates_and_stays_saturated():
    tab = alpha_table(W)
    assert tab.t_max == 14
    assert (tab.slice(14) == tab.saturation()).all()
    assert tab(2, 3, 40) == f_J(W, 2, 3)
    assert not tab.values.flags.writeable


def test_zero_radical_has_empty_table():
    tab = alpha_table(group_type(2, (1,), (3,)))
    assert tab.t_max == 0


def test_alpha_ignores_ranks():
    a = alpha_table(group_type(3, (2, 4, 7))).values
    b = alpha_table(group_type(5, (2, 4, 7), (3, 1, 2))).values
    assert np.array_equal(a, b)


def test_closed_form_examples():
    g = group_type(3, (2, 4, 7))
    assert closed_form_case1(g, 2, 3, 4) == 3
    assert closed_form_case1(g, 1, 1, 1) == 0
    assert closed_form_case1(g, 3, 3, 6) == 6
    h = group_type(3, (1, 2))
    assert closed_form_case2(h, 2, 2, 1) == 1
    assert closed_form_case2(h, 1, 2, 2) == 1
    assert closed_form_case2(h, 1, 1, 0) == 0


def test_closed_forms_refuse_other_types():
    with pytest.raises(CaseNotApplicable):
        closed_form_case1(W, 1, 1, 1)
    with pytest.raises(CaseNotApplicable):
        closed_form_case2(group_type(3, (2, 4, 7)), 1, 1, 1)
    with pytest.raises(CaseNotApplicable):
        closed_form_case2(group_type(3, (1, 2, 4)), 1, 1, 1)  # gap 1 not on top
    with pytest.raises(CaseNotApplicable):
        closed_form_case1(group_type(3, (5,)), 1, 1, 1)


@given(st.lists(st.integers(2, 4), min_size=1, max_size=5), st.integers(1, 3))
def test_case1_matches_recursion(gaps, n1):
    n = tuple(int(x) for x in np.cumsum([n1] + gaps))
    g = group_type(2, n)
    tab = alpha_table(g)
    for t in range(tab.t_max + 3):
        for i in range(1, g.s + 1):
            for j in range(1, g.s + 1):
                assert closed_form_case1(g, i, j, t) == tab(i, j, t)


@given(st.lists(st.integers(1, 3), min_size=0, max_size=4), st.integers(1, 3))
def test_case2_matches_recursion(gaps, n1):
    n = tuple(int(x) for x in np.cumsum([n1] + gaps + [1]))
    g = group_type(3, n)
    tab = alpha_table(g)
    for t in range(tab.t_max + 3):
        for i in range(1, g.s + 1):
            for j in range(1, g.s + 1):
                assert closed_form_case2(g, i, j, t) == tab(i, j, t)


def test_worked_table_is_annihilating():
    ok, v = is_annihilating_function(W, alpha_table(W))
    assert ok and v is None


def test_step_jump_is_condition_2():
    a = np.array(alpha_table(W).values)
    a[2, 0, 0] += 2
    ok, v = is_annihilating_function(W, a)
    assert not ok
    assert (v.condition, v.i, v.j, v.t) == (2, 1, 1, 2)


def test_bad_start_is_condition_1():
    a = np.array(alpha_table(W).values)
    a[1, 4, 4] = 0
    ok, v = is_annihilating_function(W, a)
    assert not ok and v.condition == 1 and v.t == 1
    assert "condition (1)" in str(v)


@settings(max_examples=150)
@given(exps)
def test_alpha_is_annihilating(n):
    g = group_type(2, n)
    assert find_violation(g, alpha_table(g)) is None


@settings(max_examples=150)
@given(exps, st.integers(0, 2**32 - 1))
def test_any_raised_cell_is_caught(n, seed):
    # alpha is the largest annihilating function below f_J, so raising any
    # unsaturated value must break one of the conditions
    g = group_type(2, n)
    if not perturbable(g):
        return
    arr, _ = perturb(g, np.random.default_rng(seed))
    v = find_violation(g, arr)
    assert v is not None
    assert violation_is_real(g, arr, v)


@settings(max_examples=150)
@given(exps)
def test_alpha_grows_toward_corner_and_in_t(n):
    assert monotonicity_failures(group_type(3, n), as_stated=False) == []


@given(exps)
def test_alpha_bounded_by_f_J(n):
    g = group_type(3, n)
    tab = alpha_table(g)
    assert (tab.values >= 0).all()
    assert (tab.values <= tab.saturation()).all()


def test_decreasing_reading_fails_at_first_step():
    # alpha(s,s,1) = 1 above alpha(s-1,s,1) = 0, so a decreasing-in-i reading cannot hold
    fails = monotonicity_failures(group_type(3, (1, 2)), as_stated=True)
    assert (1, 1, 2, 1) in fails
    assert (3, 2, 1, 1) in fails

import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from congruence_atoms import (
    BudgetExceeded,
    DomainError,
    NormalForm,
    enumerate_naive,
    enumerate_normal_form,
    enumerate_standard,
    is_indecomposable,
    leq,
    solve_n1,
)

TABLE1 = {
    2: 1, 3: 3, 4: 6, 5: 14, 6: 19, 7: 47, 8: 64, 9: 118, 10: 165,
    11: 347, 12: 366, 13: 826, 14: 973,
}


def test_small_solution_sets():
    assert enumerate_standard(2).solutions == ((2,),)
    assert set(enumerate_standard(3).solutions) == {(1, 1), (3, 0), (0, 3)}
    assert set(enumerate_standard(4).solutions) == {
        (4, 0, 0), (2, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 2), (0, 0, 4),
    }


def test_counts_match_reference(standard_enumerations):
    for m, expected in TABLE1.items():
        assert standard_enumerations[m].count == expected


def test_m23_count(standard_enumerations):
    assert standard_enumerations[23].count == 29161


def test_domain_errors():
    with pytest.raises(DomainError):
        enumerate_standard(1)
    with pytest.raises(DomainError):
        enumerate_naive(1)


def test_ordering_is_lexicographic(standard_enumerations):
    for m in (5, 9, 12):
        sols = standard_enumerations[m].solutions
        assert list(sols) == sorted(sols)


def test_oracle_equivalence():
    for m in range(2, 11):
        assert enumerate_standard(m).solutions == enumerate_naive(m).solutions


def test_naive_reference_counts():
    assert enumerate_naive(2).solutions == ((2,),)
    assert enumerate_naive(10).count == 165


def test_naive_budget_refusal():
    with pytest.raises(BudgetExceeded):
        enumerate_naive(30)
    with pytest.raises(BudgetExceeded):
        enumerate_naive(8, max_points=10)


def test_pairwise_incomparability(standard_enumerations):
    for m in (4, 6, 8, 10):
        sols = standard_enumerations[m].solutions
        for x, y in combinations(sols, 2):
            assert not leq(x, y) and not leq(y, x)


def test_bound_theorems_with_pruning_disabled(unpruned_enumerations):
    for m, result in unpruned_enumerations.items():
        for x in result.solutions:
            length = sum(x)
            width = sum(1 for c in x if c)
            assert length <= m
            assert 2 * width <= m
            assert length + width <= m + 1
            if m >= 7 and width >= 3:
                assert length <= m - 3


def test_unpruned_equals_pruned(unpruned_enumerations, standard_enumerations):
    for m in unpruned_enumerations:
        assert unpruned_enumerations[m].solutions == standard_enumerations[m].solutions


def test_thread_count_does_not_change_output():
    for threads in (2, 3, 7):
        assert (
            enumerate_standard(11, threads=threads).solutions
            == enumerate_standard(11).solutions
        )


def test_normal_form_examples():
    assert enumerate_normal_form(NormalForm(4, (2,))).solutions == ((2,),)
    assert enumerate_normal_form(NormalForm(5, (1, 2, 3, 4))).count == 14
    assert set(enumerate_normal_form(NormalForm(6, (2, 3))).solutions) == {
        (3, 0), (0, 2),
    }


def test_normal_form_equals_tau_filter(standard_enumerations):
    # restricting the alphabet must agree with filtering the full set
    for m in range(2, 9):
        full = standard_enumerations[m].solutions
        for r in range(1, m):
            for J in combinations(range(1, m), r):
                restricted = enumerate_normal_form(NormalForm(m, J)).solutions
                filtered = sorted(
                    tuple(x[j - 1] for j in J)
                    for x in full
                    if all(x[i] == 0 for i in range(m - 1) if (i + 1) not in J)
                )
                assert list(restricted) == filtered, (m, J)


def test_normal_form_matches_naive():
    for m, J in ((6, (2, 3)), (8, (1, 4, 6)), (7, (2, 5))):
        assert (
            enumerate_normal_form(NormalForm(m, J)).solutions
            == enumerate_naive(m, J).solutions
        )


def test_unit_vector_membership(standard_enumerations):
    for m in range(2, 13):
        sols = set(standard_enumerations[m].solutions)
        for j in range(1, m):
            x = tuple(m if i == j - 1 else 0 for i in range(m - 1))
            assert (x in sols) == (math.gcd(j, m) == 1), (m, j)


def test_solve_n1():
    assert solve_n1(3, 7) == 7
    assert solve_n1(4, 6) == 3
    assert solve_n1(6, 6) == 1
    with pytest.raises(DomainError):
        solve_n1(0, 6)
    with pytest.raises(DomainError):
        solve_n1(2, 1)


def test_solve_n1_matches_enumeration():
    for m in range(2, 12):
        for a in range(1, m):
            assert enumerate_normal_form(NormalForm(m, (a,))).solutions == (
                (solve_n1(a, m),),
            )


def test_is_indecomposable_examples(standard_enumerations):
    assert is_indecomposable((2, 1, 0), 4)
    assert not is_indecomposable((2, 2, 0), 4)  # weight 6 = 2 mod 4: not a solution
    assert is_indecomposable((4, 1, 0, 0, 0), 6)
    assert (4, 1, 0, 0, 0) in standard_enumerations[6].solutions
    with pytest.raises(DomainError):
        is_indecomposable((0, 0, 0), 4)


def test_is_indecomposable_against_sets(standard_enumerations):
    for m in (5, 6, 8):
        members = set(standard_enumerations[m].solutions)
        for x in members:
            assert is_indecomposable(x, m)
        # doubled solutions are solutions but never minimal
        for x in members:
            doubled = tuple(2 * c for c in x)
            assert not is_indecomposable(doubled, m)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_is_indecomposable_matches_oracle(data):
    m = data.draw(st.integers(min_value=2, max_value=8))
    coords = tuple(
        data.draw(st.integers(min_value=0, max_value=m)) for _ in range(m - 1)
    )
    if not any(coords) or sum(coords) > m:
        return
    minimal = set(enumerate_naive(m).solutions)
    assert is_indecomposable(coords, m) == (coords in minimal)

from itertools import product

from hypothesis import given
from hypothesis import strategies as st

from linkhomotopy.smith import count_solutions_mod, enumerate_group, smith_normal_form, solution_generators_mod, span_mod


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def brute_count(A, ncols, n):
    return sum(
        1
        for v in product(range(n), repeat=ncols)
        if all(sum(a * x for a, x in zip(row, v)) % n == 0 for row in A)
    )


def test_known_invariant_factors():
    A = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    diag, _, _ = smith_normal_form(A)
    assert diag == [1, 10, 30]


@given(matrices)
def test_transforms_reproduce_diagonal(A):
    rows, cols = len(A), len(A[0])
    diag, U, V = smith_normal_form(A)
    D = matmul(matmul(U, A), V)
    for i in range(rows):
        for j in range(cols):
            expect = diag[i] if i == j and i < len(diag) else 0
            assert D[i][j] == expect
    for a, b in zip(diag, diag[1:]):
        assert b % a == 0


@given(matrices, st.sampled_from([2, 3, 4, 6]))
def test_solution_count_matches_brute_force(A, n):
    cols = len(A[0])
    assert count_solutions_mod(A, cols, n) == brute_count(A, cols, n)


@given(matrices, st.sampled_from([2, 4, 6, 9]))
def test_generators_span_exactly_the_solutions(A, n):
    cols = len(A[0])
    gens = solution_generators_mod(A, cols, n)
    sols = set(enumerate_group(gens, cols, n))
    assert len(sols) == brute_count(A, cols, n)
    for v in sols:
        assert all(sum(a * x for a, x in zip(row, v)) % n == 0 for row in A)


def test_span_mod_of_dependent_vectors():
    gens = span_mod([[2, 0], [0, 3], [2, 3]], 2, 6)
    group = set(enumerate_group(gens, 2, 6))
    assert group == {(a, b) for a in (0, 2, 4) for b in (0, 3)}

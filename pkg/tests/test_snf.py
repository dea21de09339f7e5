from hypothesis import given, settings, strategies as st

from immclass.snf import determinant, identity, kernel_basis, matmul, smith_normal_form

import oracles


def test_two_by_two_example():
    r = smith_normal_form([[2, 4], [6, 8]])
    assert r.diagonal == [2, 4]
    assert r.invariant_factors == oracles.invariant_factors([[2, 4], [6, 8]], 2, 2)


def test_zero_matrix_keeps_identity_transforms():
    r = smith_normal_form([[0, 0, 0], [0, 0, 0]])
    assert r.S == [[0, 0, 0], [0, 0, 0]]
    assert r.U == identity(2)
    assert r.V == identity(3)
    assert r.rank == 0


def test_identity():
    r = smith_normal_form(identity(4))
    assert r.S == identity(4)


def test_empty_shapes():
    r = smith_normal_form([], 0, 3)
    assert r.V == identity(3) and r.rank == 0
    r = smith_normal_form([[], []], 2, 0)
    assert r.U == identity(2)


def test_mod_two_mode():
    assert smith_normal_form([[3, 1], [1, 3]], modulus=2).diagonal == [1, 0]
    assert smith_normal_form([[1, 1], [0, 3]], modulus=2).diagonal == [1, 1]
    r = smith_normal_form([[2, 4], [6, 8]], modulus=2)
    assert r.rank == 0


def test_kernel_basis_spans_kernel():
    A = [[1, 2, 3], [2, 4, 6]]
    K = kernel_basis(A, 2, 3)
    assert len(K) == 2
    for v in K:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)


matrices = st.integers(1, 5).flatmap(lambda m: st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(m), st.just(n), st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m))))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_matches_gcd_of_minors(case):
    m, n, A = case
    r = smith_normal_form(A, m, n)
    assert r.invariant_factors == oracles.invariant_factors(A, m, n)
    assert matmul(matmul(r.U, A, n), r.V, n) == r.S
    assert abs(determinant(r.U)) == 1 and abs(determinant(r.V)) == 1
    assert matmul(r.U, r.U_inv, m) == identity(m)
    assert matmul(r.V, r.V_inv, n) == identity(n)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_mod_two_rank_matches_field_rank(case):
    m, n, A = case
    assert smith_normal_form(A, m, n, modulus=2).rank == oracles.rank_mod(A, m, n, 2)

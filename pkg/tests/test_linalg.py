"""Exact Gaussian elimination, cross-checked against sympy."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from oracles import sym_matrix, sym_nullity, sym_rank
from siltkit.fields import QQ, PrimeField
from siltkit.linalg import (
    identity_matrix,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank,
    rref,
    solve,
)

F7 = PrimeField(7)

small_entries = st.integers(min_value=-6, max_value=6).map(Fraction)
small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda r: st.integers(min_value=1, max_value=4).flatmap(
        lambda c: st.lists(
            st.lists(small_entries, min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def test_rank_of_identity():
    assert rank(QQ, identity_matrix(QQ, 4)) == 4


def test_rank_matches_sympy_on_a_singular_matrix():
    m = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert rank(QQ, m) == 1 == sym_rank(m)


def test_kernel_of_zero_map_needs_explicit_width():
    vectors = kernel_basis(QQ, [], ncols=3)
    assert len(vectors) == 3


def test_kernel_vectors_lie_in_the_kernel():
    m = [[Fraction(1), Fraction(1), Fraction(0)], [Fraction(0), Fraction(1), Fraction(1)]]
    for v in kernel_basis(QQ, m):
        assert all(c == 0 for c in mat_vec(QQ, m, v))
    assert len(kernel_basis(QQ, m)) == sym_nullity(m, 3)


def test_solve_consistent_and_inconsistent():
    m = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]]
    x = solve(QQ, m, [Fraction(5), Fraction(2)])
    assert mat_vec(QQ, m, x) == [Fraction(5), Fraction(2)]
    singular = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert solve(QQ, singular, [Fraction(0), Fraction(1)]) is None


def test_prime_field_rank():
    # over F_7 the matrix [[1,3],[3,2]] has determinant 2*1 - 9 = -7 = 0
    m = [[F7.coerce(1), F7.coerce(3)], [F7.coerce(3), F7.coerce(2)]]
    assert rank(F7, m) == 1


@settings(max_examples=60)
@given(small_matrices)
def test_rank_agrees_with_sympy(m):
    assert rank(QQ, m) == sym_rank(m)


@settings(max_examples=60)
@given(small_matrices)
def test_rank_nullity(m):
    cols = len(m[0])
    assert rank(QQ, m) + len(kernel_basis(QQ, m)) == cols


@settings(max_examples=60)
@given(small_matrices)
def test_rref_is_a_row_equivalent_echelon_form(m):
    reduced, pivots = rref(QQ, m)
    assert len(pivots) == rank(QQ, m) == sym_rank(reduced)
    for row_index, col in enumerate(pivots):
        assert reduced[row_index][col] == Fraction(1)
        for other in range(len(reduced)):
            if other != row_index:
                assert reduced[other][col] == Fraction(0)


def _matrix(rows: int, cols: int):
    return st.lists(
        st.lists(small_entries, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    )


compatible_pairs = st.tuples(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=3),
).flatmap(lambda d: st.tuples(_matrix(d[0], d[1]), _matrix(d[1], d[2])))


@settings(max_examples=40)
@given(compatible_pairs)
def test_matrix_product_agrees_with_sympy(pair):
    a, b = pair
    ours = mat_mul(QQ, a, b)
    theirs = sym_matrix(a) * sym_matrix(b)
    for i in range(len(ours)):
        for j in range(len(ours[0])):
            assert Fraction(int(theirs[i, j].p), int(theirs[i, j].q)) == ours[i][j]

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fredprofile.errors import NotContained, NotInvariant
from fredprofile.linalg import (
    ExactMatrix,
    SubspaceBasis,
    image_basis,
    inverse,
    kernel_basis,
    quotient_dim,
    rank,
    restrict,
    rref,
    subspace_intersection,
    subspace_sum,
)


def mat(rows):
    return ExactMatrix.from_rows([[F(x) for x in r] for r in rows])


def _rows(d):
    return st.lists(
        st.lists(st.integers(-4, 4), min_size=d, max_size=d), min_size=d, max_size=d
    )


def small_matrix(max_dim=4):
    return st.integers(1, max_dim).flatmap(_rows).map(mat)


def matrix_pair(max_dim=3):
    return st.integers(1, max_dim).flatmap(
        lambda d: st.tuples(_rows(d).map(mat), _rows(d).map(mat))
    )


def test_matmul_and_power():
    a = mat([[1, 2], [3, 4]])
    b = mat([[0, 1], [1, 0]])
    assert (a @ b).to_rows() == [[F(2), F(1)], [F(4), F(3)]]
    assert a.power(0).to_rows() == ExactMatrix.identity(2).to_rows()
    assert a.power(2).to_rows() == (a @ a).to_rows()


def test_rref_known():
    r, pivots, rk = rref(mat([[1, 2, 1], [2, 4, 0], [0, 0, 1]]))
    assert rk == 2
    assert pivots == (0, 2)
    assert r.to_rows()[0] == [F(1), F(2), F(0)]
    assert r.to_rows()[1] == [F(0), F(0), F(1)]


def test_kernel_canonical_representative():
    k = kernel_basis(mat([[1, 2], [2, 4]]))
    assert k.dim == 1
    assert k.vectors == ((F(1), F(-1, 2)),)


def test_kernel_of_invertible_is_zero():
    assert kernel_basis(mat([[1, 1], [0, 1]])).dim == 0


def test_image_basis_spans_columns():
    m = mat([[1, 2, 3], [0, 0, 1], [0, 0, 2]])
    img = image_basis(m)
    assert img.dim == 2
    for j in range(3):
        assert img.contains(m.column(j))


def test_inverse_round_trip():
    m = mat([[2, 1], [1, 1]])
    assert (m @ inverse(m)).to_rows() == ExactMatrix.identity(2).to_rows()
    with pytest.raises(ValueError):
        inverse(mat([[1, 2], [2, 4]]))


def test_subspace_membership_and_coordinates():
    b = SubspaceBasis.from_vectors(3, [(F(1), F(0), F(1)), (F(0), F(1), F(0))])
    assert b.contains((F(2), F(3), F(2)))
    assert not b.contains((F(0), F(0), F(1)))
    assert b.coordinates((F(2), F(3), F(2))) == (F(2), F(3))
    assert b.coordinates((F(0), F(0), F(1))) is None


def test_quotient_dim_requires_containment():
    small = SubspaceBasis.from_vectors(2, [(F(1), F(0))])
    other = SubspaceBasis.from_vectors(2, [(F(0), F(1))])
    assert quotient_dim(small, SubspaceBasis.full(2)) == 1
    with pytest.raises(NotContained):
        quotient_dim(other, small)


def test_restrict_requires_invariance():
    m = mat([[0, 1], [0, 0]])
    inv = SubspaceBasis.from_vectors(2, [(F(1), F(0))])
    blk = restrict(m, inv)
    assert blk.to_rows() == [[F(0)]]
    not_inv = SubspaceBasis.from_vectors(2, [(F(0), F(1))])
    with pytest.raises(NotInvariant):
        restrict(m, not_inv)


def test_restrict_composes_with_application():
    m = mat([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
    b = SubspaceBasis.from_vectors(3, [(F(1), F(0), F(0)), (F(0), F(1), F(0))])
    blk = restrict(m, b)
    # column j of the block holds the coordinates of m applied to basis vector j
    for j, v in enumerate(b.vectors):
        image = m.apply(v)
        coords = b.coordinates(image)
        assert coords == tuple(blk.at(i, j) for i in range(blk.rows))


@settings(max_examples=60)
@given(small_matrix())
def test_rank_nullity(m):
    assert kernel_basis(m).dim + rank(m) == m.cols


@settings(max_examples=60)
@given(small_matrix())
def test_rank_equals_transpose_rank(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=60)
@given(small_matrix())
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m).vectors:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=40)
@given(matrix_pair())
def test_grassmann_identity(pair):
    m1, m2 = pair
    a = image_basis(m1)
    b = image_basis(m2)
    s = subspace_sum(a, b)
    i = subspace_intersection(a, b)
    assert a.dim + b.dim == s.dim + i.dim
    assert i.is_subspace_of(a) and i.is_subspace_of(b)
    assert a.is_subspace_of(s) and b.is_subspace_of(s)


@settings(max_examples=40)
@given(small_matrix(4))
def test_from_vectors_is_canonical(m):
    b = image_basis(m)
    again = SubspaceBasis.from_vectors(b.ambient_dim, list(b.vectors))
    assert again == b


@settings(max_examples=40)
@given(small_matrix(4))
def test_image_of_power_is_invariant(m):
    img = image_basis(m @ m)
    blk = restrict(m, img)
    assert blk.rows == img.dim

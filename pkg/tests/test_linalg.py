from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weakhopf.errors import NonUniqueSolution
from weakhopf.linalg import Matrix, SubspaceBasis, kron

rationals = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)


def mat2(entries):
    return Matrix([entries[:2], entries[2:]])


matrices2 = st.builds(mat2, st.lists(rationals, min_size=4, max_size=4))
vectors2 = st.tuples(rationals, rationals)


def test_kron_identity():
    assert kron(Matrix.identity(2), Matrix.identity(2)) == Matrix.identity(4)


def test_kron_permutation_blocks():
    swap = Matrix([[0, 1], [1, 0]])
    k = kron(swap, Matrix.identity(2))
    expected = Matrix(
        [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
    )
    assert k == expected


@settings(max_examples=40)
@given(matrices2, matrices2, matrices2, matrices2)
def test_kron_mixed_product(a, b, c, d):
    # oracle: multiply first, then take the tensor product
    assert kron(a, b) * kron(c, d) == kron(a * c, b * d)


@settings(max_examples=25)
@given(matrices2, matrices2, matrices2)
def test_kron_associative_after_regrouping(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


def test_kernel_of_identity_is_empty():
    assert Matrix.identity(2).kernel_basis().dim == 0


def test_kernel_of_zero_is_everything():
    basis = Matrix.zero(2, 2).kernel_basis()
    assert basis.dim == 2
    assert basis.vectors == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def test_kernel_of_row():
    a = Matrix([[1, 1]])
    basis = a.kernel_basis()
    assert basis.dim == 1
    # canonical form has a leading one
    assert basis.vectors == ((Fraction(1), Fraction(-1)),)
    assert a.apply(basis.vectors[0]) == (Fraction(0),)


@settings(max_examples=40)
@given(st.lists(rationals, min_size=12, max_size=12))
def test_kernel_vectors_annihilate(entries):
    a = Matrix([entries[0:4], entries[4:8], entries[8:12]])
    basis = a.kernel_basis()
    for v in basis.vectors:
        assert all(x == 0 for x in a.apply(v))
    # rank-nullity, exactly
    assert a.rank() + basis.dim == a.cols


def test_solve_identity():
    b = (Fraction(3), Fraction(-1, 2))
    assert Matrix.identity(2).solve(b) == b


def test_solve_inconsistent_rows():
    assert Matrix([[1, 1], [2, 2]]).solve((1, 3)) is None


def test_solve_unique_flag():
    with pytest.raises(NonUniqueSolution):
        Matrix([[1, 1], [2, 2]]).solve((1, 2), unique=True)


@settings(max_examples=40)
@given(matrices2, vectors2)
def test_solve_substitute_back(m, v):
    rhs = m.apply(v)
    x = m.solve(rhs)
    assert x is not None
    assert m.apply(x) == rhs


def test_subspace_membership_and_equality():
    b1 = SubspaceBasis.from_spanning(3, [(1, 1, 0), (0, 0, 1)])
    b2 = SubspaceBasis.from_spanning(3, [(2, 2, 2), (1, 1, -1)])
    assert b1 == b2
    assert b1.contains((3, 3, 5))
    assert not b1.contains((1, 0, 0))
    coords = b1.coordinates((3, 3, 5))
    assert coords is not None
    rebuilt = [Fraction(0)] * 3
    for c, vec in zip(coords, b1.vectors):
        rebuilt = [r + c * x for r, x in zip(rebuilt, vec)]
    assert tuple(rebuilt) == (3, 3, 5)


def test_inverse_round_trip():
    m = Matrix([[1, 2], [3, 5]])
    inv = m.inverse()
    assert inv is not None
    assert (m * inv).is_identity() and (inv * m).is_identity()
    assert Matrix([[1, 2], [2, 4]]).inverse() is None

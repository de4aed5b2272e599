from fractions import Fraction

import pytest

from hopfrb.linalg import (Matrix, NoSolutionError, Subspace, image_basis,
                           kernel_basis, rref, section_of, solve,
                           tensor_contract, unit_vec, vec, zero_vec)


def test_rref_is_canonical():
    rows = [vec([2, 4, 2]), vec([1, 2, 3])]
    reduced, pivots = rref(rows)
    assert pivots == [0, 2]
    assert reduced == [vec([1, 2, 0]), vec([0, 0, 1])]
    # any spanning set of the same space reduces to the same rows
    other = [vec([3, 6, 5]), vec([1, 2, 1]), vec([0, 0, 4])]
    reduced2, _ = rref(other)
    assert reduced2 == reduced


def test_subspace_coords_membership_and_roundtrip():
    s = Subspace(3, [vec([1, 0, 1]), vec([0, 1, 0])])
    assert s.dim == 2
    v = vec([2, 3, 2])
    c = s.coords(v)
    assert c is not None and s.from_coords(c) == v
    assert s.coords(vec([1, 0, 0])) is None
    assert not s.contains(vec([0, 0, 1]))


def test_subspace_equality_is_syntactic_on_canonical_bases():
    a = Subspace(2, [vec([1, 1]), vec([2, 2])])
    b = Subspace(2, [vec([3, 3])])
    assert a == b and a.dim == 1


def test_matrix_products_and_rank():
    m = Matrix(2, 2, [[1, 2], [3, 4]])
    assert m.mul(Matrix.identity(2)) == m
    assert m.apply(vec([1, 0])) == vec([1, 3])
    assert m.rank() == 2
    assert Matrix(2, 2, [[1, 2], [2, 4]]).rank() == 1


def test_kernel_and_image():
    m = Matrix(2, 3, [[1, 0, 1], [0, 1, 1]])
    k = kernel_basis(m)
    assert k.dim == 1
    assert m.apply(list(k.basis[0])) == zero_vec(2)
    assert image_basis(m).dim == 2


def test_solve_deterministic_and_inconsistent():
    m = Matrix(2, 3, [[1, 0, 1], [0, 1, 1]])
    v = solve(m, vec([1, 1]))
    assert v == vec([1, 1, 0])  # free variable pinned to zero
    singular = Matrix(2, 2, [[1, 1], [1, 1]])
    assert solve(singular, vec([1, 0])) is None


def test_section_of_projection_onto_axis():
    m = Matrix(2, 2, [[1, 0], [0, 0]])  # projection onto first coordinate
    axis = Subspace(2, [vec([1, 0])])
    sigma = section_of(m, axis)
    assert sigma.col(0) == vec([1, 0])
    assert m.mul(sigma).col(0) == vec([1, 0])


def test_section_of_outside_image_raises():
    m = Matrix(2, 2, [[1, 0], [0, 0]])
    with pytest.raises(NoSolutionError):
        section_of(m, Subspace(2, [vec([0, 1])]))


def test_tensor_contract_modes():
    t = {(0, 1): Fraction(2), (1, 0): Fraction(3)}
    full = tensor_contract(t, 2, [vec([1, 1]), vec([1, 1])])
    assert full == Fraction(5)
    one_free = tensor_contract(t, 2, [vec([1, 0]), None], free_dim=2)
    assert one_free == vec([0, 2])
    sparse = tensor_contract(t, 2, [None, None])
    assert sparse == t

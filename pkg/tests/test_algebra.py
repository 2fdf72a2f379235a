import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from lietriple import (
    DimensionMismatchError,
    LieAlgebraStructure,
    abelian,
    ad,
    bracket,
    coad,
    heisenberg5,
    pair,
    so3,
    validate_structure,
)

ALGEBRAS = [so3(), heisenberg5(), abelian(4)]

_coords3 = arrays(
    np.float64, (3,), elements=st.floats(min_value=-10.0, max_value=10.0)
)


def test_so3_bracket_is_cross_product(rng):
    alg = so3()
    for _ in range(200):
        X, Y = rng.standard_normal(3), rng.standard_normal(3)
        npt.assert_allclose(bracket(alg, X, Y), np.cross(X, Y), atol=1e-14)


def test_so3_basis_brackets():
    alg = so3()
    e = np.eye(3)
    npt.assert_array_equal(bracket(alg, e[0], e[1]), e[2])
    npt.assert_array_equal(bracket(alg, e[1], e[2]), e[0])
    npt.assert_array_equal(bracket(alg, e[2], e[0]), e[1])


def test_heisenberg5_brackets():
    alg = heisenberg5()
    e = np.eye(5)
    npt.assert_array_equal(bracket(alg, e[0], e[1]), e[4])
    npt.assert_array_equal(bracket(alg, e[2], e[3]), e[4])
    npt.assert_array_equal(bracket(alg, e[1], e[0]), -e[4])
    # e5 is central
    for i in range(5):
        npt.assert_array_equal(bracket(alg, e[4], e[i]), np.zeros(5))


@settings(max_examples=50, deadline=None)
@given(X=_coords3, Y=_coords3, Z=_coords3, a=st.floats(-5.0, 5.0))
def test_bracket_bilinear_antisymmetric_hypothesis(X, Y, Z, a):
    alg = so3()
    npt.assert_allclose(
        bracket(alg, a * X + Y, Z),
        a * bracket(alg, X, Z) + bracket(alg, Y, Z),
        atol=1e-10,
    )
    npt.assert_allclose(bracket(alg, X, Y), -bracket(alg, Y, X), atol=1e-12)


@pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
def test_ad_matrix_matches_bracket(alg, rng):
    for _ in range(50):
        X, Y = rng.standard_normal(alg.dim), rng.standard_normal(alg.dim)
        npt.assert_allclose(ad(alg, X) @ Y, bracket(alg, X, Y), atol=1e-13)


@pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
def test_coad_duality_identity(alg, rng):
    # <ad*_X A, Y> = <A, [X, Y]> is the defining property
    for _ in range(100):
        X, Y = rng.standard_normal(alg.dim), rng.standard_normal(alg.dim)
        A = rng.standard_normal(alg.dim)
        assert abs(pair(coad(alg, X, A), Y) - pair(A, bracket(alg, X, Y))) < 1e-12


def test_coad_so3_worked_example():
    alg = so3()
    e = np.eye(3)
    # ad*_{e1} eps2 = -eps3 under <ad*_X A, Y> = <A, [X, Y]>
    npt.assert_array_equal(coad(alg, e[0], e[1]), -e[2])
    # and the cross-product shortcut A x X
    for X, A in (((1.0, 2.0, 3.0), (0.5, -1.0, 2.0)),):
        npt.assert_allclose(
            coad(alg, np.array(X), np.array(A)),
            np.cross(A, X),
            atol=1e-15,
        )


def test_pair_is_coordinate_dot():
    assert pair(np.array([1.0, 2.0, 3.0]), np.array([4.0, 5.0, 6.0])) == 32.0
    with pytest.raises(DimensionMismatchError):
        pair(np.ones(3), np.ones(4))


@pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
def test_validate_structure_accepts_builtin(alg):
    report = validate_structure(alg)
    assert report.passed
    assert report.antisymmetry_residual <= 1e-15
    assert report.jacobi_residual <= 1e-15


def test_validate_structure_flags_antisymmetry_violation():
    c = np.zeros((3, 3, 3))
    c[0, 1, 2] = c[1, 0, 2] = 1.0  # symmetric instead of antisymmetric
    report = validate_structure(LieAlgebraStructure(3, c))
    assert not report.passed
    assert report.antisymmetry_residual == 2.0


def test_validate_structure_flags_jacobi_violation():
    # antisymmetric constants that are not a Lie algebra
    c = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0)):
        c[i, j, k] = 1.0
        c[j, i, k] = -1.0
    c[2, 0, 0] = 1.0
    c[0, 2, 0] = -1.0
    report = validate_structure(LieAlgebraStructure(3, c))
    assert report.antisymmetry_residual <= 1e-15
    assert report.jacobi_residual > 0.1


def test_structure_shape_and_dim_validation():
    with pytest.raises(ValueError):
        LieAlgebraStructure(3, np.zeros((3, 3)))
    with pytest.raises(ValueError):
        LieAlgebraStructure(0, np.zeros((0, 0, 0)))
    alg = so3()
    with pytest.raises(DimensionMismatchError):
        alg.coords([1.0, 2.0])


def test_basis_vectors():
    alg = heisenberg5()
    for i in range(5):
        e = alg.basis(i)
        assert e[i] == 1.0 and np.sum(np.abs(e)) == 1.0

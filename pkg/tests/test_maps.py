import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from lietriple import (
    PointTTG,
    PointTTsG,
    PointTsTG,
    PointTsTsG,
    ProjectionMismatchError,
    alpha,
    alpha_inv,
    beta,
    beta_inv,
    bracket,
    constant_field,
    exp,
    field_bracket,
    gamma,
    gamma_inv,
    kappa,
    multiply,
    omega_at,
    pair,
    so3,
    so3_group,
    theta,
    trace_coefficient_field,
    tstg_pairing,
    tstst_pairing,
    tt_pairing,
)
from conftest import random_element

E = np.eye(3)

_coords3 = arrays(
    np.float64, (3,), elements=st.floats(min_value=-10.0, max_value=10.0)
)


# ---------------------------------------------------------------------------
# Worked examples at the identity of SO(3)
# ---------------------------------------------------------------------------


def test_kappa_basis_example(so3_alg, so3_spec):
    g = so3_spec.identity()
    v = PointTTG(g, E[0], E[1], np.zeros(3))
    image = kappa(so3_alg, v)
    npt.assert_array_equal(image.X, E[1])
    npt.assert_array_equal(image.Y, E[0])
    npt.assert_array_equal(image.Z, -E[2])


def test_alpha_basis_example(so3_alg, so3_spec):
    g = so3_spec.identity()
    # (g, eps1, e2, eps3): ad*_{e2} eps1 = eps1 x e2 = eps3, so the
    # force slot cancels and the image is (g, e2, 0, eps1)
    rho = PointTTsG(g, E[0], E[1], E[2])
    w = alpha(so3_alg, rho)
    npt.assert_array_equal(w.X, E[1])
    npt.assert_array_equal(w.A, np.zeros(3))
    npt.assert_array_equal(w.B, E[0])


def test_beta_basis_example(so3_alg, so3_spec):
    g = so3_spec.identity()
    rho = PointTTsG(g, E[0], E[1], np.zeros(3))
    u = beta(so3_alg, rho)
    npt.assert_array_equal(u.A, E[0])
    npt.assert_array_equal(u.B, E[2])
    npt.assert_array_equal(u.X, E[1])


def test_gamma_basis_example(so3_alg, so3_spec):
    g = so3_spec.identity()
    u = PointTsTsG(g, E[0], E[1], E[2])
    w = gamma(so3_alg, u)
    npt.assert_array_equal(w.X, E[2])
    npt.assert_array_equal(w.A, -E[1])
    npt.assert_array_equal(w.B, E[0])


def test_omega_basis_example(so3_alg, so3_spec):
    g = so3_spec.identity()
    base = (g, E[0])
    # phi = (e2, 0), psi = (0, eps3): omega = <0,0> - <eps3,e2> - <eps1,[e2,0]>
    assert omega_at(so3_alg, base, (E[1], np.zeros(3)), (np.zeros(3), E[2])) == 0.0
    # phi = (e1, 0), psi = (e2, 0) at A = eps3: -<eps3, [e1, e2]> = -1
    assert omega_at(so3_alg, (g, E[2]), (E[0], np.zeros(3)), (E[1], np.zeros(3))) == -1.0


def test_theta_is_momentum_velocity_pairing(so3_spec, rng):
    g = so3_spec.identity()
    A, X, B = rng.standard_normal((3, 3))
    rho = PointTTsG(g, A, X, B)
    assert theta(rho) == pair(A, X)


# ---------------------------------------------------------------------------
# Identities on random points (both groups)
# ---------------------------------------------------------------------------


def _random_ttsg(alg, spec, rng):
    return PointTTsG(
        random_element(spec, rng), *rng.standard_normal((3, alg.dim))
    )


def test_kappa_is_involution(alg_and_group, rng):
    alg, spec = alg_and_group
    for _ in range(100):
        v = PointTTG(random_element(spec, rng), *rng.standard_normal((3, alg.dim)))
        vv = kappa(alg, kappa(alg, v))
        npt.assert_allclose(vv.X, v.X, atol=1e-14)
        npt.assert_allclose(vv.Y, v.Y, atol=1e-14)
        npt.assert_allclose(vv.Z, v.Z, atol=1e-14)


@settings(max_examples=50, deadline=None)
@given(X=_coords3, Y=_coords3, Z=_coords3)
def test_kappa_involution_hypothesis(X, Y, Z):
    alg = so3()
    g = so3_group().identity()
    v = PointTTG(g, X, Y, Z)
    vv = kappa(alg, kappa(alg, v))
    npt.assert_allclose(vv.Z, v.Z, atol=1e-12)


def test_kappa_fixes_diagonal(alg_and_group, rng):
    alg, spec = alg_and_group
    X = rng.standard_normal(alg.dim)
    Z = rng.standard_normal(alg.dim)
    v = PointTTG(random_element(spec, rng), X, X, Z)
    image = kappa(alg, v)
    npt.assert_array_equal(image.Y, v.X)
    npt.assert_allclose(image.Z, v.Z, atol=1e-15)  # [X, X] = 0


def test_alpha_inverse_roundtrip(alg_and_group, rng):
    alg, spec = alg_and_group
    for _ in range(50):
        rho = _random_ttsg(alg, spec, rng)
        back = alpha_inv(alg, alpha(alg, rho))
        npt.assert_allclose(back.A, rho.A, atol=1e-14)
        npt.assert_array_equal(back.X, rho.X)
        npt.assert_allclose(back.B, rho.B, atol=1e-14)


def test_beta_inverse_roundtrip(alg_and_group, rng):
    alg, spec = alg_and_group
    for _ in range(50):
        rho = _random_ttsg(alg, spec, rng)
        back = beta_inv(alg, beta(alg, rho))
        npt.assert_array_equal(back.A, rho.A)
        npt.assert_array_equal(back.X, rho.X)
        npt.assert_allclose(back.B, rho.B, atol=1e-14)


def test_gamma_inverse_roundtrip(alg_and_group, rng):
    alg, spec = alg_and_group
    u = PointTsTsG(random_element(spec, rng), *rng.standard_normal((3, alg.dim)))
    back = gamma_inv(alg, gamma(alg, u))
    npt.assert_array_equal(back.A, u.A)
    npt.assert_array_equal(back.B, u.B)
    npt.assert_array_equal(back.X, u.X)


def test_beta_factors_through_gamma(alg_and_group, rng):
    # beta = gamma^-1 o alpha, bit-exact in floating point
    alg, spec = alg_and_group
    for _ in range(100):
        rho = _random_ttsg(alg, spec, rng)
        direct = beta(alg, rho)
        routed = gamma_inv(alg, alpha(alg, rho))
        npt.assert_array_equal(direct.A, routed.A)
        npt.assert_array_equal(direct.B, routed.B)
        npt.assert_array_equal(direct.X, routed.X)


def test_alpha_duality_pairing(alg_and_group, rng):
    # <alpha(rho), v> = <<rho, kappa(v)>> over matching projections
    alg, spec = alg_and_group
    for _ in range(100):
        g = random_element(spec, rng)
        X = rng.standard_normal(alg.dim)
        rho = PointTTsG(g, rng.standard_normal(alg.dim), X,
                        rng.standard_normal(alg.dim))
        v = PointTTG(g, X, rng.standard_normal(alg.dim),
                     rng.standard_normal(alg.dim))
        lhs = tstg_pairing(alpha(alg, rho), v)
        rhs = tt_pairing(rho, kappa(alg, v))
        assert abs(lhs - rhs) < 1e-12


def test_beta_is_omega_musical(alg_and_group, rng):
    # pairing beta(phi) against psi returns omega(psi, phi)
    alg, spec = alg_and_group
    for _ in range(100):
        g = random_element(spec, rng)
        A = rng.standard_normal(alg.dim)
        phi = PointTTsG(g, A, rng.standard_normal(alg.dim),
                        rng.standard_normal(alg.dim))
        psi = PointTTsG(g, A, rng.standard_normal(alg.dim),
                        rng.standard_normal(alg.dim))
        lhs = tstst_pairing(beta(alg, phi), psi)
        rhs = omega_at(alg, (g, A), (psi.X, psi.B), (phi.X, phi.B))
        assert abs(lhs - rhs) < 1e-12


def test_omega_antisymmetric(so3_alg, so3_spec, rng):
    g = so3_spec.identity()
    A = rng.standard_normal(3)
    phi = (rng.standard_normal(3), rng.standard_normal(3))
    psi = (rng.standard_normal(3), rng.standard_normal(3))
    lhs = omega_at(so3_alg, (g, A), phi, psi)
    rhs = omega_at(so3_alg, (g, A), psi, phi)
    assert abs(lhs + rhs) < 1e-13


def test_pairings_require_matching_projections(so3_alg, so3_spec, rng):
    g = so3_spec.identity()
    h = exp(so3_spec, [0.1, 0.0, 0.0])
    X = rng.standard_normal(3)
    rho = PointTTsG(g, E[0], X, E[1])
    v_bad_g = PointTTG(h, X, X, E[2])
    with pytest.raises(ProjectionMismatchError):
        tt_pairing(rho, v_bad_g)
    # middle slots must match exactly, not within a tolerance
    v_bad_mid = PointTTG(g, X, X + 1e-13, E[2])
    with pytest.raises(ProjectionMismatchError):
        tt_pairing(rho, v_bad_mid)
    with pytest.raises(ProjectionMismatchError):
        tstg_pairing(PointTsTG(g, X, E[0], E[1]), PointTTG(g, X + 1e-13, X, X))
    with pytest.raises(ProjectionMismatchError):
        tstst_pairing(PointTsTsG(g, E[0], E[1], X), PointTTsG(g, E[1], X, X))


# ---------------------------------------------------------------------------
# Vector-field bracket
# ---------------------------------------------------------------------------


def test_field_bracket_of_constants_is_algebra_bracket(alg_and_group, rng):
    alg, spec = alg_and_group
    for _ in range(20):
        X, Y = rng.standard_normal((2, alg.dim))
        got = field_bracket(
            alg, constant_field(X), constant_field(Y), random_element(spec, rng)
        )
        npt.assert_allclose(got, bracket(alg, X, Y), atol=1e-14)


def _matrix_entry_flow_derivative(field, f, g, h=1e-4):
    """(field f)(g): derivative of f along the field's integral curve."""
    spec = g.group
    X = field.X(g)
    fp = f(multiply(g, exp(spec, X, h)))
    fm = f(multiply(g, exp(spec, X, -h)))
    return (fp - fm) / (2.0 * h)


def _commutator_flow_oracle(spec, xi, eta, g, h=1e-4):
    """[xi, eta] at g via nested derivatives of the matrix entries.

    Applies xi(eta(f)) - eta(xi(f)) to every entry function
    f_ab(g) = g.mat[a, b], assembles the resulting matrix V, and reads
    the bracket off as the trivialized coefficient of V at g.
    """
    d = spec.mat_dim
    V = np.zeros((d, d))
    for a in range(d):
        for b in range(d):
            def f(gg, a=a, b=b):
                return gg.mat[a, b]

            def eta_f(gg):
                return _matrix_entry_flow_derivative(eta, f, gg, h)

            def xi_f(gg):
                return _matrix_entry_flow_derivative(xi, f, gg, h)

            V[a, b] = _matrix_entry_flow_derivative(
                xi, eta_f, g, h
            ) - _matrix_entry_flow_derivative(eta, xi_f, g, h)
    return spec.from_matrix(np.linalg.solve(g.mat, V), tol=1e-4)


def test_field_bracket_against_flow_commutator(so3_alg, so3_spec, rng):
    # independent oracle: second-order flow derivatives of matrix entries
    xi = trace_coefficient_field(0.5 * rng.standard_normal((3, 3)), E[0])
    eta = constant_field(np.array([0.0, 1.0, 0.0]))
    for _ in range(3):
        g = random_element(so3_spec, rng)
        got = field_bracket(so3_alg, xi, eta, g)
        oracle = _commutator_flow_oracle(so3_spec, xi, eta, g)
        npt.assert_allclose(got, oracle, atol=1e-4)


def test_field_bracket_antisymmetric(alg_and_group, rng):
    alg, spec = alg_and_group
    d = spec.mat_dim
    xi = trace_coefficient_field(
        0.4 * rng.standard_normal((d, d)), rng.standard_normal(alg.dim)
    )
    eta = trace_coefficient_field(
        0.4 * rng.standard_normal((d, d)), rng.standard_normal(alg.dim)
    )
    for _ in range(10):
        g = random_element(spec, rng)
        lhs = field_bracket(alg, xi, eta, g)
        rhs = field_bracket(alg, eta, xi, g)
        npt.assert_allclose(lhs, -rhs, atol=1e-10)


def test_field_bracket_uses_analytic_derivative_hook(so3_alg, so3_spec, rng):
    # a field with a wrong analytic hook must produce the wrong bracket,
    # proving the hook (not finite differences) is used when present
    from lietriple import TrivializedField

    V = np.array([1.0, 0.0, 0.0])
    honest = trace_coefficient_field(np.eye(3), V)
    lying = TrivializedField(
        X=honest.X, dX=lambda g, W: np.full(3, 100.0)
    )
    g = random_element(so3_spec, rng)
    eta = constant_field(np.array([0.0, 1.0, 0.0]))
    a = field_bracket(so3_alg, honest, eta, g)
    b = field_bracket(so3_alg, lying, eta, g)
    assert np.max(np.abs(a - b)) > 1.0

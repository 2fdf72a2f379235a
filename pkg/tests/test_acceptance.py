"""End-to-end acceptance checks.

Each test prints one summary line — criterion number, PASS or FAIL, the
measured quantity and its tolerance — before asserting, so the complete
scoreboard is visible in the test output even when a criterion fails.
"""

import numpy as np

from lietriple import (
    BodySpec,
    InertiaForm,
    PointTTG,
    PointTTsG,
    TrivializedLagrangian,
    alpha,
    alpha_reduced,
    beta,
    beta_reduced,
    classical_inertia_matrix,
    coad,
    euler_rhs,
    exp,
    gamma_inv,
    heisenberg5_group,
    in_C,
    in_K,
    inertia_from_body,
    inertia_iso_inv,
    integrate_reduced,
    integrate_with_reconstruction,
    kappa,
    legendre_transform,
    omega_at,
    project_C,
    project_K,
    project_TTsG,
    reduced_dynamics,
    reduced_hamiltonian_field,
    rigid_body_hamiltonian,
    rigid_body_lagrangian,
    so3_group,
    symmetric_top_oracle,
    tstg_pairing,
    tstst_pairing,
    tt_pairing,
)

GROUPS = (so3_group(), heisenberg5_group())


def _line(num, ok, detail):
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def _residual_line(num, description, worst, tol):
    detail = f"{description}: max residual {worst:.3e} (tolerance {tol:.1e})"
    _line(num, worst <= tol, detail)


def _element(spec, rng):
    return exp(spec, rng.standard_normal(spec.algebra.dim))


def _diff(*pairs):
    return max(float(np.max(np.abs(a - b))) for a, b in pairs)


def _central(f, x, i, step=1e-6):
    dx = np.zeros_like(x)
    dx[i] = step
    return (f(x + dx) - f(x - dx)) / (2.0 * step)


def test_criterion_01_flip_is_involution():
    rng = np.random.default_rng(101)
    worst = 0.0
    for spec in GROUPS:
        alg = spec.algebra
        for _ in range(1000):
            g = _element(spec, rng)
            v = PointTTG(g, *(rng.standard_normal(alg.dim) for _ in range(3)))
            vv = kappa(alg, kappa(alg, v))
            if not np.array_equal(vv.g.mat, v.g.mat):
                worst = np.inf
                break
            worst = max(worst, _diff((vv.X, v.X), (vv.Y, v.Y), (vv.Z, v.Z)))
    _residual_line(1, "tangent flip squares to the identity (1000 points, "
                      "rotation and nilpotent groups)", worst, 1e-14)


def test_criterion_02_alpha_is_dual_to_flip():
    rng = np.random.default_rng(102)
    worst = 0.0
    for spec in GROUPS:
        alg = spec.algebra
        for _ in range(1000):
            g = _element(spec, rng)
            X = rng.standard_normal(alg.dim)
            rho = PointTTsG(g, rng.standard_normal(alg.dim), X,
                            rng.standard_normal(alg.dim))
            v = PointTTG(g, X, rng.standard_normal(alg.dim),
                         rng.standard_normal(alg.dim))
            lhs = tstg_pairing(alpha(alg, rho), v)
            rhs = tt_pairing(rho, kappa(alg, v))
            worst = max(worst, abs(lhs - rhs))
    _residual_line(2, "pairing duality <alpha(rho), v> = <<rho, flip(v)>> "
                      "(1000 pairs per group)", worst, 1e-12)


def test_criterion_03_beta_factors_through_gamma():
    rng = np.random.default_rng(103)
    worst = 0.0
    for spec in GROUPS:
        alg = spec.algebra
        for _ in range(1000):
            g = _element(spec, rng)
            rho = PointTTsG(g, *(rng.standard_normal(alg.dim) for _ in range(3)))
            direct = beta(alg, rho)
            routed = gamma_inv(alg, alpha(alg, rho))
            worst = max(worst, _diff((direct.A, routed.A), (direct.B, routed.B),
                                     (direct.X, routed.X)))
    _residual_line(3, "beta equals gamma^-1 after alpha (1000 points per group)",
                   worst, 1e-14)


def test_criterion_04_beta_inverts_the_symplectic_pairing():
    rng = np.random.default_rng(104)
    worst = 0.0
    for spec in GROUPS:
        alg = spec.algebra
        for _ in range(1000):
            g = _element(spec, rng)
            A = rng.standard_normal(alg.dim)
            phi = PointTTsG(g, A, rng.standard_normal(alg.dim),
                            rng.standard_normal(alg.dim))
            psi = PointTTsG(g, A, rng.standard_normal(alg.dim),
                            rng.standard_normal(alg.dim))
            lhs = tstst_pairing(beta(alg, phi), psi)
            rhs = omega_at(alg, (g, A), (psi.X, psi.B), (phi.X, phi.B))
            worst = max(worst, abs(lhs - rhs))
    _residual_line(4, "beta realizes the canonical two-form as a musical map "
                      "(1000 points per group)", worst, 1e-12)


def test_criterion_05_reduction_squares_commute():
    rng = np.random.default_rng(105)
    worst = 0.0
    for spec in GROUPS:
        alg = spec.algebra
        for _ in range(500):
            g = _element(spec, rng)
            X = rng.standard_normal(alg.dim)
            A = rng.standard_normal(alg.dim)
            rho = PointTTsG(g, A, X, coad(alg, X, A))
            direct = project_TTsG(rho)

            w = alpha(alg, rho)
            u = beta(alg, rho)
            if not (in_K(w) and in_C(u)):
                worst = np.inf
                break
            mk, mc = project_K(w), project_C(u)
            via_alpha = alpha_reduced(alg, mk.X, mk.A)
            via_beta = beta_reduced(alg, mc.A, mc.X)
            worst = max(
                worst,
                _diff((mk.X, X), (mk.A, A), (mc.X, X), (mc.A, A),
                      (via_alpha.A, direct.A), (via_alpha.B, direct.B),
                      (via_beta.A, direct.A), (via_beta.B, direct.B)),
            )
    _residual_line(5, "projection and reduction commute through both "
                      "constraint sets (500 points per group)", worst, 1e-12)


def test_criterion_06_three_euler_routes_agree():
    spec = so3_group()
    alg = spec.algebra
    I = InertiaForm(np.diag([1.0, 2.0, 3.0]))
    l = rigid_body_lagrangian(I)
    h = legendre_transform(alg, l)  # Hamiltonian route goes through Legendre
    X0 = np.array([1.0, 1.0, 1.0])
    A0 = I.matrix @ X0
    dt, steps = 1e-3, 10000

    def rhs_hamiltonian(B):
        return reduced_hamiltonian_field(alg, h, B)

    def rhs_lagrangian(B):
        return reduced_dynamics(alg, l, inertia_iso_inv(I, B))

    def rhs_velocity(X):
        return euler_rhs(alg, I, X)

    A_h = integrate_reduced(alg, rhs_hamiltonian, A0, dt, steps).A
    A_l = integrate_reduced(alg, rhs_lagrangian, A0, dt, steps).A
    X_v = integrate_reduced(alg, rhs_velocity, X0, dt, steps).A
    A_v = X_v @ I.matrix.T

    worst = _diff((A_h, A_l), (A_h, A_v), (A_l, A_v))
    _residual_line(6, "momentum, variational and velocity-form integrations "
                      "of the free rigid body coincide on [0, 10]", worst, 1e-8)


def test_criterion_07_symmetric_top_precession_rate():
    spec = so3_group()
    alg = spec.algebra
    I = InertiaForm(np.diag([1.0, 1.0, 2.0]))
    h = rigid_body_hamiltonian(I)
    X0 = np.array([1.0, 0.0, 1.0])
    oracle = symmetric_top_oracle(1.0, 2.0, X0)

    rec = integrate_reduced(
        alg, lambda B: reduced_hamiltonian_field(alg, h, B),
        I.matrix @ X0, 1e-3, 10000, hamiltonian=h,
    )
    T = rec.t[-1]
    X = rec.X[-1]
    phase = np.arctan2(X[1], X[0])
    turns = round((oracle.rate * T - phase) / (2.0 * np.pi))
    measured = (phase + 2.0 * np.pi * turns) / T
    rel = abs(measured - oracle.rate) / abs(oracle.rate)
    detail = (f"symmetric top precession rate {measured:.9f} rad/s vs 1.0 "
              f"(relative error {rel:.3e}, tolerance 1.0e-06)")
    _line(7, rel <= 1e-6, detail)


def test_criterion_08_conservation_and_spatial_momentum():
    spec = so3_group()
    alg = spec.algebra
    I = InertiaForm(np.diag([1.0, 2.0, 3.0]))
    h = rigid_body_hamiltonian(I)
    A0 = I.matrix @ np.array([1.0, 1.0, 1.0])

    def rhs(B):
        return reduced_hamiltonian_field(alg, h, B)

    reduced = integrate_reduced(alg, rhs, A0, 1e-3, 10000, hamiltonian=h)
    energy = (np.max(np.abs(reduced.energy - reduced.energy[0]))
              / abs(reduced.energy[0]))
    casimir = (np.max(np.abs(reduced.casimir - reduced.casimir[0]))
               / abs(reduced.casimir[0]))

    rec = integrate_with_reconstruction(
        spec, alg, rhs, None, A0, 1e-3, 10000, hamiltonian=h,
    )
    spatial = np.einsum("kij,kj->ki", rec.g, rec.A)
    momentum = np.max(np.abs(spatial - spatial[0]))

    ok = energy <= 1e-8 and casimir <= 1e-8 and momentum <= 1e-6
    detail = (f"drift over [0, 10]: energy {energy:.3e}, Casimir "
              f"{casimir:.3e} (tolerance 1.0e-08); spatial momentum "
              f"{momentum:.3e} with reconstruction (tolerance 1.0e-06)")
    _line(8, ok, detail)


def test_criterion_09_inertia_assembly():
    rng = np.random.default_rng(109)
    I = inertia_from_body(BodySpec.cube(2.0, 3.0))
    cube = float(np.max(np.abs(I.matrix - 3.0 * np.eye(3))))

    clouds = 0.0
    for _ in range(100):
        p = int(rng.integers(4, 16))
        body = BodySpec(rng.uniform(0.5, 2.0, size=p), rng.standard_normal((p, 3)))
        diff = inertia_from_body(body).matrix - classical_inertia_matrix(body)
        clouds = max(clouds, float(np.max(np.abs(diff))))
    ok = cube <= 1e-6 and clouds <= 1e-12
    detail = (f"cube inertia closed form residual {cube:.3e} (tolerance "
              f"1.0e-06); pairing vs classical tensor on 100 clouds "
              f"{clouds:.3e} (tolerance 1.0e-12)")
    _line(9, ok, detail)


def test_criterion_10_analytic_gradients_match_finite_differences():
    rng = np.random.default_rng(110)
    spec = so3_group()
    I = InertiaForm(np.diag([1.0, 2.0, 3.0]))
    l = rigid_body_lagrangian(I)
    h = rigid_body_hamiltonian(I)
    P = rng.standard_normal((3, 3))
    L = TrivializedLagrangian(
        lambda g, X: 0.5 * float(X @ I.matrix @ X) + float(np.trace(P @ g.mat)),
        grad_X=lambda g, X: I.matrix @ X,
        grad_g=lambda g, X: np.array(
            [float(np.trace(P @ g.mat @ E)) for E in spec.generators]
        ),
    )
    L_fd = TrivializedLagrangian(lambda g, X: L(g, X))

    worst = 0.0
    for _ in range(100):
        X = rng.standard_normal(3)
        A = rng.standard_normal(3)
        g = _element(spec, rng)
        fd_l = np.array([_central(l, X, i) for i in range(3)])
        fd_h = np.array([_central(h, A, i) for i in range(3)])
        worst = max(
            worst,
            float(np.max(np.abs(l.grad(X) - fd_l))),
            float(np.max(np.abs(h.grad(A) - fd_h))),
            float(np.max(np.abs(L.grad_X(g, X) - L_fd.grad_X(g, X)))),
            float(np.max(np.abs(L.grad_g(g, X) - L_fd.grad_g(g, X)))),
        )
    _residual_line(10, "analytic gradients agree with central differences "
                       "(100 probes)", worst, 1e-5)

"""Seeded property-check suite covering the package invariants.

Each check draws random samples, measures the worst residual of one
documented identity, and compares it against that identity's tolerance.
The same registry backs the ``verify`` CLI subcommand and the test
suite; a given seed always reproduces the same report.
"""

import json
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import fileio, maps, mechanics, reduction, rigidbody
from .algebra import (
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
from .errors import ConfigError
from .groups import (
    Ad,
    exp,
    inverse,
    left_derivative,
    multiply,
    so3_group,
    heisenberg5_group,
    trivialize_tangent,
)

__all__ = ["PropertyResult", "VerifyReport", "run_verification", "CHECK_NAMES"]


@dataclass(frozen=True)
class PropertyResult:
    name: str
    samples: int
    max_residual: float
    tolerance: float
    note: str = ""

    @property
    def passed(self):
        return self.max_residual <= self.tolerance

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = (
            f"{status}  {self.name:<38} n={self.samples:<5d} "
            f"max={self.max_residual:<12.3e} tol={self.tolerance:.1e}"
        )
        if self.note:
            text += f"  ({self.note})"
        return text


@dataclass(frozen=True)
class VerifyReport:
    seed: int
    results: tuple

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r.passed]

    def as_text(self):
        lines = [r.line() for r in self.results]
        lines.append(
            f"{'PASS' if self.passed else 'FAIL'}: "
            f"{len(self.results) - len(self.failures)}/{len(self.results)} "
            f"properties passed (seed={self.seed})"
        )
        return "\n".join(lines)


@dataclass
class _Env:
    rng: np.random.Generator
    samples: int
    pairs: list = field(default_factory=list)  # (algebra, group or None)

    def vec(self, n):
        return self.rng.standard_normal(n)

    def rotation(self):
        spec = self.pairs[0][1]
        w = self.rng.standard_normal(3)
        w *= self.rng.uniform(0.0, np.pi) / np.linalg.norm(w)
        return exp(spec, w)

    def element(self, spec):
        return exp(spec, self.rng.standard_normal(spec.algebra.dim))


_CHECKS = []


def _check(name, tolerance):
    def register(fn):
        _CHECKS.append((name, tolerance, fn))
        return fn

    return register


def _max_over_algebras(env, per_sample):
    worst = 0.0
    for alg, spec in env.pairs:
        for _ in range(env.samples):
            worst = max(worst, float(per_sample(env, alg, spec)))
    return worst


# ---------------------------------------------------------------------------
# Algebra checks
# ---------------------------------------------------------------------------


@_check("algebra-bracket-bilinear", 1e-14)
def _bracket_bilinear(env):
    def sample(env, alg, spec):
        a, b = env.rng.standard_normal(2)
        X, Y, Z = (env.vec(alg.dim) for _ in range(3))
        lhs = bracket(alg, a * X + b * Y, Z)
        rhs = a * bracket(alg, X, Z) + b * bracket(alg, Y, Z)
        return np.max(np.abs(lhs - rhs))

    return _max_over_algebras(env, sample)


@_check("algebra-bracket-antisymmetric", 1e-14)
def _bracket_antisymmetric(env):
    def sample(env, alg, spec):
        X, Y = env.vec(alg.dim), env.vec(alg.dim)
        return np.max(np.abs(bracket(alg, X, Y) + bracket(alg, Y, X)))

    return _max_over_algebras(env, sample)


@_check("algebra-coad-duality", 1e-12)
def _coad_duality(env):
    def sample(env, alg, spec):
        X, Y = env.vec(alg.dim), env.vec(alg.dim)
        A = env.vec(alg.dim)
        return abs(pair(coad(alg, X, A), Y) - pair(A, bracket(alg, X, Y)))

    return _max_over_algebras(env, sample)


@_check("algebra-ad-homomorphism", 1e-12)
def _ad_homomorphism(env):
    def sample(env, alg, spec):
        X, Y = env.vec(alg.dim), env.vec(alg.dim)
        lhs = ad(alg, bracket(alg, X, Y))
        rhs = ad(alg, X) @ ad(alg, Y) - ad(alg, Y) @ ad(alg, X)
        return np.max(np.abs(lhs - rhs))

    return _max_over_algebras(env, sample)


@_check("algebra-structure-residuals", 1e-12)
def _structure_residuals(env):
    worst = 0.0
    for alg in (so3(), heisenberg5(), abelian(4)):
        report = validate_structure(alg)
        worst = max(worst, report.antisymmetry_residual, report.jacobi_residual)
    # A constructed violation must be flagged.
    bad = np.zeros((3, 3, 3))
    bad[0, 1, 2] = bad[1, 0, 2] = 1.0
    if validate_structure(LieAlgebraStructure(3, bad)).passed:
        worst = np.inf
    return worst


@_check("algebra-so3-cross-product", 1e-14)
def _so3_cross(env):
    alg = env.pairs[0][0]
    worst = 0.0
    for _ in range(env.samples):
        X, Y = env.vec(3), env.vec(3)
        worst = max(worst, float(np.max(np.abs(bracket(alg, X, Y) - np.cross(X, Y)))))
    return worst


# ---------------------------------------------------------------------------
# Group checks
# ---------------------------------------------------------------------------


@_check("group-membership-closure", 1e-9)
def _membership_closure(env):
    def sample(env, alg, spec):
        g, h = env.element(spec), env.element(spec)
        worst = 0.0
        for m in (multiply(g, h), inverse(g), exp(spec, env.vec(alg.dim))):
            worst = max(worst, spec.membership_residual(m.mat))
        return worst

    return _max_over_algebras(env, sample)


@_check("group-generator-commutators", 1e-12)
def _generator_commutators(env):
    worst = 0.0
    for alg, spec in env.pairs:
        for i in range(alg.dim):
            for j in range(alg.dim):
                comm = (
                    spec.generators[i] @ spec.generators[j]
                    - spec.generators[j] @ spec.generators[i]
                )
                expected = np.tensordot(alg.c[i, j], spec.generators, axes=1)
                worst = max(worst, float(np.max(np.abs(comm - expected))))
    return worst


@_check("group-trivialize-roundtrip", 1e-12)
def _trivialize_roundtrip(env):
    def sample(env, alg, spec):
        g = env.element(spec)
        X = env.vec(alg.dim)
        v = g.mat @ spec.to_matrix(X)
        _, back = trivialize_tangent(spec, g, v)
        reassembled = g.mat @ spec.to_matrix(back)
        return max(
            float(np.max(np.abs(back - X))),
            float(np.max(np.abs(reassembled - v))),
        )

    return _max_over_algebras(env, sample)


@_check("group-exp-series-agreement", 1e-12)
def _exp_series(env):
    spec = env.pairs[0][1]
    worst = 0.0
    for _ in range(env.samples):
        w = env.rng.standard_normal(3)
        w *= env.rng.uniform(0.0, np.pi) / np.linalg.norm(w)
        K = spec.to_matrix(w)
        series = np.eye(3)
        term = np.eye(3)
        for k in range(1, 25):
            term = term @ K / k
            series = series + term
        worst = max(worst, float(np.max(np.abs(exp(spec, w).mat - series))))
    return worst


@_check("group-exp-flow-property", 1e-12)
def _exp_flow(env):
    def sample(env, alg, spec):
        X = env.vec(alg.dim)
        s, t = env.rng.uniform(-1.0, 1.0, size=2)
        lhs = multiply(exp(spec, X, s), exp(spec, X, t)).mat
        return np.max(np.abs(lhs - exp(spec, X, s + t).mat))

    return _max_over_algebras(env, sample)


@_check("group-ad-from-Ad-difference", 1e-5)
def _ad_from_Ad(env):
    t = 1e-6

    def sample(env, alg, spec):
        X, Y = env.vec(alg.dim), env.vec(alg.dim)
        fd = (Ad(exp(spec, X, t), Y) - Ad(exp(spec, X, -t), Y)) / (2.0 * t)
        return np.max(np.abs(fd - ad(alg, X) @ Y))

    return _max_over_algebras(env, sample)


@_check("group-left-derivative-analytic", 1e-6)
def _left_derivative_analytic(env):
    def sample(env, alg, spec):
        M = env.rng.standard_normal((spec.mat_dim, spec.mat_dim))
        g = env.element(spec)
        fd = left_derivative(spec, lambda h: float(np.trace(M @ h.mat)), g)
        exact = np.array(
            [
                float(np.trace(M @ g.mat @ spec.generators[i]))
                for i in range(alg.dim)
            ]
        )
        return np.max(np.abs(fd - exact))

    return _max_over_algebras(env, sample)


# ---------------------------------------------------------------------------
# Canonical-map checks
# ---------------------------------------------------------------------------


def _random_ttg(env, alg, spec):
    return maps.PointTTG(env.element(spec), *(env.vec(alg.dim) for _ in range(3)))


def _random_ttsg(env, alg, spec):
    return maps.PointTTsG(env.element(spec), *(env.vec(alg.dim) for _ in range(3)))


@_check("maps-kappa-involution", 1e-14)
def _kappa_involution(env):
    def sample(env, alg, spec):
        v = _random_ttg(env, alg, spec)
        vv = maps.kappa(alg, maps.kappa(alg, v))
        return max(
            float(np.max(np.abs(vv.X - v.X))),
            float(np.max(np.abs(vv.Y - v.Y))),
            float(np.max(np.abs(vv.Z - v.Z))),
        )

    return _max_over_algebras(env, sample)


@_check("maps-alpha-roundtrip", 1e-14)
def _alpha_roundtrip(env):
    def sample(env, alg, spec):
        rho = _random_ttsg(env, alg, spec)
        back = maps.alpha_inv(alg, maps.alpha(alg, rho))
        return max(
            float(np.max(np.abs(back.A - rho.A))),
            float(np.max(np.abs(back.X - rho.X))),
            float(np.max(np.abs(back.B - rho.B))),
        )

    return _max_over_algebras(env, sample)


@_check("maps-duality-pairing", 1e-12)
def _duality_pairing(env):
    def sample(env, alg, spec):
        g = env.element(spec)
        X = env.vec(alg.dim)
        rho = maps.PointTTsG(g, env.vec(alg.dim), X, env.vec(alg.dim))
        v = maps.PointTTG(g, X, env.vec(alg.dim), env.vec(alg.dim))
        lhs = maps.tstg_pairing(maps.alpha(alg, rho), v)
        rhs = maps.tt_pairing(rho, maps.kappa(alg, v))
        return abs(lhs - rhs)

    return _max_over_algebras(env, sample)


@_check("maps-beta-factorization", 1e-14)
def _beta_factorization(env):
    def sample(env, alg, spec):
        rho = _random_ttsg(env, alg, spec)
        direct = maps.beta(alg, rho)
        routed = maps.gamma_inv(alg, maps.alpha(alg, rho))
        return max(
            float(np.max(np.abs(direct.A - routed.A))),
            float(np.max(np.abs(direct.B - routed.B))),
            float(np.max(np.abs(direct.X - routed.X))),
        )

    return _max_over_algebras(env, sample)


@_check("maps-omega-musical", 1e-12)
def _omega_musical(env):
    def sample(env, alg, spec):
        g = env.element(spec)
        A = env.vec(alg.dim)
        phi = maps.PointTTsG(g, A, env.vec(alg.dim), env.vec(alg.dim))
        psi = maps.PointTTsG(g, A, env.vec(alg.dim), env.vec(alg.dim))
        lhs = maps.tstst_pairing(maps.beta(alg, phi), psi)
        rhs = maps.omega_at(alg, (g, A), (psi.X, psi.B), (phi.X, phi.B))
        return abs(lhs - rhs)

    return _max_over_algebras(env, sample)


@_check("maps-alpha-preserves-base", 1e-15)
def _alpha_base(env):
    def sample(env, alg, spec):
        rho = _random_ttsg(env, alg, spec)
        w = maps.alpha(alg, rho)
        same_g = w.g.group is rho.g.group and np.array_equal(w.g.mat, rho.g.mat)
        return 0.0 if same_g and np.array_equal(w.X, rho.X) else np.inf

    return _max_over_algebras(env, sample)


@_check("maps-field-bracket-constant", 1e-12)
def _field_bracket_constant(env):
    def sample(env, alg, spec):
        X, Y = env.vec(alg.dim), env.vec(alg.dim)
        xi, eta = maps.constant_field(X), maps.constant_field(Y)
        got = maps.field_bracket(alg, xi, eta, env.element(spec))
        return np.max(np.abs(got - bracket(alg, X, Y)))

    return _max_over_algebras(env, sample)


def _sample_trace_fields(env, alg, spec):
    # Moderate amplitudes keep the finite-difference error of the nested
    # bracket well below the check tolerance.
    d = spec.mat_dim
    xi = maps.trace_coefficient_field(
        0.4 * env.rng.standard_normal((d, d)), env.vec(alg.dim)
    )
    eta = maps.trace_coefficient_field(
        0.4 * env.rng.standard_normal((d, d)), env.vec(alg.dim)
    )
    return xi, eta


@_check("maps-field-bracket-antisymmetric", 1e-8)
def _field_bracket_antisymmetric(env):
    def sample(env, alg, spec):
        xi, eta = _sample_trace_fields(env, alg, spec)
        g = env.element(spec)
        lhs = maps.field_bracket(alg, xi, eta, g)
        rhs = maps.field_bracket(alg, eta, xi, g)
        return np.max(np.abs(lhs + rhs))

    return _max_over_algebras(env, sample)


@_check("maps-field-bracket-jacobi", 1e-8)
def _field_bracket_jacobi(env):
    worst = 0.0
    for alg, spec in env.pairs:
        for _ in range(max(2, env.samples // 10)):
            xi, eta = _sample_trace_fields(env, alg, spec)
            zeta = maps.constant_field(env.vec(alg.dim))
            g = env.element(spec)
            total = np.zeros(alg.dim)
            for a, b, c in ((xi, eta, zeta), (eta, zeta, xi), (zeta, xi, eta)):
                total = total + maps.field_bracket(
                    alg, maps.field_commutator(alg, a, b), c, g
                )
            worst = max(worst, float(np.max(np.abs(total))))
    return worst


# ---------------------------------------------------------------------------
# Reduction checks
# ---------------------------------------------------------------------------


@_check("reduction-projection-slots", 1e-15)
def _projection_slots(env):
    def sample(env, alg, spec):
        fibers = [env.vec(alg.dim) for _ in range(3)]
        v1 = maps.PointTTG(env.element(spec), *fibers)
        v2 = maps.PointTTG(env.element(spec), *fibers)
        p1, p2 = reduction.project_TTG(v1), reduction.project_TTG(v2)
        return max(
            float(np.max(np.abs(p1.X - p2.X))),
            float(np.max(np.abs(p1.Y - p2.Y))),
            float(np.max(np.abs(p1.X - v1.X))),
            float(np.max(np.abs(p1.Y - v1.Z))),
        )

    return _max_over_algebras(env, sample)


@_check("reduction-kappa-relation", 1e-12)
def _kappa_relation(env):
    def sample(env, alg, spec):
        v = _random_ttg(env, alg, spec)
        p = reduction.project_TTG(v)
        q = reduction.project_TTG(maps.kappa(alg, v))
        residual = q.Y - (p.Y - bracket(alg, p.X, q.X))
        if not reduction.kappa_reduced_related(alg, p, q, tol=1e-12):
            return np.inf
        return np.max(np.abs(residual))

    return _max_over_algebras(env, sample)


def _constraint_point(env, alg, spec):
    g = env.element(spec)
    X, A = env.vec(alg.dim), env.vec(alg.dim)
    return maps.PointTTsG(g, A, X, coad(alg, X, A))


@_check("reduction-alpha-square", 1e-12)
def _alpha_square(env):
    def sample(env, alg, spec):
        rho = _constraint_point(env, alg, spec)
        w = maps.alpha(alg, rho)
        if not reduction.in_K(w):
            return np.inf
        m = reduction.project_K(w)
        reduced = reduction.alpha_reduced(alg, m.X, m.A)
        direct = reduction.project_TTsG(rho)
        return max(
            float(np.max(np.abs(m.X - rho.X))),
            float(np.max(np.abs(m.A - rho.A))),
            float(np.max(np.abs(reduced.A - direct.A))),
            float(np.max(np.abs(reduced.B - direct.B))),
        )

    return _max_over_algebras(env, sample)


@_check("reduction-beta-square", 1e-12)
def _beta_square(env):
    def sample(env, alg, spec):
        rho = _constraint_point(env, alg, spec)
        u = maps.beta(alg, rho)
        if not reduction.in_C(u):
            return np.inf
        m = reduction.project_C(u)
        reduced = reduction.beta_reduced(alg, m.A, m.X)
        direct = reduction.project_TTsG(rho)
        return max(
            float(np.max(np.abs(m.X - rho.X))),
            float(np.max(np.abs(m.A - rho.A))),
            float(np.max(np.abs(reduced.A - direct.A))),
            float(np.max(np.abs(reduced.B - direct.B))),
        )

    return _max_over_algebras(env, sample)


@_check("reduction-alpha-linearity", 1e-14)
def _alpha_linearity(env):
    def sample(env, alg, spec):
        a, b = env.rng.standard_normal(2)
        X = env.vec(alg.dim)
        A, B = env.vec(alg.dim), env.vec(alg.dim)
        lhs = reduction.alpha_reduced(alg, X, a * A + b * B)
        rhs_A = a * reduction.alpha_reduced(alg, X, A).B
        rhs_B = b * reduction.alpha_reduced(alg, X, B).B
        return np.max(np.abs(lhs.B - rhs_A - rhs_B))

    return _max_over_algebras(env, sample)


@_check("reduction-lie-poisson-identities", 1e-12)
def _lie_poisson(env):
    def sample(env, alg, spec):
        X, Y, Z = (env.vec(alg.dim) for _ in range(3))
        A = env.vec(alg.dim)
        anti = pair(A, reduction.lie_poisson_bracket(alg, X, Y)) + pair(
            A, reduction.lie_poisson_bracket(alg, Y, X)
        )
        jac = 0.0
        for a, b, c in ((X, Y, Z), (Y, Z, X), (Z, X, Y)):
            jac += pair(
                A,
                reduction.lie_poisson_bracket(
                    alg, reduction.lie_poisson_bracket(alg, a, b), c
                ),
            )
        return max(abs(anti), abs(jac))

    return _max_over_algebras(env, sample)


# ---------------------------------------------------------------------------
# Mechanics checks
# ---------------------------------------------------------------------------


def _random_spd(rng, n, scale=1.0):
    Q = rng.standard_normal((n, n))
    return scale * (Q @ Q.T + n * np.eye(n))


def _so3_inertia_setup():
    I = rigidbody.InertiaForm(np.diag([1.0, 2.0, 3.0]))
    return (
        rigidbody.rigid_body_lagrangian(I),
        rigidbody.rigid_body_hamiltonian(I),
        I,
    )


@_check("mechanics-lagrangian-reduces", 1e-12)
def _lagrangian_reduces(env):
    def sample(env, alg, spec):
        M = _random_spd(env.rng, alg.dim)
        l = mechanics.ReducedLagrangian(
            lambda X: 0.5 * float(X @ M @ X), grad=lambda X: M @ X
        )
        L = mechanics.TrivializedLagrangian(lambda g, X: l(X), grad_X=lambda g, X: l.grad(X))
        g = env.element(spec)
        X = env.vec(alg.dim)
        point = mechanics.dynamics_point_lagrangian(alg, L, g, X)
        red = mechanics.reduced_dynamics(alg, l, X)
        return max(
            float(np.max(np.abs(point.A - red.A))),
            float(np.max(np.abs(point.B - red.B))),
            float(np.max(np.abs(point.X - X))),
        )

    return _max_over_algebras(env, sample)


@_check("mechanics-hamiltonian-field-formula", 1e-12)
def _hamiltonian_field_formula(env):
    def sample(env, alg, spec):
        M = _random_spd(env.rng, alg.dim)
        Minv = np.linalg.inv(M)
        H = mechanics.TrivializedHamiltonian(
            lambda g, A: 0.5 * float(A @ Minv @ A),
            grad_A=lambda g, A: Minv @ A,
            grad_g=lambda g, A: np.zeros(alg.dim),
        )
        g = env.element(spec)
        A = env.vec(alg.dim)
        point = mechanics.hamiltonian_field(alg, H, g, A)
        X = Minv @ A
        C = coad(alg, X, A)
        return max(
            float(np.max(np.abs(point.X - X))),
            float(np.max(np.abs(point.B - C))),
            float(np.max(np.abs(point.A - A))),
        )

    return _max_over_algebras(env, sample)


@_check("mechanics-legendre-roundtrip", 1e-10)
def _legendre_roundtrip(env):
    def sample(env, alg, spec):
        M = _random_spd(env.rng, alg.dim)
        l = mechanics.ReducedLagrangian(
            lambda X: 0.5 * float(X @ M @ X), grad=lambda X: M @ X
        )
        h = mechanics.legendre_transform(alg, l)
        X = env.vec(alg.dim)
        back = h.grad(mechanics.legendre(alg, l, X))
        return np.max(np.abs(back - X))

    return _max_over_algebras(env, sample)


@_check("mechanics-legendre-transform-values", 1e-12)
def _legendre_values(env):
    alg = env.pairs[0][0]
    l, h_direct, _ = _so3_inertia_setup()
    h = mechanics.legendre_transform(alg, l)
    worst = 0.0
    for _ in range(env.samples):
        B = env.vec(3)
        worst = max(worst, abs(h(B) - h_direct(B)))
        worst = max(worst, float(np.max(np.abs(h.grad(B) - h_direct.grad(B)))))
    return worst


@_check("mechanics-gradient-fd-consistency", 1e-5)
def _gradient_fd(env):
    l, h, I = _so3_inertia_setup()
    spec = env.pairs[0][1]
    P = env.rng.standard_normal((3, 3))
    L = mechanics.TrivializedLagrangian(
        lambda g, X: 0.5 * float(X @ I.matrix @ X) + float(np.trace(P @ g.mat)),
        grad_X=lambda g, X: I.matrix @ X,
        grad_g=lambda g, X: np.array(
            [float(np.trace(P @ g.mat @ spec.generators[i])) for i in range(3)]
        ),
    )
    worst = 0.0
    for _ in range(env.samples):
        X = env.vec(3)
        A = env.vec(3)
        g = env.rotation()
        fd_l = mechanics._fd_gradient(l._fn, X)
        fd_h = mechanics._fd_gradient(h._fn, A)
        worst = max(worst, float(np.max(np.abs(l.grad(X) - fd_l))))
        worst = max(worst, float(np.max(np.abs(h.grad(A) - fd_h))))
        fd_LX = mechanics._fd_gradient(lambda Y: L._fn(g, Y), X)
        fd_Lg = left_derivative(spec, lambda gg: L._fn(gg, X), g)
        worst = max(worst, float(np.max(np.abs(L.grad_X(g, X) - fd_LX))))
        worst = max(worst, float(np.max(np.abs(L.grad_g(g, X) - fd_Lg))))
    return worst


def _integrate_pair(env, T=1.0, dt=1e-3):
    alg = env.pairs[0][0]
    l, h, I = _so3_inertia_setup()
    steps = int(round(T / dt))
    X0 = np.array([1.0, 1.0, 1.0])
    A0 = I.matrix @ X0

    def rhs_l(B):
        return mechanics.reduced_dynamics(alg, l, rigidbody.inertia_iso_inv(I, B))

    def rhs_h(B):
        return mechanics.reduced_hamiltonian_field(alg, h, B)

    lag = mechanics.integrate_reduced(alg, rhs_l, A0, dt, steps, hamiltonian=h)
    ham = mechanics.integrate_reduced(alg, rhs_h, A0, dt, steps, hamiltonian=h)
    return lag, ham


@_check("mechanics-flow-equivalence", 1e-10)
def _flow_equivalence(env):
    lag, ham = _integrate_pair(env)
    return float(np.max(np.abs(lag.A - ham.A)))


@_check("mechanics-conservation-short", 1e-10)
def _conservation_short(env):
    _, ham = _integrate_pair(env)
    e = np.max(np.abs(ham.energy - ham.energy[0])) / abs(ham.energy[0])
    c = np.max(np.abs(ham.casimir - ham.casimir[0])) / abs(ham.casimir[0])
    return max(float(e), float(c))


@_check("mechanics-midpoint-agreement", 1e-5)
def _midpoint_agreement(env):
    alg = env.pairs[0][0]
    _, h, I = _so3_inertia_setup()

    def rhs(B):
        return mechanics.reduced_hamiltonian_field(alg, h, B)

    A0 = I.matrix @ np.array([1.0, 1.0, 1.0])
    rk = mechanics.integrate_reduced(alg, rhs, A0, 1e-3, 1000, hamiltonian=h)
    mid = mechanics.integrate_reduced(
        alg, rhs, A0, 1e-3, 1000, method="midpoint", hamiltonian=h
    )
    return float(np.max(np.abs(rk.A[-1] - mid.A[-1])))


def _reconstruct(env, method="rkmk4", T=2.0, dt=1e-3, spherical=False):
    alg, spec = env.pairs[0]
    M = np.eye(3) if spherical else np.diag([1.0, 2.0, 3.0])
    I = rigidbody.InertiaForm(M)
    h = rigidbody.rigid_body_hamiltonian(I)

    def rhs(B):
        return mechanics.reduced_hamiltonian_field(alg, h, B)

    A0 = M @ np.array([1.0, 1.0, 1.0])
    return mechanics.integrate_with_reconstruction(
        spec, alg, rhs, None, A0, dt, int(round(T / dt)),
        method=method, hamiltonian=h,
    )


@_check("mechanics-reconstruction-membership", 1e-9)
def _reconstruction_membership(env):
    spec = env.pairs[0][1]
    rec = _reconstruct(env, T=1.0)
    return max(float(spec.membership_residual(m)) for m in rec.g)


@_check("mechanics-reconstruction-spherical", 1e-9)
def _reconstruction_spherical(env):
    spec = env.pairs[0][1]
    rec = _reconstruct(env, T=1.0, spherical=True)
    X = np.array([1.0, 1.0, 1.0])
    worst = 0.0
    for k in range(0, rec.rows, 100):
        exact = exp(spec, X, rec.t[k]).mat
        worst = max(worst, float(np.max(np.abs(rec.g[k] - exact))))
    return worst


@_check("mechanics-spatial-momentum-short", 1e-8)
def _spatial_momentum_short(env):
    rec = _reconstruct(env, T=2.0)
    spatial = np.einsum("kij,kj->ki", rec.g, rec.A)
    return float(np.max(np.abs(spatial - spatial[0])))


# ---------------------------------------------------------------------------
# Rigid-body checks
# ---------------------------------------------------------------------------


@_check("rigidbody-inertia-equivalence", 1e-12)
def _inertia_equivalence(env):
    worst = 0.0
    for _ in range(env.samples):
        p = int(env.rng.integers(3, 12))
        body = rigidbody.BodySpec(
            env.rng.uniform(0.1, 2.0, size=p), env.rng.standard_normal((p, 3))
        )
        pairing = rigidbody.inertia_from_body(body).matrix
        classical = rigidbody.classical_inertia_matrix(body)
        worst = max(worst, float(np.max(np.abs(pairing - classical))))
    return worst


@_check("rigidbody-preset-closed-forms", 1e-6)
def _preset_closed_forms(env):
    worst = 0.0
    m, a = 1.3, 0.7
    cube = rigidbody.inertia_from_body(rigidbody.BodySpec.cube(m, a)).matrix
    worst = max(worst, float(np.max(np.abs(cube - m * a**2 / 6.0 * np.eye(3)))))
    dims = (0.4, 0.9, 1.5)
    box = rigidbody.inertia_from_body(rigidbody.BodySpec.box(m, dims)).matrix
    expected = (
        m
        / 12.0
        * np.diag(
            [
                dims[1] ** 2 + dims[2] ** 2,
                dims[0] ** 2 + dims[2] ** 2,
                dims[0] ** 2 + dims[1] ** 2,
            ]
        )
    )
    worst = max(worst, float(np.max(np.abs(box - expected))))
    r = 0.8
    ball = rigidbody.inertia_from_body(rigidbody.BodySpec.sphere(m, r)).matrix
    worst = max(worst, float(np.max(np.abs(ball - 0.4 * m * r**2 * np.eye(3)))))
    return worst


@_check("rigidbody-inertia-mass-linearity", 1e-14)
def _inertia_linearity(env):
    worst = 0.0
    for _ in range(env.samples):
        p = int(env.rng.integers(3, 8))
        masses = env.rng.uniform(0.1, 2.0, size=p)
        positions = env.rng.standard_normal((p, 3))
        one = rigidbody.inertia_from_body(rigidbody.BodySpec(masses, positions))
        two = rigidbody.inertia_from_body(rigidbody.BodySpec(2.0 * masses, positions))
        worst = max(worst, float(np.max(np.abs(two.matrix - 2.0 * one.matrix))))
    return worst


@_check("rigidbody-euler-equilibria", 1e-14)
def _euler_equilibria(env):
    alg = env.pairs[0][0]
    I = rigidbody.InertiaForm(np.diag([1.0, 2.0, 3.0]))
    sphere = rigidbody.InertiaForm(1.7 * np.eye(3))
    worst = 0.0
    for k in range(3):
        e = np.eye(3)[k]
        worst = max(worst, float(np.max(np.abs(rigidbody.euler_rhs(alg, I, e)))))
    for _ in range(env.samples):
        X = env.vec(3)
        worst = max(
            worst, float(np.max(np.abs(rigidbody.euler_rhs(alg, sphere, X))))
        )
    return worst


@_check("rigidbody-symmetric-top-short", 1e-8)
def _symmetric_top_short(env):
    alg = env.pairs[0][0]
    I = rigidbody.InertiaForm(np.diag([1.0, 1.0, 2.0]))
    h = rigidbody.rigid_body_hamiltonian(I)
    X0 = np.array([1.0, 0.0, 1.0])
    oracle = rigidbody.symmetric_top_oracle(1.0, 2.0, X0)

    def rhs(B):
        return mechanics.reduced_hamiltonian_field(alg, h, B)

    rec = mechanics.integrate_reduced(
        alg, rhs, I.matrix @ X0, 1e-3, 2000, hamiltonian=h
    )
    worst = 0.0
    for k in range(0, rec.rows, 200):
        worst = max(worst, float(np.max(np.abs(rec.X[k] - oracle(rec.t[k])))))
    return worst


@_check("rigidbody-euler-route-equivalence", 1e-10)
def _euler_route(env):
    alg = env.pairs[0][0]
    I = rigidbody.InertiaForm(np.diag([1.0, 2.0, 3.0]))
    h = rigidbody.rigid_body_hamiltonian(I)
    X0 = np.array([1.0, 1.0, 1.0])

    def rhs(B):
        return mechanics.reduced_hamiltonian_field(alg, h, B)

    rec = mechanics.integrate_reduced(alg, rhs, I.matrix @ X0, 1e-3, 1000, hamiltonian=h)

    X = X0.copy()
    dt = 1e-3

    def f(Y):
        return rigidbody.euler_rhs(alg, I, Y)

    for _ in range(1000):
        k1 = f(X)
        k2 = f(X + 0.5 * dt * k1)
        k3 = f(X + 0.5 * dt * k2)
        k4 = f(X + dt * k3)
        X = X + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
    return float(np.max(np.abs(rigidbody.inertia_iso_inv(I, rec.A[-1]) - X)))


# ---------------------------------------------------------------------------
# IO checks
# ---------------------------------------------------------------------------


def _short_record(env):
    rec = _reconstruct(env, T=0.01, dt=1e-3)
    return rec


@_check("io-csv-roundtrip", 1e-15)
def _csv_roundtrip(env):
    rec = _short_record(env)
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "run.csv"
        fileio.write_trajectory(rec, path, fmt="csv")
        back = fileio.read_trajectory(path)
    same = (
        np.array_equal(rec.t, back.t)
        and np.array_equal(rec.A, back.A)
        and np.array_equal(rec.X, back.X)
        and np.array_equal(rec.energy, back.energy)
        and np.array_equal(rec.casimir, back.casimir)
        and np.array_equal(rec.g, back.g)
    )
    return 0.0 if same else np.inf


@_check("io-jsonl-roundtrip", 1e-15)
def _jsonl_roundtrip(env):
    rec = _short_record(env)
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "run.jsonl"
        fileio.write_trajectory(rec, path, fmt="json-lines")
        back = fileio.read_trajectory(path)
    same = (
        np.array_equal(rec.t, back.t)
        and np.array_equal(rec.A, back.A)
        and np.array_equal(rec.X, back.X)
        and np.array_equal(rec.energy, back.energy)
        and np.array_equal(rec.casimir, back.casimir)
        and np.array_equal(rec.g, back.g)
    )
    return 0.0 if same else np.inf


@_check("io-config-validation", 1e-15)
def _config_validation(env):
    good = {
        "algebra": "so3",
        "system": {"inertia": [[1, 0, 0], [0, 2, 0], [0, 0, 3]]},
        "initial": {"X0": [1, 1, 1]},
        "integrator": {"method": "rk4", "dt": 1e-3, "steps": 10},
    }
    bad_docs = []

    def variant(**changes):
        doc = json.loads(json.dumps(good))
        doc.update(changes)
        return doc

    bad_docs.append(variant(integrator={"method": "rk4", "dt": -1.0, "steps": 10}))
    bad_docs.append(variant(integrator={"method": "rk4", "dt": 1e-3, "steps": 0}))
    bad_docs.append(variant(integrator={"method": "rk7", "dt": 1e-3, "steps": 10}))
    bad_docs.append(variant(initial={"A0": [1, 0, 0], "X0": [1, 1, 1]}))
    bad_docs.append(variant(initial={}))
    bad_docs.append(variant(system={"inertia": [[1, 0, 0], [0, -2, 0], [0, 0, 3]]}))
    bad_docs.append(variant(system={}))
    bad_docs.append(
        variant(algebra={"dim": 3, "c": np.zeros((3, 3, 3)).tolist()}, system={
            "preset": "cube", "mass": 1.0, "side": 1.0,
        })
    )
    bad = np.zeros((3, 3, 3))
    bad[0, 1, 2] = bad[1, 0, 2] = 1.0
    bad_docs.append(variant(algebra={"dim": 3, "c": bad.tolist()}))
    bad_docs.append(variant(output={"path": "x.csv", "stride": 0}))
    bad_docs.append(variant(initial={"X0": [1, 1, 1], "g0": np.eye(3).tolist()}))

    fileio.parse_config(good)  # must not raise
    failures = 0
    for doc in bad_docs:
        try:
            fileio.parse_config(doc)
            failures += 1
        except ConfigError:
            pass
    return float(failures)


CHECK_NAMES = tuple(name for name, _, _ in _CHECKS)


def run_verification(seed=0, samples=100):
    """Run every registered property check with a deterministic seed."""
    results = []
    for name, tolerance, fn in _CHECKS:
        env = _Env(
            rng=np.random.default_rng([seed, len(name), sum(map(ord, name))]),
            samples=samples,
            pairs=[(so3(), so3_group()), (heisenberg5(), heisenberg5_group())],
        )
        residual = float(fn(env))
        results.append(
            PropertyResult(
                name=name,
                samples=samples,
                max_residual=residual,
                tolerance=tolerance,
            )
        )
    return VerifyReport(seed=seed, results=tuple(results))

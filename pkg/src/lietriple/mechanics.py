"""Dynamics generation and integration for left-invariant systems.

A Lagrangian on TG = G x g or a Hamiltonian on T*G = G x g* generates an
implicit first-order equation as a subset of TT*G: the Lagrangian side by
composing the differential with the inverse of alpha, the Hamiltonian
side through the inverse of beta.  For left-invariant (g-independent)
functions both collapse to the reduced equations on g*:

    Euler-Poincare:  A = dl/dX,  A' = ad*_X A
    Lie-Poisson:     B' = ad*_{dh/dB} B

This module also provides the time integrators: classical rk4 and
implicit midpoint for the reduced momentum equation, and reconstruction
of the group trajectory g' = g @ hat(X) by a 4th-order Munthe-Kaas
scheme (default) or the first-order exponential update.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .algebra import bracket, pair
from .errors import HyperregularityError, NumericalError
from .groups import GroupElement, exp, left_derivative, multiply
from .maps import PointTsTG, PointTsTsG, alpha_inv, beta_inv
from .reduction import ReducedPhasePair, alpha_reduced, beta_reduced

__all__ = [
    "FD_STEP",
    "TrivializedLagrangian",
    "TrivializedHamiltonian",
    "ReducedLagrangian",
    "ReducedHamiltonian",
    "TrajectoryRecord",
    "dynamics_point_lagrangian",
    "hamiltonian_field",
    "reduced_dynamics",
    "reduced_hamiltonian_field",
    "legendre",
    "legendre_transform",
    "integrate_reduced",
    "integrate_with_reconstruction",
]

FD_STEP = 1e-6


def _fd_gradient(f, x, step=FD_STEP):
    """Central finite-difference gradient of f on coordinate vectors."""
    x = np.asarray(x, dtype=float)
    grad = np.zeros_like(x)
    for i in range(x.size):
        dx = np.zeros_like(x)
        dx[i] = step
        grad[i] = (f(x + dx) - f(x - dx)) / (2.0 * step)
    return grad


class TrivializedLagrangian:
    """A Lagrangian L(g, X) on G x g with gradients in both slots.

    ``grad_X`` is the fiber derivative (a covector); ``grad_g`` is the
    left-trivialized derivative along the group.  Either may be supplied
    analytically; otherwise central finite differences are used.
    """

    def __init__(self, fn, grad_X=None, grad_g=None):
        self._fn = fn
        self._grad_X = grad_X
        self._grad_g = grad_g

    def __call__(self, g, X):
        return float(self._fn(g, X))

    def grad_X(self, g, X):
        if self._grad_X is not None:
            return np.asarray(self._grad_X(g, X), dtype=float)
        return _fd_gradient(lambda Y: self._fn(g, Y), X)

    def grad_g(self, g, X):
        if self._grad_g is not None:
            return np.asarray(self._grad_g(g, X), dtype=float)
        return left_derivative(g.group, lambda h: self._fn(h, X), g)


class TrivializedHamiltonian:
    """A Hamiltonian H(g, A) on G x g* with gradients in both slots."""

    def __init__(self, fn, grad_A=None, grad_g=None):
        self._fn = fn
        self._grad_A = grad_A
        self._grad_g = grad_g

    def __call__(self, g, A):
        return float(self._fn(g, A))

    def grad_A(self, g, A):
        if self._grad_A is not None:
            return np.asarray(self._grad_A(g, A), dtype=float)
        return _fd_gradient(lambda B: self._fn(g, B), A)

    def grad_g(self, g, A):
        if self._grad_g is not None:
            return np.asarray(self._grad_g(g, A), dtype=float)
        return left_derivative(g.group, lambda h: self._fn(h, A), g)


class ReducedLagrangian:
    """A Lagrangian l(X) on the algebra, with gradient dl/dX in g*."""

    def __init__(self, fn, grad=None):
        self._fn = fn
        self._grad = grad

    def __call__(self, X):
        return float(self._fn(X))

    def grad(self, X):
        if self._grad is not None:
            return np.asarray(self._grad(X), dtype=float)
        return _fd_gradient(self._fn, X)


class ReducedHamiltonian:
    """A Hamiltonian h(A) on the dual, with gradient dh/dA in g."""

    def __init__(self, fn, grad=None):
        self._fn = fn
        self._grad = grad

    def __call__(self, A):
        return float(self._fn(A))

    def grad(self, A):
        if self._grad is not None:
            return np.asarray(self._grad(A), dtype=float)
        return _fd_gradient(self._fn, A)


# ---------------------------------------------------------------------------
# Dynamics generation
# ---------------------------------------------------------------------------


def dynamics_point_lagrangian(alg, L, g, X):
    """The dynamics point of a Lagrangian system at (g, X).

    The differential dL(g, X) = (g, X, dL/dg, dL/dX) lives in T*TG;
    pulling it back through alpha gives the point

        (g, A, X, B),  A = dL/dX,  B = dL/dg + ad*_X A

    of TT*G, read as the implicit equation g' = g @ hat(X), A' = B.
    """
    X = alg.coords(X)
    dL = PointTsTG(g, X, L.grad_g(g, X), L.grad_X(g, X))
    return alpha_inv(alg, dL)


def hamiltonian_field(alg, H, g, A):
    """The Hamiltonian vector field of H at (g, A), as a TT*G point.

    The differential dH(g, A) = (g, A, dH/dg, dH/dA) lives in T*T*G;
    pulling it back through beta gives

        (g, A, X, C),  X = dH/dA,  C = -dH/dg + ad*_X A,

    the trivialized form of the canonical equations on T*G.
    """
    A = alg.coords(A)
    dH = PointTsTsG(g, A, H.grad_g(g, A), H.grad_A(g, A))
    return beta_inv(alg, dH)


def reduced_dynamics(alg, l, X):
    """Euler-Poincare right-hand side: (A, B) = (dl/dX, ad*_X dl/dX)."""
    X = alg.coords(X)
    return alpha_reduced(alg, X, l.grad(X))


def reduced_hamiltonian_field(alg, h, B):
    """Lie-Poisson right-hand side: (B, ad*_{dh/dB} B)."""
    B = alg.coords(B)
    return beta_reduced(alg, B, h.grad(B))


def legendre(alg, l, X):
    """The Legendre map X -> dl/dX from g to g*."""
    return l.grad(alg.coords(X))


def legendre_transform(alg, l, tol=1e-8):
    """Legendre transform of a hyperregular quadratic Lagrangian.

    Recovers the symmetric positive-definite form M with dl/dX = M X,
    then returns h(B) = <B, M^-1 B> - l(M^-1 B) with analytic gradient
    M^-1 B.  Raises HyperregularityError when l is not quadratic with
    positive-definite M (only that case is supported).
    """
    n = alg.dim
    M = np.column_stack([l.grad(alg.basis(j)) for j in range(n)])
    M = 0.5 * (M + M.T)

    rng = np.random.default_rng(0)
    scale = max(1.0, float(np.max(np.abs(M))))
    for _ in range(4):
        X = rng.standard_normal(n)
        lin = float(np.max(np.abs(l.grad(X) - M @ X)))
        quad = abs(l(X) - 0.5 * float(X @ M @ X))
        if lin > tol * scale * max(1.0, np.max(np.abs(X))) or quad > tol * scale:
            raise HyperregularityError(
                "legendre_transform supports quadratic Lagrangians "
                "l(X) = <M X, X>/2 only; gradient is not linear"
            )
    try:
        factor = scipy.linalg.cho_factor(M)
    except scipy.linalg.LinAlgError as e:
        raise HyperregularityError(
            "Legendre map is not invertible: the quadratic form is not "
            "positive definite"
        ) from e

    def fn(B):
        X = scipy.linalg.cho_solve(factor, np.asarray(B, dtype=float))
        return pair(B, X) - l(X)

    def grad(B):
        return scipy.linalg.cho_solve(factor, np.asarray(B, dtype=float))

    return ReducedHamiltonian(fn, grad=grad)


# ---------------------------------------------------------------------------
# Time integration
# ---------------------------------------------------------------------------

MIDPOINT_MAX_ITER = 50
MIDPOINT_TOL = 1e-12


@dataclass(frozen=True)
class TrajectoryRecord:
    """Sampled trajectory: momentum, velocity, invariants, optional attitude."""

    t: np.ndarray
    A: np.ndarray
    X: np.ndarray
    energy: np.ndarray
    casimir: np.ndarray
    g: Optional[np.ndarray] = None  # (rows, d, d) when reconstructed

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        if t.ndim != 1 or (t.size > 1 and np.any(np.diff(t) <= 0.0)):
            raise ValueError("trajectory times must be strictly increasing")
        object.__setattr__(self, "t", t)

    @property
    def rows(self):
        return self.t.size

    @property
    def has_attitude(self):
        return self.g is not None


def _rhs_vector(rhs, B):
    out = rhs(B)
    if isinstance(out, ReducedPhasePair):
        return out.B
    return np.asarray(out, dtype=float)


def _advance(step, f, B, dt, k):
    """One guarded step: scipy/numpy blowups surface as NumericalError."""
    try:
        B = step(f, B, dt)
    except NumericalError:
        raise
    except (ValueError, FloatingPointError) as e:
        raise NumericalError(f"integration step {k} failed: {e}") from e
    if not np.all(np.isfinite(B)):
        raise NumericalError(
            f"state became non-finite at step {k} (t={k * dt:g})"
        )
    return B


def _rk4_step(f, B, dt):
    k1 = f(B)
    k2 = f(B + 0.5 * dt * k1)
    k3 = f(B + 0.5 * dt * k2)
    k4 = f(B + dt * k3)
    return B + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _midpoint_step(f, B, dt):
    Y = B + dt * f(B)
    for _ in range(MIDPOINT_MAX_ITER):
        if not np.all(np.isfinite(Y)):
            break
        Y_next = B + dt * f(0.5 * (B + Y))
        if np.max(np.abs(Y_next - Y)) <= MIDPOINT_TOL:
            return Y_next
        Y = Y_next
    raise NumericalError(
        f"implicit midpoint did not converge within {MIDPOINT_MAX_ITER} "
        f"iterations (dt={dt})"
    )


def _record_row(out, k, t, B, hamiltonian):
    out["t"][k] = t
    out["A"][k] = B
    if hamiltonian is not None:
        out["X"][k] = hamiltonian.grad(B)
        out["energy"][k] = hamiltonian(B)
    out["casimir"][k] = float(B @ B)


def _empty_rows(n, rows):
    return {
        "t": np.zeros(rows),
        "A": np.zeros((rows, n)),
        "X": np.zeros((rows, n)),
        "energy": np.zeros(rows),
        "casimir": np.zeros(rows),
    }


def integrate_reduced(alg, rhs, B0, dt, steps, method="rk4", hamiltonian=None):
    """Integrate the reduced momentum equation B' = rhs(B).

    rhs maps B to a ReducedPhasePair (or directly to B'); method is
    "rk4" (classical 4th order) or "midpoint" (implicit midpoint by
    fixed-point iteration).  When a ReducedHamiltonian is supplied, the
    velocity and energy columns are filled from it; the casimir column
    always reports <B, B>.
    """
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    if steps < 1:
        raise ValueError("steps must be at least 1")
    steppers = {"rk4": _rk4_step, "midpoint": _midpoint_step}
    if method not in steppers:
        raise ValueError(f"unknown reduced integrator {method!r}")
    step = steppers[method]

    def f(B):
        return _rhs_vector(rhs, B)

    B = alg.coords(B0).copy()
    out = _empty_rows(alg.dim, steps + 1)
    _record_row(out, 0, 0.0, B, hamiltonian)
    for k in range(1, steps + 1):
        B = _advance(step, f, B, dt, k)
        _record_row(out, k, k * dt, B, hamiltonian)
    return TrajectoryRecord(**out)


def _dexpinv_body(alg, om, y):
    """Truncated inverse right dexp for g' = g @ hat(X), to order 2.

    With g(t) = g0 @ exp(Om(t)) the update equation is
    Om' = y + [Om, y]/2 + [Om, [Om, y]]/12 + O(|Om|^4); the truncation
    keeps a one-step error compatible with a 4th-order scheme.
    """
    c = bracket(alg, om, y)
    return y + 0.5 * c + bracket(alg, om, c) / 12.0


def integrate_with_reconstruction(
    spec,
    alg,
    rhs,
    g0,
    B0,
    dt,
    steps,
    method="rkmk4",
    hamiltonian=None,
    velocity=None,
    reproject_every=100,
):
    """Integrate B' = rhs(B) together with the group equation g' = g @ hat(X).

    The velocity X(B) is taken from ``velocity`` or, by default, from the
    gradient of the supplied ReducedHamiltonian.  method "rkmk4" is a
    4th-order Munthe-Kaas Runge-Kutta update on the combined state;
    "lie-euler" is the first-order update g_{k+1} = g_k @ exp(dt X_k).
    The attitude is reprojected onto the group every reproject_every
    steps to control floating-point drift.
    """
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    if steps < 1:
        raise ValueError("steps must be at least 1")
    if method not in ("rkmk4", "lie-euler"):
        raise ValueError(f"unknown reconstructing integrator {method!r}")
    if velocity is None:
        if hamiltonian is None:
            raise ValueError(
                "reconstruction needs a velocity map: pass velocity= or "
                "hamiltonian="
            )
        velocity = hamiltonian.grad

    def f(B):
        return _rhs_vector(rhs, B)

    B = alg.coords(B0).copy()
    g = g0 if g0 is not None else spec.identity()

    out = _empty_rows(alg.dim, steps + 1)
    gs = np.zeros((steps + 1, spec.mat_dim, spec.mat_dim))
    _record_row(out, 0, 0.0, B, hamiltonian)
    gs[0] = g.mat

    for k in range(1, steps + 1):
        try:
            if method == "rkmk4":
                zero = np.zeros(alg.dim)
                a1 = f(B)
                o1 = _dexpinv_body(alg, zero, velocity(B))
                a2 = f(B + 0.5 * dt * a1)
                o2 = _dexpinv_body(alg, 0.5 * dt * o1, velocity(B + 0.5 * dt * a1))
                a3 = f(B + 0.5 * dt * a2)
                o3 = _dexpinv_body(alg, 0.5 * dt * o2, velocity(B + 0.5 * dt * a2))
                a4 = f(B + dt * a3)
                o4 = _dexpinv_body(alg, dt * o3, velocity(B + dt * a3))
                om = (dt / 6.0) * (o1 + 2.0 * o2 + 2.0 * o3 + o4)
                B = B + (dt / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
            else:  # lie-euler
                om = dt * velocity(B)
                B = B + dt * f(B)
        except (ValueError, FloatingPointError) as e:
            raise NumericalError(f"integration step {k} failed: {e}") from e
        if not (np.all(np.isfinite(B)) and np.all(np.isfinite(om))):
            raise NumericalError(
                f"state became non-finite at step {k} (t={k * dt:g})"
            )
        g = multiply(g, exp(spec, om))
        if reproject_every and k % reproject_every == 0:
            g = GroupElement(spec.reproject(g.mat), spec)
        _record_row(out, k, k * dt, B, hamiltonian)
        gs[k] = g.mat

    return TrajectoryRecord(g=gs, **out)

"""The free rigid body about its center of mass.

The configuration group is SO(3); the body is a mass distribution whose
moment of inertia is the symmetric bilinear form

    I(X, Y) = sum_p m_p (hat(X) q_p) . (hat(Y) q_p)

on the rotation algebra.  The induced isomorphism A = I_iso(X) = M X
turns the Euler-Poincare equation into the classical Euler equations
X' = M^-1((M X) x X).  The vector identifications hat/vee between the
rotation algebra and R^3 are centralized here.

Bodies are point clouds; the cube/box/sphere presets expand to
Gauss-Legendre quadrature clouds whose second moments match the uniform
solid exactly, so the closed-form inertia values are reproduced to
rounding error rather than to quadrature error.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .algebra import coad
from .errors import DegenerateInertiaError, LieTripleError
from .mechanics import ReducedHamiltonian, ReducedLagrangian

__all__ = [
    "hat",
    "vee",
    "BodySpec",
    "InertiaForm",
    "inertia_from_body",
    "classical_inertia_matrix",
    "inertia_iso",
    "inertia_iso_inv",
    "rigid_body_lagrangian",
    "rigid_body_hamiltonian",
    "euler_rhs",
    "SymmetricTopSolution",
    "symmetric_top_oracle",
]


def hat(v):
    """R^3 -> antisymmetric 3x3 matrix with hat(v) @ w = v x w."""
    v = np.asarray(v, dtype=float)
    return np.array(
        [
            [0.0, -v[2], v[1]],
            [v[2], 0.0, -v[0]],
            [-v[1], v[0], 0.0],
        ]
    )


def vee(m):
    """Inverse of hat: antisymmetric 3x3 matrix -> R^3."""
    m = np.asarray(m, dtype=float)
    return np.array([m[2, 1], m[0, 2], m[1, 0]])


@dataclass(frozen=True, eq=False)
class BodySpec:
    """A rigid body as a weighted point cloud in the body frame."""

    masses: np.ndarray  # (p,), kg
    positions: np.ndarray  # (p, 3), m

    def __post_init__(self):
        masses = np.asarray(self.masses, dtype=float)
        positions = np.asarray(self.positions, dtype=float)
        if masses.ndim != 1 or positions.shape != (masses.size, 3):
            raise ValueError(
                "BodySpec expects masses (p,) and positions (p, 3); got "
                f"{masses.shape} and {positions.shape}"
            )
        if masses.size == 0 or np.any(masses <= 0.0):
            raise ValueError("all point masses must be positive")
        masses.setflags(write=False)
        positions.setflags(write=False)
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "positions", positions)

    @property
    def total_mass(self):
        return float(np.sum(self.masses))

    @classmethod
    def from_points(cls, points):
        """Build from an iterable of (mass, (x, y, z)) rows."""
        rows = list(points)
        masses = np.array([m for m, _ in rows], dtype=float)
        positions = np.array([p for _, p in rows], dtype=float)
        return cls(masses, positions)

    @classmethod
    def box(cls, mass, dims):
        """Uniform solid box of the given total mass and side lengths.

        A 2-point Gauss-Legendre rule per axis integrates the quadratic
        second moments exactly, so 8 points suffice.
        """
        a, b, c = (float(d) for d in dims)
        if min(a, b, c) <= 0.0 or mass <= 0.0:
            raise ValueError("box preset needs positive mass and dimensions")
        nodes = np.array([-1.0, 1.0]) / np.sqrt(3.0)
        pts = []
        for x in nodes:
            for y in nodes:
                for z in nodes:
                    pts.append((0.5 * a * x, 0.5 * b * y, 0.5 * c * z))
        masses = np.full(8, mass / 8.0)
        return cls(masses, np.array(pts))

    @classmethod
    def cube(cls, mass, side):
        """Uniform solid cube: inertia m side^2 / 6 on the diagonal."""
        return cls.box(mass, (side, side, side))

    @classmethod
    def sphere(cls, mass, radius, n_radial=3, n_polar=3, n_azimuth=6):
        """Uniform solid ball: inertia 2 m radius^2 / 5 on the diagonal.

        Product quadrature: Gauss-Legendre in radius and in cos(polar),
        uniform in azimuth.  The defaults are exact for the quadratic
        moments of the uniform ball.
        """
        if mass <= 0.0 or radius <= 0.0:
            raise ValueError("sphere preset needs positive mass and radius")
        r_nodes, r_weights = np.polynomial.legendre.leggauss(n_radial)
        r = 0.5 * radius * (r_nodes + 1.0)
        wr = 0.5 * radius * r_weights * r**2  # measure r^2 dr
        x_nodes, x_weights = np.polynomial.legendre.leggauss(n_polar)
        phi = 2.0 * np.pi * np.arange(n_azimuth) / n_azimuth
        wphi = 2.0 * np.pi / n_azimuth
        density = mass / (4.0 / 3.0 * np.pi * radius**3)
        masses, pts = [], []
        for rk, wk in zip(r, wr):
            for xl, wl in zip(x_nodes, x_weights):
                sin_l = np.sqrt(1.0 - xl**2)
                for pm in phi:
                    pts.append(
                        (rk * sin_l * np.cos(pm), rk * sin_l * np.sin(pm), rk * xl)
                    )
                    masses.append(density * wk * wl * wphi)
        return cls(np.array(masses), np.array(pts))


@dataclass(frozen=True, eq=False)
class InertiaForm:
    """A symmetric bilinear form on the algebra (the moment of inertia)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"inertia matrix must be square, got {m.shape}")
        asym = float(np.max(np.abs(m - m.T))) if m.size else 0.0
        if asym > 1e-12:
            raise ValueError(f"inertia matrix is not symmetric (residual {asym:.3e})")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def eigenvalues(self):
        return np.linalg.eigvalsh(self.matrix)

    @property
    def rank(self):
        w = np.abs(self.eigenvalues)
        scale = float(np.max(w)) if w.size else 0.0
        return int(np.sum(w > 1e-12 * max(scale, 1.0)))

    @property
    def is_definite(self):
        return bool(np.all(self.eigenvalues > 0.0))


def classical_inertia_matrix(body):
    """The textbook tensor sum_p m_p (|q|^2 Id - q q^T)."""
    q = body.positions
    m = body.masses
    norms = np.sum(q * q, axis=1)
    return np.einsum("p,p->", m, norms) * np.eye(3) - np.einsum(
        "p,pi,pj->ij", m, q, q
    )


def inertia_from_body(body, require_definite=False):
    """Assemble the inertia form of a point-cloud body.

    The primary formula is the pairing sum over generators,
    M_ij = sum_p m_p (E_i q_p) . (E_j q_p) with E_i = hat(e_i); it is
    cross-checked against the classical tensor, which must agree to
    1e-12.  Bodies with fewer than 3 non-collinear points give a
    singular form; that is permitted unless require_definite is set.
    """
    gens = np.stack([hat(np.eye(3)[i]) for i in range(3)])
    v = np.einsum("iab,pb->ipa", gens, body.positions)  # E_i q_p
    M = np.einsum("p,ipa,jpa->ij", body.masses, v, v)
    M = 0.5 * (M + M.T)

    reference = classical_inertia_matrix(body)
    residual = float(np.max(np.abs(M - reference)))
    if residual > 1e-12 * max(1.0, float(np.max(np.abs(reference)))):
        raise LieTripleError(
            f"inertia assembly self-check failed (residual {residual:.3e})"
        )
    form = InertiaForm(M)
    if require_definite and not form.is_definite:
        raise DegenerateInertiaError(
            f"body is degenerate: inertia form has rank {form.rank} < 3"
        )
    return form


def inertia_iso(I, X):
    """The isomorphism g -> g* induced by the form: X -> M X."""
    return I.matrix @ np.asarray(X, dtype=float)


def _cho(I):
    try:
        return scipy.linalg.cho_factor(I.matrix)
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise DegenerateInertiaError(
            "inertia form is not positive definite; its inverse is undefined"
        ) from e


def inertia_iso_inv(I, A):
    """Inverse isomorphism g* -> g: solve M X = A."""
    return scipy.linalg.cho_solve(_cho(I), np.asarray(A, dtype=float))


def rigid_body_lagrangian(I):
    """Kinetic-energy Lagrangian l(X) = I(X, X) / 2 with analytic gradient."""
    M = I.matrix
    return ReducedLagrangian(
        lambda X: 0.5 * float(np.asarray(X) @ M @ np.asarray(X)),
        grad=lambda X: M @ np.asarray(X, dtype=float),
    )


def rigid_body_hamiltonian(I):
    """Kinetic-energy Hamiltonian h(A) = <A, M^-1 A> / 2, gradient M^-1 A."""
    factor = _cho(I)

    def solve(A):
        return scipy.linalg.cho_solve(factor, np.asarray(A, dtype=float))

    return ReducedHamiltonian(
        lambda A: 0.5 * float(np.asarray(A) @ solve(A)),
        grad=solve,
    )


def euler_rhs(alg, I, X):
    """Euler equations in velocity form: X' = M^-1 ad*_X(M X).

    Under the R^3 identification this is the classical
    X' = M^-1((M X) x X).
    """
    X = alg.coords(X)
    return inertia_iso_inv(I, coad(alg, X, inertia_iso(I, X)))


class SymmetricTopSolution:
    """Closed-form body velocity of a free symmetric top M = diag(I1, I1, I3).

    X3 is constant and (X1, X2) rotates rigidly at the precession rate
    Omega = X3(0) (I3 - I1) / I1.  Calling the solution returns X(t).
    """

    def __init__(self, I1, I3, X0):
        if I1 <= 0.0 or I3 <= 0.0:
            raise ValueError("symmetric top moments must be positive")
        self.X0 = np.asarray(X0, dtype=float)
        self.rate = float(self.X0[2]) * (I3 - I1) / I1

    def __call__(self, t):
        c, s = np.cos(self.rate * t), np.sin(self.rate * t)
        x1, x2, x3 = self.X0
        return np.array([c * x1 - s * x2, s * x1 + c * x2, x3])


def symmetric_top_oracle(I1, I3, X0):
    """Analytic trajectory used to cross-check the numerical integrators."""
    return SymmetricTopSolution(I1, I3, X0)

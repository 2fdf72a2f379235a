"""Canonical maps between the left-trivialized iterated bundles of a group.

With TG = G x g and T*G = G x g* (g the Lie algebra, g* its dual), the
iterated tangent and cotangent bundles trivialize to products of G with
three (co)algebra slots:

    TTG   = G x g  x g  x g      points (g, X, Y, Z)
    TT*G  = G x g* x g  x g*     points (g, A, X, B)
    T*TG  = G x g  x g* x g*     points (g, X, A, B)
    T*T*G = G x g* x g* x g      points (g, A, B, X)

This module implements the canonical flip kappa of TTG, the double-bundle
isomorphisms alpha: TT*G -> T*TG and beta: TT*G -> T*T*G, the musical map
gamma: T*T*G -> T*TG, the Liouville one-form and symplectic form of T*G,
the natural pairings between these spaces, and the bracket of vector
fields written in trivialized form.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .algebra import bracket, coad, pair
from .errors import DimensionMismatchError, ProjectionMismatchError
from .groups import GroupElement, exp, multiply

__all__ = [
    "PointTTG",
    "PointTTsG",
    "PointTsTG",
    "PointTsTsG",
    "TrivializedField",
    "kappa",
    "alpha",
    "alpha_inv",
    "beta",
    "beta_inv",
    "gamma",
    "gamma_inv",
    "theta",
    "omega_at",
    "tt_pairing",
    "tstg_pairing",
    "tstst_pairing",
    "field_bracket",
    "field_commutator",
    "constant_field",
    "trace_coefficient_field",
]


def _fiber(*slots):
    arrays = tuple(np.asarray(s, dtype=float) for s in slots)
    n = arrays[0].shape
    for a in arrays:
        if a.ndim != 1 or a.shape != n:
            raise DimensionMismatchError(
                f"fiber slots must be equal-length vectors, got shapes "
                f"{[a.shape for a in arrays]}"
            )
    for a in arrays:
        a.setflags(write=False)
    return arrays


@dataclass(frozen=True, eq=False)
class PointTTG:
    """Point of TTG = G x g x g x g."""

    g: GroupElement
    X: np.ndarray
    Y: np.ndarray
    Z: np.ndarray

    def __post_init__(self):
        X, Y, Z = _fiber(self.X, self.Y, self.Z)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "Z", Z)


@dataclass(frozen=True, eq=False)
class PointTTsG:
    """Point of TT*G = G x g* x g x g*: momentum A, velocity X, force B."""

    g: GroupElement
    A: np.ndarray
    X: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        A, X, B = _fiber(self.A, self.X, self.B)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "B", B)


@dataclass(frozen=True, eq=False)
class PointTsTG:
    """Point of T*TG = G x g x g* x g*."""

    g: GroupElement
    X: np.ndarray
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        X, A, B = _fiber(self.X, self.A, self.B)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)


@dataclass(frozen=True, eq=False)
class PointTsTsG:
    """Point of T*T*G = G x g* x g* x g."""

    g: GroupElement
    A: np.ndarray
    B: np.ndarray
    X: np.ndarray

    def __post_init__(self):
        A, B, X = _fiber(self.A, self.B, self.X)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "X", X)


def _check_dim(alg, point):
    for slot in ("X", "Y", "Z", "A", "B"):
        v = getattr(point, slot, None)
        if v is not None and v.shape != (alg.dim,):
            raise DimensionMismatchError(
                f"point slot {slot} has shape {v.shape}, expected ({alg.dim},)"
            )


def kappa(alg, v):
    """Canonical flip of TTG: (g, X, Y, Z) -> (g, Y, X, Z - [X, Y])."""
    _check_dim(alg, v)
    return PointTTG(v.g, v.Y, v.X, v.Z - bracket(alg, v.X, v.Y))


def alpha(alg, rho):
    """TT*G -> T*TG: (g, A, X, B) -> (g, X, B - ad*_X A, A)."""
    _check_dim(alg, rho)
    return PointTsTG(rho.g, rho.X, rho.B - coad(alg, rho.X, rho.A), rho.A)


def alpha_inv(alg, w):
    """T*TG -> TT*G: (g, X, C, D) -> (g, D, X, C + ad*_X D)."""
    _check_dim(alg, w)
    return PointTTsG(w.g, w.B, w.X, w.A + coad(alg, w.X, w.B))


def beta(alg, rho):
    """TT*G -> T*T*G: (g, A, X, B) -> (g, A, -B + ad*_X A, X).

    This is the musical map of the symplectic form on T*G: pairing
    beta(rho) against another tangent vector returns omega(., rho).
    """
    _check_dim(alg, rho)
    return PointTsTsG(rho.g, rho.A, -rho.B + coad(alg, rho.X, rho.A), rho.X)


def beta_inv(alg, u):
    """T*T*G -> TT*G: (g, A, B, X) -> (g, A, X, ad*_X A - B)."""
    _check_dim(alg, u)
    return PointTTsG(u.g, u.A, u.X, coad(alg, u.X, u.A) - u.B)


def gamma(alg, u):
    """T*T*G -> T*TG: (g, A, B, X) -> (g, X, -B, A)."""
    _check_dim(alg, u)
    return PointTsTG(u.g, u.X, -u.B, u.A)


def gamma_inv(alg, w):
    """T*TG -> T*T*G: (g, X, C, D) -> (g, D, -C, X)."""
    _check_dim(alg, w)
    return PointTsTsG(w.g, w.B, -w.A, w.X)


def theta(rho):
    """Liouville one-form of T*G evaluated on rho: <A, X>."""
    return pair(rho.A, rho.X)


def omega_at(alg, base, phi_val, psi_val):
    """Symplectic form of T*G at base = (g, A) on two tangent values.

    phi_val = (X, B) and psi_val = (Y, C) are the fiber parts of tangent
    vectors at (g, A); the value is <B, Y> - <C, X> - <A, [X, Y]>.
    """
    _, A = base
    A = alg.coords(A)
    X, B = (alg.coords(v) for v in phi_val)
    Y, C = (alg.coords(v) for v in psi_val)
    return pair(B, Y) - pair(C, X) - pair(A, bracket(alg, X, Y))


def _same_base_point(a, b):
    return a.g.group is b.g.group and np.array_equal(a.g.mat, b.g.mat)


def tt_pairing(rho, v):
    """Pairing of TT*G with TTG over TG: <A, Z> + <B, X>.

    Requires the same group point and exactly matching middle projections
    (rho's velocity slot equals v's fiber slot Y); there is no tolerance,
    callers must construct compatible pairs.
    """
    if not _same_base_point(rho, v) or not np.array_equal(rho.X, v.Y):
        raise ProjectionMismatchError(
            "tt_pairing requires matching projections to TG: same g and "
            "rho.X == v.Y exactly"
        )
    return pair(rho.A, v.Z) + pair(rho.B, v.X)


def tstg_pairing(w, v):
    """Pairing of T*TG with TTG over TG: <A, Y> + <B, Z>."""
    if not _same_base_point(w, v) or not np.array_equal(w.X, v.X):
        raise ProjectionMismatchError(
            "tstg_pairing requires the same base point (g, X) exactly"
        )
    return pair(w.A, v.Y) + pair(w.B, v.Z)


def tstst_pairing(u, rho):
    """Pairing of T*T*G with TT*G over T*G: <B, X_rho> + <B_rho, X_u>."""
    if not _same_base_point(u, rho) or not np.array_equal(u.A, rho.A):
        raise ProjectionMismatchError(
            "tstst_pairing requires the same base point (g, A) exactly"
        )
    return pair(u.B, rho.X) + pair(rho.B, u.X)


# ---------------------------------------------------------------------------
# Vector fields in trivialized form
# ---------------------------------------------------------------------------

FD_STEP = 1e-6


@dataclass
class TrivializedField:
    """A vector field in left-trivialized coordinates.

    For a field on G, ``X(g)`` returns the algebra coordinates of the
    velocity at g.  For a field on G x g*, ``X(g, A)`` and ``B(g, A)``
    return the two fiber components.  ``dX`` is an optional analytic
    directional derivative, ``dX(g, W) = d/dt|_0 X(g @ exp(t W))``; when
    absent, derivatives fall back to central finite differences.
    """

    X: Callable
    B: Optional[Callable] = None
    dX: Optional[Callable] = None


def _coefficient_derivative(field, g, W, step=FD_STEP):
    if field.dX is not None:
        return np.asarray(field.dX(g, W), dtype=float)
    spec = g.group
    gp = multiply(g, exp(spec, W, step))
    gm = multiply(g, exp(spec, W, -step))
    fp = np.asarray(field.X(gp), dtype=float)
    fm = np.asarray(field.X(gm), dtype=float)
    return (fp - fm) / (2.0 * step)


def field_bracket(alg, xi, eta, g, step=FD_STEP):
    """Bracket of two trivialized fields on G, evaluated at g.

    [xi, eta](g) = D_eta(xi(g)) - D_xi(eta(g)) + [xi(g), eta(g)], where
    D_f(W) is the derivative of the coefficient function f along the
    curve t -> g @ exp(t W).  For constant coefficients this reduces to
    the algebra bracket of the values.
    """
    Xg = alg.coords(np.asarray(xi.X(g), dtype=float))
    Yg = alg.coords(np.asarray(eta.X(g), dtype=float))
    d_eta = _coefficient_derivative(eta, g, Xg, step)
    d_xi = _coefficient_derivative(xi, g, Yg, step)
    return d_eta - d_xi + bracket(alg, Xg, Yg)


def field_commutator(alg, xi, eta, step=FD_STEP):
    """The bracket [xi, eta] as a new field (no analytic derivative)."""
    return TrivializedField(X=lambda g: field_bracket(alg, xi, eta, g, step))


def constant_field(coords):
    """The left-invariant field with constant trivialized coefficient."""
    coords = np.asarray(coords, dtype=float)
    return TrivializedField(
        X=lambda g: coords,
        dX=lambda g, W: np.zeros_like(coords),
    )


def trace_coefficient_field(M, V):
    """The field g -> trace(M @ g) * V, with its analytic derivative."""
    M = np.asarray(M, dtype=float)
    V = np.asarray(V, dtype=float)

    def coefficient(g):
        return float(np.trace(M @ g.mat))

    return TrivializedField(
        X=lambda g: coefficient(g) * V,
        dX=lambda g, W: float(np.trace(M @ g.mat @ g.group.to_matrix(W))) * V,
    )

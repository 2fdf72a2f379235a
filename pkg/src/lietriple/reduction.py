"""Reduction of the trivialized bundle geometry by the group action.

Quotienting the iterated bundles by left translation drops the group
slot: TTG reduces to g x g, TT*G to g* x g*, and the mixed cotangent
spaces restrict to the invariant constraint sets

    K = {(g, X, 0, A)} in T*TG      (differentials of invariant functions)
    C = {(g, A, 0, X)} in T*T*G

on which the canonical maps descend to g x g* -> g* x g*.  The reduced
flip is a relation (not a map); the reduced alpha and beta are maps and
both send a velocity/momentum pair to (A, ad*_X A), which is exactly the
right-hand side of the Euler-Poincare and Lie-Poisson equations.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import bracket, coad
from .errors import DimensionMismatchError

__all__ = [
    "ReducedVelocityPair",
    "ReducedPhasePair",
    "ReducedMixedPair",
    "MEMBERSHIP_TOL",
    "project_TTG",
    "project_TTsG",
    "project_K",
    "project_C",
    "in_K",
    "in_C",
    "kappa_reduced_related",
    "alpha_reduced",
    "beta_reduced",
    "lie_poisson_bracket",
]

MEMBERSHIP_TOL = 1e-9


def _pair_arrays(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 1 or a.shape != b.shape:
        raise DimensionMismatchError(
            f"pair components must be equal-length vectors, got shapes "
            f"{a.shape} and {b.shape}"
        )
    return a, b


@dataclass(frozen=True, eq=False)
class ReducedVelocityPair:
    """Element (X, Y) of g x g, the reduction of TTG."""

    X: np.ndarray
    Y: np.ndarray

    def __post_init__(self):
        X, Y = _pair_arrays(self.X, self.Y)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)


@dataclass(frozen=True, eq=False)
class ReducedPhasePair:
    """Element (A, B) of g* x g*, the reduction of TT*G."""

    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        A, B = _pair_arrays(self.A, self.B)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)


@dataclass(frozen=True, eq=False)
class ReducedMixedPair:
    """Element (X, A) of g x g*, the reduction of the constraint sets."""

    X: np.ndarray
    A: np.ndarray

    def __post_init__(self):
        X, A = _pair_arrays(self.X, self.A)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "A", A)


def project_TTG(v):
    """Slots 2 and 4 of (g, X, Y, Z): the reduced velocity pair (X, Z)."""
    return ReducedVelocityPair(v.X, v.Z)


def project_TTsG(rho):
    """Slots 2 and 4 of (g, A, X, B): the reduced phase pair (A, B)."""
    return ReducedPhasePair(rho.A, rho.B)


def project_K(w):
    """Reduce a point (g, X, 0, A) of the constraint set K to (X, A)."""
    return ReducedMixedPair(w.X, w.B)


def project_C(u):
    """Reduce a point (g, A, 0, X) of the constraint set C to (X, A)."""
    return ReducedMixedPair(u.X, u.A)


def in_K(w, tol=MEMBERSHIP_TOL):
    """Whether a T*TG point lies on K = {(g, X, 0, A)} (third slot zero)."""
    return bool(np.max(np.abs(w.A)) <= tol)


def in_C(u, tol=MEMBERSHIP_TOL):
    """Whether a T*T*G point lies on C = {(g, A, 0, X)} (third slot zero)."""
    return bool(np.max(np.abs(u.B)) <= tol)


def kappa_reduced_related(alg, p, q, tol=MEMBERSHIP_TOL):
    """Whether (X1, Y1) and (X2, Y2) are related by the reduced flip.

    The flip of TTG does not descend to a map on g x g, only to the
    relation Y2 = Y1 - [X1, X2]; a single pair is related to many others.
    """
    residual = q.Y - (p.Y - bracket(alg, p.X, q.X))
    return bool(np.max(np.abs(residual)) <= tol)


def alpha_reduced(alg, X, A):
    """Reduced alpha: (X, A) -> (A, ad*_X A) on g x g* -> g* x g*."""
    return ReducedPhasePair(A, coad(alg, X, A))


def beta_reduced(alg, A, X):
    """Reduced beta: (A, X) -> (A, ad*_X A); same fiber formula as alpha."""
    return ReducedPhasePair(A, coad(alg, X, A))


def lie_poisson_bracket(alg, X, Y):
    """Derived bracket of the linear functions f_X(A) = <A, X> on g*.

    {f_X, f_Y} is again linear and is represented by [X, Y]:
    {f_X, f_Y}(A) = <A, [X, Y]>.  This encodes the linear Poisson
    structure on g* whose Hamiltonian flows are B' = ad*_{dh/dB} B.
    """
    return bracket(alg, X, Y)

"""Finite-dimensional Lie algebras defined by structure constants.

A :class:`LieAlgebraStructure` stores the constants ``c[i, j, k]`` of
``[e_i, e_j] = sum_k c[i, j, k] e_k`` in a fixed basis.  Elements of the
algebra and of its dual are plain coordinate arrays in that basis and its
dual basis, so every operation here is ordinary multilinear algebra.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError

__all__ = [
    "LieAlgebraStructure",
    "StructureReport",
    "STRUCTURE_TOL",
    "bracket",
    "ad",
    "coad",
    "pair",
    "so3",
    "heisenberg5",
    "abelian",
    "validate_structure",
]

# Tolerance for algebraic residuals (~100x double epsilon at unit scale).
STRUCTURE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class LieAlgebraStructure:
    """A Lie algebra presented by structure constants in a fixed basis."""

    dim: int
    c: np.ndarray
    name: str = ""

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("algebra dimension must be a positive integer")
        c = np.array(self.c, dtype=float)
        if c.shape != (self.dim, self.dim, self.dim):
            raise ValueError(
                f"structure constants must have shape {(self.dim,) * 3}, got {c.shape}"
            )
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    def coords(self, v):
        """Coerce v to a coordinate vector of this algebra's dimension."""
        v = np.asarray(v, dtype=float)
        if v.shape != (self.dim,):
            raise DimensionMismatchError(
                f"expected {self.dim} coordinates, got shape {v.shape}"
            )
        return v

    def basis(self, i):
        """The i-th basis coordinate vector e_i (0-indexed)."""
        e = np.zeros(self.dim)
        e[i] = 1.0
        return e


def bracket(alg, X, Y):
    """Lie bracket [X, Y] in coordinates: sum_ij c[i,j,:] X_i Y_j."""
    X = alg.coords(X)
    Y = alg.coords(Y)
    return np.einsum("ijk,i,j->k", alg.c, X, Y)


def ad(alg, X):
    """Matrix of ad_X : Y -> [X, Y]; column j is bracket(X, e_j)."""
    X = alg.coords(X)
    return np.einsum("ijk,i->kj", alg.c, X)


def coad(alg, X, A):
    """Coadjoint action ad*_X A, fixed by <ad*_X A, Y> = <A, [X, Y]>.

    In coordinates this is transpose(ad(X)) @ A.  For so(3) under the
    usual vector identification it equals the cross product A x X.
    """
    X = alg.coords(X)
    A = alg.coords(A)
    return ad(alg, X).T @ A


def pair(A, X):
    """Canonical dual pairing <A, X> = sum_i A_i X_i."""
    A = np.asarray(A, dtype=float)
    X = np.asarray(X, dtype=float)
    if A.shape != X.shape or A.ndim != 1:
        raise DimensionMismatchError(
            f"cannot pair shapes {A.shape} and {X.shape}"
        )
    return float(A @ X)


def so3():
    """The rotation algebra: [e1,e2]=e3 and cyclic, i.e. (R^3, cross)."""
    c = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i, j, k] = 1.0
        c[j, i, k] = -1.0
    return LieAlgebraStructure(3, c, name="so3")


def heisenberg5():
    """A 5-dimensional two-step nilpotent algebra.

    Nonzero brackets: [e1, e2] = e5 and [e3, e4] = e5; e5 is central.
    Useful as a non-compact contrast case to so(3) in property checks.
    """
    c = np.zeros((5, 5, 5))
    c[0, 1, 4] = 1.0
    c[1, 0, 4] = -1.0
    c[2, 3, 4] = 1.0
    c[3, 2, 4] = -1.0
    return LieAlgebraStructure(5, c, name="heisenberg5")


def abelian(dim):
    """The abelian algebra of a given dimension (all brackets vanish)."""
    return LieAlgebraStructure(dim, np.zeros((dim, dim, dim)), name=f"abelian{dim}")


@dataclass(frozen=True)
class StructureReport:
    """Residuals of the defining identities of a structure-constant array."""

    antisymmetry_residual: float
    jacobi_residual: float
    tolerance: float = STRUCTURE_TOL

    @property
    def passed(self):
        return (
            self.antisymmetry_residual <= self.tolerance
            and self.jacobi_residual <= self.tolerance
        )


def validate_structure(alg, tol=STRUCTURE_TOL):
    """Check antisymmetry and the Jacobi identity of alg's constants.

    Returns a :class:`StructureReport`; nothing is raised, so invalid
    inputs can be inspected.
    """
    c = alg.c
    anti = float(np.max(np.abs(c + np.swapaxes(c, 0, 1)))) if c.size else 0.0
    # jac[i,j,k,l] = sum_m c[i,j,m] c[m,k,l] + cyclic permutations of (i,j,k)
    cc = np.einsum("ijm,mkl->ijkl", c, c)
    jac = cc + cc.transpose(1, 2, 0, 3) + cc.transpose(2, 0, 1, 3)
    jacobi = float(np.max(np.abs(jac))) if jac.size else 0.0
    return StructureReport(anti, jacobi, tol)

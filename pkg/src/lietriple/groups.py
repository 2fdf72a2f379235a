"""Matrix Lie groups with an explicit generator basis.

A :class:`GroupSpec` bundles a :class:`~lietriple.algebra.LieAlgebraStructure`
with d x d generator matrices E_i realizing its basis, a membership test and
a reprojection rule.  Tangent and cotangent data are always carried in the
left-trivialized form: a velocity at g is reported as the algebra element
X with v = g @ hat(X), and derivatives along the group are taken along the
curves t -> g @ exp(t E_i).
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
import scipy.linalg

from .algebra import LieAlgebraStructure, abelian, so3, heisenberg5
from .errors import (
    GroupMismatchError,
    MembershipError,
    RepresentationError,
    TangencyError,
)

__all__ = [
    "GroupSpec",
    "GroupElement",
    "MEMBERSHIP_TOL",
    "multiply",
    "inverse",
    "exp",
    "Ad",
    "trivialize_tangent",
    "left_derivative",
    "so3_group",
    "heisenberg5_group",
    "abelian_group",
]

MEMBERSHIP_TOL = 1e-9
FD_STEP = 1e-6


@dataclass(frozen=True, eq=False)
class GroupSpec:
    """A matrix group: algebra, generators, membership and reprojection."""

    name: str
    algebra: LieAlgebraStructure
    generators: np.ndarray  # shape (n, d, d)
    membership_residual: Callable[[np.ndarray], float]
    reproject: Callable[[np.ndarray], np.ndarray]
    # Optional closed forms; generic fallbacks are used when absent.
    exp_matrix: Optional[Callable[[np.ndarray], np.ndarray]] = None
    inverse_matrix: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __post_init__(self):
        gens = np.array(self.generators, dtype=float)
        n = self.algebra.dim
        if gens.ndim != 3 or gens.shape[0] != n or gens.shape[1] != gens.shape[2]:
            raise ValueError(
                f"generators must have shape ({n}, d, d), got {gens.shape}"
            )
        gens.setflags(write=False)
        object.__setattr__(self, "generators", gens)
        res = _commutator_residual(self.algebra, gens)
        if res > 1e-12:
            raise RepresentationError(
                f"generator commutators do not reproduce the structure "
                f"constants of {self.algebra.name!r} (residual {res:.3e})"
            )

    @property
    def mat_dim(self):
        return self.generators.shape[1]

    def identity(self):
        return GroupElement(np.eye(self.mat_dim), self)

    def to_matrix(self, X):
        """hat: algebra coordinates -> d x d matrix sum_i X_i E_i."""
        X = self.algebra.coords(X)
        return np.tensordot(X, self.generators, axes=1)

    def from_matrix(self, m, tol=MEMBERSHIP_TOL, err=RepresentationError):
        """Expand a d x d matrix in the generator basis (least squares).

        Raises err if the residual of the expansion exceeds tol.
        """
        m = np.asarray(m, dtype=float)
        n = self.algebra.dim
        basis = self.generators.reshape(n, -1).T
        coords, *_ = np.linalg.lstsq(basis, m.ravel(), rcond=None)
        residual = float(np.max(np.abs(basis @ coords - m.ravel())))
        if residual > tol:
            raise err(
                f"matrix is not in the span of the {self.name!r} generators "
                f"(residual {residual:.3e})"
            )
        return coords


def _commutator_residual(alg, gens):
    res = 0.0
    for i in range(alg.dim):
        for j in range(alg.dim):
            comm = gens[i] @ gens[j] - gens[j] @ gens[i]
            expected = np.tensordot(alg.c[i, j], gens, axes=1)
            res = max(res, float(np.max(np.abs(comm - expected))))
    return res


@dataclass(frozen=True, eq=False)
class GroupElement:
    """A point of a matrix group, validated against the membership test."""

    mat: np.ndarray
    group: GroupSpec

    def __post_init__(self):
        m = np.array(self.mat, dtype=float)
        d = self.group.mat_dim
        if m.shape != (d, d):
            raise ValueError(f"expected a {d}x{d} matrix, got shape {m.shape}")
        res = self.group.membership_residual(m)
        if not res <= MEMBERSHIP_TOL:
            raise MembershipError(
                f"matrix fails the {self.group.name!r} membership test "
                f"(residual {res:.3e})"
            )
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)


def multiply(g, h):
    """Group product g @ h."""
    if g.group is not h.group:
        raise GroupMismatchError(
            f"cannot multiply elements of {g.group.name!r} and {h.group.name!r}"
        )
    return GroupElement(g.mat @ h.mat, g.group)


def inverse(g):
    """Group inverse (transpose for rotations, closed form where known)."""
    spec = g.group
    if spec.inverse_matrix is not None:
        return GroupElement(spec.inverse_matrix(g.mat), spec)
    return GroupElement(np.linalg.inv(g.mat), spec)


def exp(spec, X, t=1.0):
    """Group exponential of t * X, using a closed form when available."""
    w = float(t) * spec.algebra.coords(X)
    if spec.exp_matrix is not None:
        m = spec.exp_matrix(w)
    else:
        m = scipy.linalg.expm(spec.to_matrix(w))
    return GroupElement(m, spec)


def Ad(g, X):
    """Adjoint action: coordinates of g @ hat(X) @ g^-1."""
    spec = g.group
    m = g.mat @ spec.to_matrix(X) @ inverse(g).mat
    return spec.from_matrix(m)


def trivialize_tangent(spec, g, v):
    """Left-trivialize a tangent matrix v at g to (g, X) with v = g @ hat(X)."""
    v = np.asarray(v, dtype=float)
    X = spec.from_matrix(inverse(g).mat @ v, err=TangencyError)
    return g, X


def left_derivative(spec, f, g, step=FD_STEP):
    """Left-trivialized differential of a scalar function on the group.

    Returns the covector D with <D, Y> = d/dt|_0 f(g @ exp(t Y)), computed
    per basis direction by central finite differences.
    """
    D = np.zeros(spec.algebra.dim)
    for i in range(spec.algebra.dim):
        e = spec.algebra.basis(i)
        fp = f(multiply(g, exp(spec, e, step)))
        fm = f(multiply(g, exp(spec, e, -step)))
        D[i] = (fp - fm) / (2.0 * step)
    return D


# ---------------------------------------------------------------------------
# Built-in groups
# ---------------------------------------------------------------------------

_SO3_GENERATORS = np.array(
    [
        [[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]],
        [[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]],
        [[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]],
    ]
)


def _so3_membership_residual(m):
    if np.linalg.det(m) <= 0.0:
        return np.inf
    return float(np.max(np.abs(m.T @ m - np.eye(3))))


def _gram_schmidt(m):
    q = np.array(m, dtype=float)
    for j in range(q.shape[1]):
        for k in range(j):
            q[:, j] -= (q[:, k] @ q[:, j]) * q[:, k]
        q[:, j] /= np.linalg.norm(q[:, j])
    return q


def _so3_exp(w):
    """Rotation about axis w by angle |w| (closed form, small-angle safe)."""
    theta = float(np.linalg.norm(w))
    K = np.tensordot(w, _SO3_GENERATORS, axes=1)
    if theta < 1e-8:
        a = 1.0 - theta**2 / 6.0
        b = 0.5 - theta**2 / 24.0
    else:
        a = np.sin(theta) / theta
        b = (1.0 - np.cos(theta)) / theta**2
    return np.eye(3) + a * K + b * (K @ K)


def so3_group():
    """SO(3) as 3x3 rotation matrices over the so3() algebra."""
    return GroupSpec(
        name="SO(3)",
        algebra=so3(),
        generators=_SO3_GENERATORS,
        membership_residual=_so3_membership_residual,
        reproject=_gram_schmidt,
        exp_matrix=_so3_exp,
        inverse_matrix=np.transpose,
    )


# Unipotent 4x4 realization of heisenberg5().  The five generators occupy
# the matrix positions below; [E1,E2] = [E3,E4] = E5 and all else vanishes.
_H5_POSITIONS = ((0, 1), (1, 3), (0, 2), (2, 3), (0, 3))


def _h5_generators():
    gens = np.zeros((5, 4, 4))
    for k, (i, j) in enumerate(_H5_POSITIONS):
        gens[k, i, j] = 1.0
    return gens


def _h5_pattern_mask():
    free = np.zeros((4, 4), dtype=bool)
    for i, j in _H5_POSITIONS:
        free[i, j] = True
    return free


_H5_FREE = _h5_pattern_mask()


def _h5_membership_residual(m):
    fixed = np.where(_H5_FREE, 0.0, m - np.eye(4))
    return float(np.max(np.abs(fixed)))


def _h5_reproject(m):
    out = np.eye(4)
    out[_H5_FREE] = m[_H5_FREE]
    return out


def _h5_exp(w):
    N = np.tensordot(w, _h5_generators(), axes=1)
    return np.eye(4) + N + 0.5 * (N @ N)  # exact: N @ N @ N = 0


def _h5_inverse(m):
    N = m - np.eye(4)
    return np.eye(4) - N + N @ N


def heisenberg5_group():
    """The unipotent matrix group integrating heisenberg5()."""
    return GroupSpec(
        name="H5",
        algebra=heisenberg5(),
        generators=_h5_generators(),
        membership_residual=_h5_membership_residual,
        reproject=_h5_reproject,
        exp_matrix=_h5_exp,
        inverse_matrix=_h5_inverse,
    )


def abelian_group(dim):
    """R^dim realized as (dim+1)-square translation matrices."""
    gens = np.zeros((dim, dim + 1, dim + 1))
    for i in range(dim):
        gens[i, i, dim] = 1.0
    free = gens.sum(axis=0) > 0.0
    eye = np.eye(dim + 1)

    def residual(m):
        return float(np.max(np.abs(np.where(free, 0.0, m - eye))))

    def reproject(m):
        out = eye.copy()
        out[free] = m[free]
        return out

    return GroupSpec(
        name=f"R^{dim}",
        algebra=abelian(dim),
        generators=gens,
        membership_residual=residual,
        reproject=reproject,
        exp_matrix=lambda w: eye + np.tensordot(w, gens, axes=1),
        inverse_matrix=lambda m: 2.0 * eye - m,
    )

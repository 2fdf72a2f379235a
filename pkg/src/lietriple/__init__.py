"""Trivialized iterated bundles over a Lie group and reduced dynamics.

The package represents the tangent and cotangent bundles of TG and T*G
as products of a matrix group with copies of its Lie algebra and dual,
implements the canonical maps between them (the flip of TTG, the two
double-bundle isomorphisms, and the musical map of the symplectic form),
reduces everything by the group symmetry down to the algebra and its
dual, and integrates the resulting Euler-Poincare / Lie-Poisson
equations -- with the free rigid body as the built-in worked system.
"""

from .algebra import (
    LieAlgebraStructure,
    StructureReport,
    abelian,
    ad,
    bracket,
    coad,
    heisenberg5,
    pair,
    so3,
    validate_structure,
)
from .errors import (
    ConfigError,
    DegenerateInertiaError,
    DimensionMismatchError,
    GroupMismatchError,
    HyperregularityError,
    LieTripleError,
    MembershipError,
    NumericalError,
    ProjectionMismatchError,
    RepresentationError,
    TangencyError,
)
from .fileio import (
    SimulationConfig,
    load_config,
    parse_body,
    parse_config,
    read_trajectory,
    run_simulation,
    write_trajectory,
)
from .groups import (
    Ad,
    GroupElement,
    GroupSpec,
    abelian_group,
    exp,
    heisenberg5_group,
    inverse,
    left_derivative,
    multiply,
    so3_group,
    trivialize_tangent,
)
from .maps import (
    PointTTG,
    PointTTsG,
    PointTsTG,
    PointTsTsG,
    TrivializedField,
    alpha,
    alpha_inv,
    beta,
    beta_inv,
    constant_field,
    field_bracket,
    field_commutator,
    gamma,
    gamma_inv,
    kappa,
    omega_at,
    theta,
    trace_coefficient_field,
    tstg_pairing,
    tstst_pairing,
    tt_pairing,
)
from .mechanics import (
    ReducedHamiltonian,
    ReducedLagrangian,
    TrajectoryRecord,
    TrivializedHamiltonian,
    TrivializedLagrangian,
    dynamics_point_lagrangian,
    hamiltonian_field,
    integrate_reduced,
    integrate_with_reconstruction,
    legendre,
    legendre_transform,
    reduced_dynamics,
    reduced_hamiltonian_field,
)
from .reduction import (
    ReducedMixedPair,
    ReducedPhasePair,
    ReducedVelocityPair,
    alpha_reduced,
    beta_reduced,
    in_C,
    in_K,
    kappa_reduced_related,
    lie_poisson_bracket,
    project_C,
    project_K,
    project_TTG,
    project_TTsG,
)
from .rigidbody import (
    BodySpec,
    InertiaForm,
    classical_inertia_matrix,
    euler_rhs,
    hat,
    inertia_from_body,
    inertia_iso,
    inertia_iso_inv,
    rigid_body_hamiltonian,
    rigid_body_lagrangian,
    symmetric_top_oracle,
    vee,
)
from .verification import run_verification

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # algebra
    "LieAlgebraStructure",
    "StructureReport",
    "abelian",
    "ad",
    "bracket",
    "coad",
    "heisenberg5",
    "pair",
    "so3",
    "validate_structure",
    # errors
    "ConfigError",
    "DegenerateInertiaError",
    "DimensionMismatchError",
    "GroupMismatchError",
    "HyperregularityError",
    "LieTripleError",
    "MembershipError",
    "NumericalError",
    "ProjectionMismatchError",
    "RepresentationError",
    "TangencyError",
    # groups
    "Ad",
    "GroupElement",
    "GroupSpec",
    "abelian_group",
    "exp",
    "heisenberg5_group",
    "inverse",
    "left_derivative",
    "multiply",
    "so3_group",
    "trivialize_tangent",
    # maps
    "PointTTG",
    "PointTTsG",
    "PointTsTG",
    "PointTsTsG",
    "TrivializedField",
    "alpha",
    "alpha_inv",
    "beta",
    "beta_inv",
    "constant_field",
    "field_bracket",
    "field_commutator",
    "gamma",
    "gamma_inv",
    "kappa",
    "omega_at",
    "theta",
    "trace_coefficient_field",
    "tstg_pairing",
    "tstst_pairing",
    "tt_pairing",
    # reduction
    "ReducedMixedPair",
    "ReducedPhasePair",
    "ReducedVelocityPair",
    "alpha_reduced",
    "beta_reduced",
    "in_C",
    "in_K",
    "kappa_reduced_related",
    "lie_poisson_bracket",
    "project_C",
    "project_K",
    "project_TTG",
    "project_TTsG",
    # mechanics
    "ReducedHamiltonian",
    "ReducedLagrangian",
    "TrajectoryRecord",
    "TrivializedHamiltonian",
    "TrivializedLagrangian",
    "dynamics_point_lagrangian",
    "hamiltonian_field",
    "integrate_reduced",
    "integrate_with_reconstruction",
    "legendre",
    "legendre_transform",
    "reduced_dynamics",
    "reduced_hamiltonian_field",
    # rigid body
    "BodySpec",
    "InertiaForm",
    "classical_inertia_matrix",
    "euler_rhs",
    "hat",
    "inertia_from_body",
    "inertia_iso",
    "inertia_iso_inv",
    "rigid_body_hamiltonian",
    "rigid_body_lagrangian",
    "symmetric_top_oracle",
    "vee",
    # io
    "SimulationConfig",
    "load_config",
    "parse_body",
    "parse_config",
    "read_trajectory",
    "run_simulation",
    "write_trajectory",
    # verification
    "run_verification",
]

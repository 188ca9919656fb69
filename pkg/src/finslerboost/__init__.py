"""Generalized Lorentz boosts of a flat anisotropic (Finslerian) event space.

Matrix transformations, composition laws, the bispinor representation,
the two noncompact subgroups, and the Lobachevsky geometry of velocity
space, with a seeded conformance-check CLI.

All types are immutable values and all operations are pure functions;
everything here is safe to call from any number of threads.
"""
from .core import (
    DEFAULT_TOL,
    AnisotropySpec,
    DegenerateRatio,
    DomainError,
    FourVector,
    NonOrthogonal,
    NonTimelike,
    NullDensity,
    OffHorosphere,
    OutOfRange,
    SpacelikeInput,
    Tolerance,
    UnitVector3,
    Velocity3,
    ZeroVelocity,
    cross3,
    dot3,
    finsler_interval_sq,
    minkowski_interval,
    norm3,
)
from .boost import (
    BoostParams,
    add_velocities,
    apply_matrix,
    axial_rotation,
    boost_matrix,
    boost_matrix_inverse,
    compose,
    dilation_factor,
    generalized_boost_matrix,
    generalized_generator,
    generator,
    params_from_velocity,
    translate,
    velocity_from_params,
)
from .subgroups import (
    AbelianParams,
    AxialInvariants,
    AxialParams,
    abelian_params_from_velocity,
    abelian_transform,
    abelian_transform_v,
    abelian_velocity,
    axial_invariants,
    axial_transform,
)
from .spinor import (
    bispinor_matrix,
    bispinor_transform,
    dirac_adjoint,
    finsler_bispinor_invariant,
    gamma_basis,
    spinor_boost,
    spinor_generator,
)
from .velocity_space import (
    SurfaceSample,
    cylinder_level,
    horosphere_level,
    induced_motion,
    lobachevsky_distance,
    sample_surface,
)

__version__ = "0.1.0"

"""Exact projector decompositions of the diagonal for spaces whose
cohomology is given by finite rational tables.

The package builds graded basis rings with exact structure constants,
runs the calculus of degree-shifted correspondences between them,
constructs graded projector decompositions of the diagonal class
(closed forms where available, two-sided orthogonalization otherwise),
verifies idempotence / orthogonality / completeness / graded action
with zero tolerance, lifts decompositions into truncated
parameter-ring models of group actions, and transports them along the
supported ring surjections. A batch command-line front end mirrors
the library surface.
"""

from .errors import (
    ChowKunnethError,
    DegeneratePairing,
    IncompleteInput,
    InvalidSpec,
    NonLefschetzRange,
    NotIdempotent,
    NotRingMap,
    OddRankObstruction,
    PreconditionViolated,
    RingAxiomError,
    RingMismatch,
    UnsupportedAction,
)
from .graded_ring import (
    ClassVector,
    GradedBasisRing,
    RingMap,
    tensor_class,
    tensor_ring,
)
from .spaces import (
    barth_range,
    blowup,
    build_space,
    ci_model,
    fano_delta,
    fano_delta_notes,
    grassmannian,
    hypersurface_model,
    kill_primitive_middle,
    plane_curve_family,
    product_space,
    projective_space,
    rep_variety_dim,
)
from .correspondences import (
    CorrespondenceClass,
    act,
    compose,
    diagonal,
    exterior_product,
    from_pair,
    map_correspondence,
    transpose,
    zero_correspondence,
)
from .kunneth import (
    MotiveObject,
    ProjectorSet,
    algebraic_projectors,
    coevaluation_projector,
    failing_checks,
    full_projectors,
    gram_schmidt_orthogonalize,
    hypersurface_projectors,
    is_morphism,
    lefschetz_motive,
    motive_of_space,
    product_projectors,
    remainder_projector,
    report_passes,
    tate_twist,
    tensor_motives,
    unit_motive,
    verify_ck,
)
from .equivariant import (
    EquivariantCorrespondence,
    EquivariantModel,
    EquivariantProjectorFamily,
    GroupSpec,
    TruncatedPolyRing,
    bg_ring,
    bottom_weight_restriction,
    compare_lifted_coefficients,
    equivariant_projective_torus,
    equivariant_trivial_action,
    general_linear_group,
    lift_projectors,
    stabilization_check,
    torus_group,
    verify_equivariant,
)
from . import schubert, serialize

__version__ = "0.1.0"

__all__ = [
    "ChowKunnethError",
    "DegeneratePairing",
    "IncompleteInput",
    "InvalidSpec",
    "NonLefschetzRange",
    "NotIdempotent",
    "NotRingMap",
    "OddRankObstruction",
    "PreconditionViolated",
    "RingAxiomError",
    "RingMismatch",
    "UnsupportedAction",
    "ClassVector",
    "GradedBasisRing",
    "RingMap",
    "tensor_class",
    "tensor_ring",
    "barth_range",
    "blowup",
    "build_space",
    "ci_model",
    "fano_delta",
    "fano_delta_notes",
    "grassmannian",
    "hypersurface_model",
    "kill_primitive_middle",
    "plane_curve_family",
    "product_space",
    "projective_space",
    "rep_variety_dim",
    "CorrespondenceClass",
    "act",
    "compose",
    "diagonal",
    "exterior_product",
    "from_pair",
    "map_correspondence",
    "transpose",
    "zero_correspondence",
    "MotiveObject",
    "ProjectorSet",
    "algebraic_projectors",
    "coevaluation_projector",
    "failing_checks",
    "full_projectors",
    "gram_schmidt_orthogonalize",
    "hypersurface_projectors",
    "is_morphism",
    "lefschetz_motive",
    "motive_of_space",
    "product_projectors",
    "remainder_projector",
    "report_passes",
    "tate_twist",
    "tensor_motives",
    "unit_motive",
    "verify_ck",
    "EquivariantCorrespondence",
    "EquivariantModel",
    "EquivariantProjectorFamily",
    "GroupSpec",
    "TruncatedPolyRing",
    "bg_ring",
    "bottom_weight_restriction",
    "compare_lifted_coefficients",
    "equivariant_projective_torus",
    "equivariant_trivial_action",
    "general_linear_group",
    "lift_projectors",
    "stabilization_check",
    "torus_group",
    "verify_equivariant",
    "schubert",
    "serialize",
    "__version__",
]

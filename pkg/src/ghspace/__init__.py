"""Exact toolkit for finite metric spaces under the Gromov-Hausdorff distance."""
from .correspondence import (
    Correspondence,
    IrreducibleDecomposition,
    Relation,
    decompose_irreducible,
    distortion,
    enumerate_correspondences,
    enumerate_irreducible,
    is_irreducible,
)
from .embedding import (
    AnchorSpace,
    EmbeddingReport,
    EmbeddingResult,
    KuratowskiImage,
    build_anchor,
    embed,
    kuratowski,
    least_k,
    pad_to,
    verify_embedding,
)
from .errors import *  # noqa: F401,F403
from .io import load_space, parse_space_json, parse_space_matrix, save_space, space_from_json, space_to_json
from .metric import (
    DeltaValue,
    FiniteMetricSpace,
    StructuralIsomorphism,
    delta,
    diameter,
    is_generic,
    perturb,
    simplex,
    single_point,
    structural_isomorphism,
    validate_metric,
)
from .nu import (
    IsometryReport,
    LinfBall,
    NuVector,
    incompressibility_check,
    linf_distance,
    local_isometry_check,
    nu,
    nu_inverse,
)
from .sampling import random_generic_space, random_metric_space, sample_generic
from .solver import GHResult, gh_distance_exact, gh_upper_bound_diam

__version__ = "0.1.0"

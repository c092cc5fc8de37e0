"""Reed-Muller and projective Reed-Muller codes over small prime fields:
construction, exact weight enumeration, closed-form weight formulas and
finite-geometry cross-checks."""

from .codes import (
    PRM,
    RM,
    Code,
    CodeParams,
    build,
    build_prm,
    build_rm,
    code_to_bitdump,
    code_to_json,
    rref,
)
from .errors import BudgetExceeded, DomainError
from .formulas import (
    W2Candidates,
    w1_prm,
    w1_rm,
    w2_prm_binary,
    w2_rm_binary,
    w2_rm_candidates,
)
from .geometry import (
    Subspace,
    check_subspace_bounds,
    dehomogenize_on_chart,
    enumerate_subspaces,
    find_avoiding_subspace,
    find_avoiding_subspace_at_least,
    gaussian_binomial,
    projective_support,
    subspace_from_forms,
    zero_set_is_hyperplane_union,
)
from .gfp import GF
from .points import affine_points, projective_points, standardize
from .poly import Poly, lift_affine, parse_poly
from .weights import (
    WeightReport,
    Witness,
    codeword_support,
    naive_weight_counts,
    report_to_json,
    weight_report,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Code",
    "CodeParams",
    "DomainError",
    "GF",
    "PRM",
    "Poly",
    "RM",
    "Subspace",
    "W2Candidates",
    "WeightReport",
    "Witness",
    "affine_points",
    "build",
    "build_prm",
    "build_rm",
    "check_subspace_bounds",
    "code_to_bitdump",
    "code_to_json",
    "codeword_support",
    "dehomogenize_on_chart",
    "enumerate_subspaces",
    "find_avoiding_subspace",
    "find_avoiding_subspace_at_least",
    "gaussian_binomial",
    "lift_affine",
    "naive_weight_counts",
    "parse_poly",
    "projective_points",
    "projective_support",
    "report_to_json",
    "rref",
    "standardize",
    "subspace_from_forms",
    "weight_report",
    "w1_prm",
    "w1_rm",
    "w2_prm_binary",
    "w2_rm_binary",
    "w2_rm_candidates",
    "zero_set_is_hyperplane_union",
]

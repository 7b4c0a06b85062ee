"""Exact numerical ranges, numerical radii and numerical indices of finite-dimensional real normed spaces."""
from .attainment import (
    attainment_set,
    bj_orthogonal_w,
    exposed_point_check,
    nu_smooth,
    rank_one_spear,
)
from .errors import (
    CertificationFailure,
    DegenerateSeminorm,
    NotExtremeError,
    PreconditionError,
    ZeroRadius,
)
from .index import (
    is_w_norm,
    mcgregor,
    numerical_index_exact,
    numerical_index_search,
    spear_check_identity,
)
from .operators import (
    AdmissiblePair,
    Operator,
    admissible_pairs,
    numerical_radius,
    numerical_range,
    op_norm,
)
from .space import (
    LpSpace,
    PolytopeSpace,
    dual_norm,
    dualize,
    extreme_points,
    is_smooth_point,
    is_smooth_space,
    is_strictly_convex,
    l1,
    linf,
    lp,
    norm,
    octagon,
    polytope,
    support_set,
)
from .tensor import (
    TensorFunctional,
    build_A,
    build_M,
    count_extremes,
    dedup_by_G,
    extreme_dual_w,
    op_ball,
    verify_hull_equality,
    w_ball,
)

__version__ = "0.1.0"

__all__ = [
    "attainment_set",
    "bj_orthogonal_w",
    "exposed_point_check",
    "nu_smooth",
    "rank_one_spear",
    "CertificationFailure",
    "DegenerateSeminorm",
    "NotExtremeError",
    "PreconditionError",
    "ZeroRadius",
    "is_w_norm",
    "mcgregor",
    "numerical_index_exact",
    "numerical_index_search",
    "spear_check_identity",
    "AdmissiblePair",
    "Operator",
    "admissible_pairs",
    "numerical_radius",
    "numerical_range",
    "op_norm",
    "LpSpace",
    "PolytopeSpace",
    "dual_norm",
    "dualize",
    "extreme_points",
    "is_smooth_point",
    "is_smooth_space",
    "is_strictly_convex",
    "l1",
    "linf",
    "lp",
    "norm",
    "octagon",
    "polytope",
    "support_set",
    "TensorFunctional",
    "build_A",
    "build_M",
    "count_extremes",
    "dedup_by_G",
    "extreme_dual_w",
    "op_ball",
    "verify_hull_equality",
    "w_ball",
]

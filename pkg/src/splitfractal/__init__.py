"""Exact computations on the split interval, the split square and the split carpet.

All coordinates are :class:`fractions.Fraction`; families of basic sets are
kept in a canonical merged form so equality is structural.
"""
from .algebra import (
    EUCLID_INTERVAL,
    EUCLID_SQUARE,
    SPACES,
    SPLIT_INTERVAL,
    SPLIT_SQUARE,
    Family,
    canonicalize,
    cell_count,
    family_complement,
    family_difference,
    family_equals,
    family_intersect,
    family_member,
    family_subset,
    family_union,
    is_empty,
)
from .carpet import (
    CarpetApprox,
    HoleIndex,
    first_hole_level,
    holes,
    in_split_carpet_level,
    q_meets_split_carpet,
    rect_meets_carpet,
    sc_member,
    sc_witness,
    sierpinski_level,
    split_carpet_level,
    surviving_cells,
)
from .errors import (
    InconsistencyError,
    PreconditionError,
    ResourceLimitError,
    SpaceMismatchError,
    SplitFractalError,
)
from .exact import AffineMap, TernaryStream, as_rational, format_rational, rational_cmp, ternary_stream
from .ifs import (
    BUILTIN_NAMES,
    DEFAULT_CAP,
    Ifs,
    IfsMap,
    PointCloud,
    builtin,
    cloud,
    hutchinson_family,
    hutchinson_points,
    iterate,
    product_cloud,
    product_ifs,
)
from .render import RenderSpec, render_svg
from .spaces import (
    FULL_INTERVAL,
    FULL_SQUARE,
    BasicInterval,
    BasicSquare,
    QuadPoint,
    SplitPoint,
    base_equivalence_witness,
    complement_interval,
    complement_square,
    homeo_h,
    homeo_h_inv,
    intersect_intervals,
    intersect_squares,
    member_interval,
    member_square,
    preimage_interval,
    preimage_square,
    separate,
    separate_split,
)
from .verify import (
    ConvergenceReport,
    attractor_certificate,
    convergence_semantics_witness,
    default_seeds,
    fixed_point_check,
    hausdorff_witness,
    lower_vietoris_check,
    separability_witness,
    upper_vietoris_check,
)

__version__ = "0.1.0"

__all__ = [
    "RenderSpec",
    "render_svg",
    "AffineMap",
    "BUILTIN_NAMES",
    "BasicInterval",
    "BasicSquare",
    "CarpetApprox",
    "ConvergenceReport",
    "DEFAULT_CAP",
    "EUCLID_INTERVAL",
    "EUCLID_SQUARE",
    "FULL_INTERVAL",
    "FULL_SQUARE",
    "Family",
    "HoleIndex",
    "Ifs",
    "IfsMap",
    "InconsistencyError",
    "PointCloud",
    "PreconditionError",
    "QuadPoint",
    "ResourceLimitError",
    "SPACES",
    "SPLIT_INTERVAL",
    "SPLIT_SQUARE",
    "SpaceMismatchError",
    "SplitFractalError",
    "SplitPoint",
    "TernaryStream",
    "as_rational",
    "attractor_certificate",
    "base_equivalence_witness",
    "builtin",
    "canonicalize",
    "cell_count",
    "cloud",
    "complement_interval",
    "complement_square",
    "convergence_semantics_witness",
    "default_seeds",
    "family_complement",
    "family_difference",
    "family_equals",
    "family_intersect",
    "family_member",
    "family_subset",
    "family_union",
    "first_hole_level",
    "fixed_point_check",
    "format_rational",
    "hausdorff_witness",
    "holes",
    "homeo_h",
    "homeo_h_inv",
    "hutchinson_family",
    "hutchinson_points",
    "in_split_carpet_level",
    "intersect_intervals",
    "intersect_squares",
    "is_empty",
    "iterate",
    "lower_vietoris_check",
    "member_interval",
    "member_square",
    "preimage_interval",
    "preimage_square",
    "product_cloud",
    "product_ifs",
    "q_meets_split_carpet",
    "rational_cmp",
    "rect_meets_carpet",
    "sc_member",
    "sc_witness",
    "separability_witness",
    "separate",
    "separate_split",
    "sierpinski_level",
    "split_carpet_level",
    "surviving_cells",
    "ternary_stream",
    "upper_vietoris_check",
]

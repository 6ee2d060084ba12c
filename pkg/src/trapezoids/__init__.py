"""Trapezoid-forming pairs of directed plane intervals.

A library for the arithmetic predicates deciding when two intervals form a
trapezoid (or orthodiagonal quadrilateral, or a fixed-slope-ratio pair),
the correspondence sending intervals to lines in R^3, detection of the
extremal structures behind large pair counts (concurrent lines, coplanar
pencils, doubly ruled quadrics), and generators for every known example
family.  Exact rational arithmetic is the default; float mode with a
relative tolerance exists for irrational inputs.
"""

from .scalars import (
    DEFAULT_TOLERANCE,
    EXACT,
    FLOAT,
    MixedModeError,
    Scalar,
    eq,
    is_zero,
)
from .primitives import (
    Interval,
    Line3,
    LineMeet,
    PlanarLine,
    Plane3,
    line_intersect,
    plane_of_lines,
    reverse,
)
from .relations import (
    COLLINEAR,
    EQUATION_ONLY,
    NO_RELATION,
    ORTHODIAGONAL,
    PairRelation,
    REVERSE_PAIR,
    SHARED_ENDPOINT,
    classify_orthodiagonal,
    orthodiagonal_relation,
    ratio_relation,
    trapezoid_relation,
)
from .conics import (
    Conic,
    DOUBLY_RULED,
    Quadric,
    conic_classify,
    conic_contains,
    conic_eval,
    line_on_quadric,
    quadric_classify,
    quadric_eval,
)
from .correspondence import (
    ExceptionalPairError,
    GenericRotationError,
    I2LReport,
    PlanarRotation,
    RigidMotion3,
    from_line,
    from_line_perp,
    from_line_ratio,
    generic_rotation,
    has_exceptional_pair,
    line_set,
    rotate_interval,
    rotate_x_action,
    to_line,
    to_line_perp,
    to_line_ratio,
    translate_action,
    verify_i2l,
)
from .detect import (
    ConcurrencyWitness,
    CoplanarWitness,
    DegenerateFit,
    PairCounts,
    Pencil,
    RegulusWitness,
    StructureReport,
    SubcaseWitness,
    analyze,
    classify_subcase,
    count_pairs,
    detect_concurrent,
    detect_coplanar,
    detect_regulus,
    fit_conic,
    fit_degree2_locus,
    fit_line,
    line_member,
    plane_to_pencil,
    quadric_through_skew_lines,
)
from .generate import (
    TransformOutcome,
    circle_point,
    gen_hyperboloid_rulings,
    gen_parallel_lines,
    gen_paraboloid_rulings,
    gen_pencil,
    gen_perp_pullback,
    gen_ratio_pullback,
    gen_subcase_ii,
    gen_transformed,
    hyperboloid_quadric,
    paraboloid_quadric,
    subcase_ii_quadric,
)

__version__ = "0.1.0"

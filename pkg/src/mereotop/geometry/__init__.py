"""Point-free plane geometry over exact-rational open disks.

Balls are the sole primitive; points are classes of concentric balls and
regions are regularized finite unions of balls.  Every predicate is decided
exactly in rational arithmetic, and region-level containment is a budgeted
three-valued procedure that never guesses at degenerate tangencies.
"""

from .balls import (
    Ball,
    PointClass,
    ball_pt,
    between,
    concent,
    diametral,
    dist2,
    ext_tangent,
    externally_diametral,
    int_tangent,
    internally_diametral,
    point_of,
)
from .regions import (
    WHOLE,
    BallUnion,
    BoundaryOf,
    Compl,
    Contained,
    Containment3,
    Join,
    NotContained,
    Region,
    RegionExpr,
    Unknown,
    Whole,
    adherent,
    boundary_member,
    check_tarski_postulates,
    closure_g,
    compl_g,
    convexity_counterexample,
    ext_region,
    hausdorff_separation,
    inner_ball,
    interior_g,
    interior_point,
    part_of_region,
    region_part_of,
    regions_equiv,
    sat_interior_point,
    tcompl,
)

__all__ = [
    "Ball",
    "PointClass",
    "ball_pt",
    "between",
    "concent",
    "diametral",
    "dist2",
    "ext_tangent",
    "externally_diametral",
    "int_tangent",
    "internally_diametral",
    "point_of",
    "WHOLE",
    "BallUnion",
    "BoundaryOf",
    "Compl",
    "Contained",
    "Containment3",
    "Join",
    "NotContained",
    "Region",
    "RegionExpr",
    "Unknown",
    "Whole",
    "adherent",
    "boundary_member",
    "check_tarski_postulates",
    "closure_g",
    "compl_g",
    "convexity_counterexample",
    "ext_region",
    "hausdorff_separation",
    "inner_ball",
    "interior_g",
    "interior_point",
    "part_of_region",
    "region_part_of",
    "regions_equiv",
    "sat_interior_point",
    "tcompl",
]

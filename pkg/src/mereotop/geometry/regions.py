"""Regions as regularized unions of disks, with exact topology operators.

A region denotes the interior of the closure of its disk union, a regular
open set.  Region-level parthood is decided by adaptive box subdivision with
exact rational discharge tests and a three-valued outcome: a box is dropped
when it misses the candidate disk or sinks into one covering disk, a witness
is extracted when a box sits inside the candidate but clear of every covering
disk, and the budget bounds the subdivision depth so degenerate tangency
configurations surface honestly as Unknown instead of a guessed answer.

Complements and closures of regions are not finite disk unions, so they are
kept symbolic: small expression trees whose membership predicates evaluate
pointwise through the exact interior and boundary tests.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from ..errors import BudgetInvalid, ConcentricPoints, WholeSpaceComplement
from .balls import Ball, Point, PointClass, ball_pt, dist2

# --------------------------------------------------------------------------
# Regions and three-valued containment


@dataclass(frozen=True)
class Region:
    """A nonempty finite set of balls standing for a regular open set."""

    balls: tuple[Ball, ...]

    def __post_init__(self) -> None:
        if not self.balls:
            raise ValueError("a region needs at least one ball")

    @classmethod
    def of(cls, *balls: Ball) -> Region:
        return cls(tuple(balls))

    def prune_redundant(self) -> Region:
        """Drop balls contained in a single other ball; semantics unchanged."""
        kept: list[Ball] = []
        for i, b in enumerate(self.balls):
            redundant = False
            for j, other in enumerate(self.balls):
                if i == j or not ball_pt(b, other):
                    continue
                if ball_pt(other, b) and i < j:
                    continue  # duplicate disks: keep the earliest
                redundant = True
                break
            if not redundant:
                kept.append(b)
        return Region(tuple(kept)) if kept else self

    def __repr__(self) -> str:
        return "Region[%s]" % ", ".join(repr(b) for b in self.balls)


@dataclass(frozen=True)
class Contained:
    def __repr__(self) -> str:
        return "Contained"


@dataclass(frozen=True)
class NotContained:
    witness: Point

    def __repr__(self) -> str:
        return f"NotContained(witness=({self.witness[0]}, {self.witness[1]}))"


@dataclass(frozen=True)
class Unknown:
    depth: int

    def __repr__(self) -> str:
        return f"Unknown(depth={self.depth})"


Containment3 = Contained | NotContained | Unknown

CONTAINED = Contained()


# --------------------------------------------------------------------------
# Box subdivision

Box = tuple[Fraction, Fraction, Fraction, Fraction]  # xlo, xhi, ylo, yhi


def _nearest2(box: Box, c: Point) -> Fraction:
    xlo, xhi, ylo, yhi = box
    dx = xlo - c[0] if c[0] < xlo else (c[0] - xhi if c[0] > xhi else Fraction(0))
    dy = ylo - c[1] if c[1] < ylo else (c[1] - yhi if c[1] > yhi else Fraction(0))
    return dx * dx + dy * dy


def _farthest2(box: Box, c: Point) -> Fraction:
    xlo, xhi, ylo, yhi = box
    dx = max(c[0] - xlo, xhi - c[0])
    dy = max(c[1] - ylo, yhi - c[1])
    return dx * dx + dy * dy


def part_of_region(b: Ball, region: Region, budget: int) -> Containment3:
    """Decide whether the closed disk of b lies under the region's closure.

    Equivalent to regular-open inclusion of b in the region.  Fast path:
    containment in one covering ball.  General path: depth-first subdivision
    of the bounding box of b; a surviving box entirely inside b's closed disk
    and outside every covering closed disk certifies NotContained with its
    center as witness, and exhausting the depth budget yields Unknown.
    """
    if budget < 1:
        raise BudgetInvalid(f"budget must be >= 1, got {budget}")
    for cover in region.balls:
        if ball_pt(b, cover):
            return CONTAINED
    r2 = b.r * b.r
    cover_r2 = [(cover.center, cover.r * cover.r) for cover in region.balls]
    root: Box = (b.cx - b.r, b.cx + b.r, b.cy - b.r, b.cy + b.r)
    stack: list[tuple[Box, int]] = [(root, 0)]
    exhausted = False
    while stack:
        box, depth = stack.pop()
        if _nearest2(box, b.center) > r2:
            continue
        if any(_farthest2(box, c) <= cr2 for c, cr2 in cover_r2):
            continue
        if _farthest2(box, b.center) <= r2 and all(
            _nearest2(box, c) > cr2 for c, cr2 in cover_r2
        ):
            xlo, xhi, ylo, yhi = box
            return NotContained(((xlo + xhi) / 2, (ylo + yhi) / 2))
        if depth >= budget:
            exhausted = True
            continue
        xlo, xhi, ylo, yhi = box
        mx = (xlo + xhi) / 2
        my = (ylo + yhi) / 2
        stack.extend(
            (
                ((xlo, mx, ylo, my), depth + 1),
                ((mx, xhi, ylo, my), depth + 1),
                ((xlo, mx, my, yhi), depth + 1),
                ((mx, xhi, my, yhi), depth + 1),
            )
        )
    if exhausted:
        return Unknown(budget)
    return CONTAINED


def region_part_of(p: Region, q: Region, budget: int) -> Containment3:
    """Three-valued conjunction of per-ball containment.

    NotContained dominates Unknown, which dominates an all-ball Contained.
    """
    pending: Unknown | None = None
    for b in p.balls:
        out = part_of_region(b, q, budget)
        if isinstance(out, NotContained):
            return out
        if isinstance(out, Unknown) and pending is None:
            pending = out
    return pending if pending is not None else CONTAINED


def ext_region(p: Region, q: Region) -> bool:
    """No common part: every pair of disks is disjoint or externally tangent.

    Regularization only adds measure-zero points, so the disk-pair test is
    exact for the regular open sets as well.
    """
    for a in p.balls:
        for b in q.balls:
            s = a.r + b.r
            if dist2(a.center, b.center) < s * s:
                return False
    return True


# --------------------------------------------------------------------------
# Exact interior and boundary membership


def _primitive_direction(dx: Fraction, dy: Fraction) -> tuple[int, int]:
    den = math.lcm(dx.denominator, dy.denominator)
    ix = dx.numerator * (den // dx.denominator)
    iy = dy.numerator * (den // dy.denominator)
    g = math.gcd(abs(ix), abs(iy))
    return (ix // g, iy // g)


def _half(v: tuple[int, int]) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _dir_cmp(a: tuple[int, int], b: tuple[int, int]) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def _interior_point_at(c: Point, region: Region) -> bool:
    """Exact membership of c in the interior of the union of closed disks.

    A disk whose circle passes through c admits exactly the open half-circle
    of directions toward its center.  c is interior iff it sits strictly
    inside some disk, or the half-circles of its rim disks cover every
    direction, which holds iff all cyclic gaps between the sorted center
    directions are strictly below a half turn.
    """
    rim_dirs: set[tuple[int, int]] = set()
    for ball in region.balls:
        d2 = dist2(c, ball.center)
        r2 = ball.r * ball.r
        if d2 < r2:
            return True
        if d2 == r2:
            rim_dirs.add(_primitive_direction(ball.cx - c[0], ball.cy - c[1]))
    if not rim_dirs:
        return False
    dirs = sorted(rim_dirs, key=functools.cmp_to_key(_dir_cmp))
    n = len(dirs)
    for i in range(n):
        a = dirs[i]
        b = dirs[(i + 1) % n]
        if a[0] * b[1] - a[1] * b[0] <= 0:
            return False
    return True


def adherent(c: Point, region: Region) -> bool:
    """c lies in the closure of the region: inside some closed disk."""
    return any(dist2(c, ball.center) <= ball.r * ball.r for ball in region.balls)


def interior_point(p: Ball, q: Region) -> bool:
    """The point of p is an interior point of q; only the center matters."""
    return _interior_point_at(p.center, q)


def sat_interior_point(p: Ball, q: Region, budget: int) -> Containment3:
    """Saturated interior point: the ball itself must be a part of the region."""
    return part_of_region(p, q, budget)


def boundary_member(p: Ball, q: Region) -> bool:
    """The center of p lies on the boundary: adherent but not interior."""
    return adherent(p.center, q) and not _interior_point_at(p.center, q)


# --------------------------------------------------------------------------
# Symbolic complements and closures


class RegionExpr:
    """Membership-level view of a region expression.

    Engine-built expressions stay within depth three, which is all the
    topological complement and closure constructions require.
    """

    def contains_center(self, c: Point) -> bool:
        raise NotImplementedError

    def closure_contains_center(self, c: Point) -> bool:
        raise NotImplementedError

    def boundary_contains_center(self, c: Point) -> bool:
        raise NotImplementedError

    def contains_ball(self, b: Ball) -> bool:
        return self.contains_center(b.center)


@dataclass(frozen=True)
class BallUnion(RegionExpr):
    region: Region

    def contains_center(self, c: Point) -> bool:
        return _interior_point_at(c, self.region)

    def closure_contains_center(self, c: Point) -> bool:
        return adherent(c, self.region)

    def boundary_contains_center(self, c: Point) -> bool:
        return adherent(c, self.region) and not _interior_point_at(c, self.region)


@dataclass(frozen=True)
class Whole(RegionExpr):
    def contains_center(self, c: Point) -> bool:
        return True

    def closure_contains_center(self, c: Point) -> bool:
        return True

    def boundary_contains_center(self, c: Point) -> bool:
        return False


WHOLE = Whole()


@dataclass(frozen=True)
class Compl(RegionExpr):
    """Regular complement: the exterior of the inner value's closure."""

    inner: RegionExpr

    def contains_center(self, c: Point) -> bool:
        return not self.inner.closure_contains_center(c)

    def closure_contains_center(self, c: Point) -> bool:
        return not self.inner.contains_center(c)

    def boundary_contains_center(self, c: Point) -> bool:
        # cl(compl) meets cl(inner) exactly on the shared boundary.
        return self.inner.closure_contains_center(c) and not self.inner.contains_center(c)


@dataclass(frozen=True)
class Join(RegionExpr):
    """Pointwise union, as used by the topological complement."""

    left: RegionExpr
    right: RegionExpr

    def contains_center(self, c: Point) -> bool:
        return self.left.contains_center(c) or self.right.contains_center(c)

    def closure_contains_center(self, c: Point) -> bool:
        return self.left.closure_contains_center(c) or self.right.closure_contains_center(c)

    def boundary_contains_center(self, c: Point) -> bool:
        raise NotImplementedError("boundary of a join is not membership-definable")


@dataclass(frozen=True)
class BoundaryOf(RegionExpr):
    inner: RegionExpr

    def contains_center(self, c: Point) -> bool:
        return self.inner.closure_contains_center(c) and not self.inner.contains_center(c)

    def closure_contains_center(self, c: Point) -> bool:
        # The boundary of a regular open set is closed.
        return self.contains_center(c)

    def boundary_contains_center(self, c: Point) -> bool:
        # A boundary set has empty interior, so it equals its own boundary.
        return self.contains_center(c)


def _as_expr(q: Region | RegionExpr) -> RegionExpr:
    if isinstance(q, Region):
        return BallUnion(q)
    return q


def compl_g(q: Region | RegionExpr) -> RegionExpr:
    """Mereological complement relative to the whole space."""
    if isinstance(q, Whole):
        raise WholeSpaceComplement("the whole space has no complement")
    return Compl(_as_expr(q))


def interior_g(q: Region | Whole) -> Region | Whole:
    """Topological interior: regions already denote regular open sets."""
    return q


def _interior_expr(e: RegionExpr) -> RegionExpr:
    # Every expression the engine builds denotes a regular open set, for
    # which the interior operator is the identity.
    return e


def tcompl(q: Region | RegionExpr) -> RegionExpr:
    """Topological complement: regular complement joined with the boundary."""
    e = _as_expr(q)
    if isinstance(e, Whole):
        raise WholeSpaceComplement("the whole space has no complement")
    return Join(Compl(e), BoundaryOf(e))


def closure_g(q: Region | RegionExpr) -> RegionExpr:
    """Closure: topological complement of the interior of the complement."""
    return tcompl(_interior_expr(compl_g(q)))


# --------------------------------------------------------------------------
# Separation, convexity, and the region postulates


def hausdorff_separation(p1: PointClass, p2: PointClass) -> tuple[Ball, Ball]:
    """Disjoint balls around two distinct points.

    The shared radius d^2 / (4 (|dx| + |dy|)) stays rational and never
    exceeds a quarter of the center distance, so the two balls are exactly
    disjoint and no ball can be a saturated interior point of both.
    """
    dx = p2.cx - p1.cx
    dy = p2.cy - p1.cy
    if dx == 0 and dy == 0:
        raise ConcentricPoints("coincident points cannot be separated")
    rho = (dx * dx + dy * dy) / (4 * (abs(dx) + abs(dy)))
    return Ball(p1.cx, p1.cy, rho), Ball(p2.cx, p2.cy, rho)


def inner_ball(host: Ball, c: Point) -> Ball | None:
    """A certified ball at c inside host, or None when c is not strictly inside.

    The radius (r^2 - d^2) / (2 r) is rational and provably fits, so the
    returned ball passes the exact parthood test against its host.
    """
    d2 = dist2(c, host.center)
    r2 = host.r * host.r
    if d2 >= r2:
        return None
    return Ball(c[0], c[1], (r2 - d2) / (2 * host.r))


def convexity_counterexample(
    q: Region, samples: int, seed: int
) -> tuple[Ball, Ball, Ball] | None:
    """Search for a betweenness violation of convexity.

    Samples pairs of certified interior balls of q and rational points
    between their centers; a between-point that fails the exact interior
    test yields a sound counterexample triple (middle, end, end).  Finding
    none is not a proof of convexity.
    """
    if samples < 1:
        raise BudgetInvalid(f"samples must be >= 1, got {samples}")
    rng = random.Random(seed)
    fractions_between = (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4))

    def sample_inside() -> tuple[Point, Ball] | None:
        host = q.balls[rng.randrange(len(q.balls))]
        u = Fraction(rng.randint(-8, 8), 16)
        v = Fraction(rng.randint(-8, 8), 16)
        c = (host.cx + host.r * u, host.cy + host.r * v)
        w = inner_ball(host, c)
        return None if w is None else (c, w)

    for _ in range(samples):
        first = sample_inside()
        second = sample_inside()
        if first is None or second is None:
            continue
        (c1, w1), (c2, w2) = first, second
        if c1 == c2:
            continue
        t = fractions_between[rng.randrange(3)]
        mid = (c1[0] + t * (c2[0] - c1[0]), c1[1] + t * (c2[1] - c1[1]))
        if not _interior_point_at(mid, q):
            middle = Ball(mid[0], mid[1], min(w1.r, w2.r))
            return (middle, w1, w2)
    return None


def regions_equiv(a: Region | Whole, b: Region | Whole, budget: int) -> bool:
    """Semantic equality of regions via mutual containment.

    Structural equality short-circuits; a finite disk union never equals the
    whole space.  An Unknown containment counts as not proven equivalent.
    """
    if isinstance(a, Whole) or isinstance(b, Whole):
        return isinstance(a, Whole) and isinstance(b, Whole)
    if a.balls == b.balls or frozenset(a.balls) == frozenset(b.balls):
        return True
    return isinstance(region_part_of(a, b, budget), Contained) and isinstance(
        region_part_of(b, a, budget), Contained
    )


def check_tarski_postulates(q: Region, budget: int):
    """Check the region postulates and companion facts on one region.

    Covers: the interior-point class of q is nonempty (witnessed by the ball
    centers) and forms a region equal to q; interior-point inclusion built
    from ball subsets forces region parthood; every single ball is a region;
    the whole space is a region; and q includes at least one ball as a part.
    """
    from ..kuratowski import LawReport, LawResult

    report = LawReport(subject="tarski-postulates", cases=len(q.balls), seed=None)

    centers_interior = [_interior_point_at(ball.center, q) for ball in q.balls]
    report.results.append(
        LawResult(
            "interior_points_nonempty",
            bool(centers_interior) and all(centers_interior),
            evaluated=len(centers_interior),
        )
    )

    interior_region = interior_g(q)
    ok_p3 = isinstance(interior_region, Region) and regions_equiv(
        interior_region, q, budget
    )
    report.results.append(LawResult("interior_point_class_is_region", ok_p3, 1))

    sub_ok = True
    evaluated = 0
    witness = None
    for i in range(len(q.balls)):
        for sub in (Region(q.balls[: i + 1]), Region((q.balls[i],))):
            evaluated += 1
            out = region_part_of(sub, q, budget)
            if not isinstance(out, Contained):
                sub_ok = False
                if witness is None:
                    witness = (sub, out)
    report.results.append(
        LawResult("interior_inclusion_implies_part", sub_ok, evaluated, 0, witness)
    )

    report.results.append(
        LawResult(
            "ball_singleton_is_region",
            all(isinstance(Region((ball,)), Region) for ball in q.balls),
            evaluated=len(q.balls),
        )
    )
    report.results.append(
        LawResult("whole_space_is_region", interior_g(WHOLE) is WHOLE, 1)
    )
    includes = [
        isinstance(part_of_region(ball, q, budget), Contained) for ball in q.balls
    ]
    report.results.append(
        LawResult(
            "region_includes_ball",
            bool(includes) and all(includes),
            evaluated=len(includes),
        )
    )
    return report

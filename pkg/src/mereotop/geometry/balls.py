"""Exact-rational predicates on open disks: parthood, tangency, betweenness.

Every test below compares squared distances against squared radius sums or
differences, so no square roots appear and all answers are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Point = tuple[Fraction, Fraction]


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Ball:
    """An open disk with rational center and positive rational radius."""

    cx: Fraction
    cy: Fraction
    r: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "cx", _rat(self.cx))
        object.__setattr__(self, "cy", _rat(self.cy))
        object.__setattr__(self, "r", _rat(self.r))
        if self.r <= 0:
            raise ValueError(f"radius must be positive, got {self.r}")

    @property
    def center(self) -> Point:
        return (self.cx, self.cy)

    def center_point(self) -> PointClass:
        return PointClass(self.cx, self.cy)

    def __repr__(self) -> str:
        return f"B({self.cx}, {self.cy}, {self.r})"


@dataclass(frozen=True)
class PointClass:
    """Canonical representative of all balls sharing a center."""

    cx: Fraction
    cy: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "cx", _rat(self.cx))
        object.__setattr__(self, "cy", _rat(self.cy))

    @property
    def center(self) -> Point:
        return (self.cx, self.cy)

    def __repr__(self) -> str:
        return f"P({self.cx}, {self.cy})"


def dist2(a: Point, b: Point) -> Fraction:
    """Squared Euclidean distance between two rational points."""
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def ball_pt(inner: Ball, outer: Ball) -> bool:
    """Open-disk containment; internal tangency still counts.

    The open disk of inner lies inside the open disk of outer exactly when
    the center distance does not exceed the radius difference.
    """
    if inner.r > outer.r:
        return False
    gap = outer.r - inner.r
    return dist2(inner.center, outer.center) <= gap * gap


def ext_tangent(a: Ball, b: Ball) -> bool:
    """The two circles touch from outside."""
    s = a.r + b.r
    return dist2(a.center, b.center) == s * s


def int_tangent(inner: Ball, outer: Ball) -> bool:
    """inner touches outer from inside; requires strictly smaller radius."""
    if inner == outer or inner.r >= outer.r:
        return False
    gap = outer.r - inner.r
    return dist2(inner.center, outer.center) == gap * gap


def _collinear_strictly_between(mid: Point, p: Point, q: Point) -> bool:
    # mid lies strictly inside segment [p, q]: collinear and the two
    # difference vectors point in opposite directions.
    ux, uy = p[0] - mid[0], p[1] - mid[1]
    vx, vy = q[0] - mid[0], q[1] - mid[1]
    cross = ux * vy - uy * vx
    dot = ux * vx + uy * vy
    return cross == 0 and dot < 0


def externally_diametral(d: Ball, e: Ball, f: Ball) -> bool:
    """d and f touch e from outside at antipodal contact points."""
    return (
        ext_tangent(d, e)
        and ext_tangent(f, e)
        and _collinear_strictly_between(e.center, d.center, f.center)
    )


def internally_diametral(d: Ball, e: Ball, f: Ball) -> bool:
    """d and f touch e from inside at antipodal contact points."""
    return (
        int_tangent(d, e)
        and int_tangent(f, e)
        and _collinear_strictly_between(e.center, d.center, f.center)
    )


def diametral(kind: str, d: Ball, e: Ball, f: Ball) -> bool:
    if kind == "external":
        return externally_diametral(d, e, f)
    if kind == "internal":
        return internally_diametral(d, e, f)
    raise ValueError(f"kind must be 'external' or 'internal', got {kind!r}")


def concent(a: Ball, b: Ball) -> bool:
    """Concentricity: equal centers."""
    return a.cx == b.cx and a.cy == b.cy


def point_of(p: Ball, q: Ball) -> bool:
    """p belongs to the point generated by q."""
    return concent(p, q)


def between(a: Ball, b: Ball, c: Ball) -> bool:
    """The center of a lies strictly inside the segment of the other centers.

    Equivalent to the witness form with externally diametral tangent balls:
    radii for the witnesses can always be chosen once the centers interpose.
    """
    return _collinear_strictly_between(a.center, b.center, c.center)


def transform_ball(b: Ball, scale: Fraction, dx: Fraction, dy: Fraction) -> Ball:
    """Apply a positive similarity (scaling then translation) to a ball."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    return Ball(b.cx * scale + dx, b.cy * scale + dy, b.r * scale)

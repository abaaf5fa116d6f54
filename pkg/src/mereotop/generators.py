"""Seeded generators for suite cases and engineered degenerate fixtures."""

from __future__ import annotations

import random
from fractions import Fraction

from .common import NEG_INF, POS_INF
from .geometry.balls import Ball
from .geometry.regions import Region
from .regopen import Interval, RegOpen1D

_DENOMS = (1, 2, 3, 4, 5, 8)


def draw_rational(rng: random.Random, lo: int = -24, hi: int = 24) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(_DENOMS))


def draw_positive_rational(rng: random.Random, hi: int = 12) -> Fraction:
    return Fraction(rng.randint(1, hi), rng.choice(_DENOMS))


def draw_ball(rng: random.Random) -> Ball:
    return Ball(draw_rational(rng), draw_rational(rng), draw_positive_rational(rng))


def draw_region(rng: random.Random, max_balls: int = 6) -> Region:
    count = rng.randint(1, max_balls)
    return Region(tuple(draw_ball(rng) for _ in range(count)))


def draw_regopen(rng: random.Random, max_intervals: int = 3) -> RegOpen1D:
    """A random nonempty canonical value, occasionally unbounded."""
    k = rng.randint(1, max_intervals)
    denom = rng.choice(_DENOMS)
    cuts = sorted(rng.sample(range(-30 * denom, 30 * denom), 2 * k))
    intervals: list[Interval] = [
        (Fraction(cuts[2 * i], denom), Fraction(cuts[2 * i + 1], denom))
        for i in range(k)
    ]
    if rng.random() < 0.15:
        lo, hi = intervals[0]
        intervals[0] = (NEG_INF, hi)
    if rng.random() < 0.15:
        lo, hi = intervals[-1]
        intervals[-1] = (lo, POS_INF)
    return RegOpen1D(tuple(intervals))


# --------------------------------------------------------------------------
# Engineered covers for the three-valued containment procedure


def petal_cover(scale: Fraction, dx: Fraction, dy: Fraction) -> tuple[Ball, Region]:
    """Contained cover whose four circles all meet at one point of the disk.

    The candidate disk is covered, but the common circle point can never be
    discharged by box subdivision, so the decision stays Unknown at every
    budget.  Transform parameters place rational copies anywhere.
    """
    b = Ball(dx, dy, scale)
    cover = Region(
        (
            Ball(dx - scale, dy, scale),
            Ball(dx + scale, dy, scale),
            Ball(dx, dy - scale, scale),
            Ball(dx, dy + scale, scale),
        )
    )
    return b, cover


def notch_cover(scale: Fraction, dx: Fraction, dy: Fraction) -> tuple[Ball, Region]:
    """Cover with one petal missing: a thin uncovered sliver survives."""
    b = Ball(dx, dy, scale)
    cover = Region(
        (
            Ball(dx - scale, dy, scale),
            Ball(dx + scale, dy, scale),
            Ball(dx, dy + scale, scale),
        )
    )
    return b, cover


def lens_cover(scale: Fraction, dx: Fraction, dy: Fraction) -> tuple[Ball, Region]:
    """Strict two-ball cover: every point of the disk is interior to a cover ball."""
    b = Ball(dx, dy, scale)
    half = scale / 2
    cover = Region(
        (
            Ball(dx - half, dy, scale * Fraction(8, 5)),
            Ball(dx + half, dy, scale * Fraction(8, 5)),
        )
    )
    return b, cover


def tangent_pair_cover(scale: Fraction, dx: Fraction, dy: Fraction) -> tuple[Ball, Region]:
    """Two cover balls tangent to each other at the disk center.

    The disk is not covered near its rim next to the tangency line, but the
    witness sliver is thin: shallow budgets exhaust before finding it.
    """
    b = Ball(dx, dy, scale)
    two = 2 * scale
    cover = Region((Ball(dx, dy + two, two), Ball(dx, dy - two, two)))
    return b, cover


def degenerate_covers(count: int) -> list[tuple[str, Ball, Region]]:
    """A deterministic mix of the engineered tangency families."""
    makers = (
        ("petal", petal_cover),
        ("notch", notch_cover),
        ("lens", lens_cover),
        ("tangent-pair", tangent_pair_cover),
    )
    out: list[tuple[str, Ball, Region]] = []
    for i in range(count):
        label, make = makers[i % len(makers)]
        scale = Fraction(1 + i % 3, 1 + (i // 4) % 2)
        dx = Fraction(i % 7 - 3, 2)
        dy = Fraction((i * 3) % 5 - 2, 3)
        b, cover = make(scale, dx, dy)
        out.append((label, b, cover))
    return out


# --------------------------------------------------------------------------
# Probe points for topology checks


def probe_points(region: Region) -> list[tuple[Fraction, Fraction]]:
    """Structured rational probes: centers, rim points, midpoints, and a grid.

    Rim probes sit exactly on the circles, exercising the boundary tests;
    the bounding-box grid adds clearly-inside and clearly-outside points.
    At least 25 probes come back for any region.
    """
    pts: list[tuple[Fraction, Fraction]] = []
    for ball in region.balls:
        pts.append(ball.center)
        pts.extend(
            (
                (ball.cx + ball.r, ball.cy),
                (ball.cx - ball.r, ball.cy),
                (ball.cx, ball.cy + ball.r),
                (ball.cx, ball.cy - ball.r),
            )
        )
    centers = [ball.center for ball in region.balls]
    for a, b in zip(centers, centers[1:]):
        pts.append(((a[0] + b[0]) / 2, (a[1] + b[1]) / 2))
    xlo = min(ball.cx - ball.r for ball in region.balls) - 1
    xhi = max(ball.cx + ball.r for ball in region.balls) + 1
    ylo = min(ball.cy - ball.r for ball in region.balls) - 1
    yhi = max(ball.cy + ball.r for ball in region.balls) + 1
    for i in range(5):
        for j in range(5):
            pts.append(
                (
                    xlo + (xhi - xlo) * Fraction(i, 4),
                    ylo + (yhi - ylo) * Fraction(j, 4),
                )
            )
    seen: set[tuple[Fraction, Fraction]] = set()
    unique = []
    for p in pts:
        if p not in seen:
            seen.add(p)
            unique.append(p)
    return unique

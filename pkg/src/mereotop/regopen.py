"""Regular open subsets of the rational line as canonical interval unions.

A value is a sorted tuple of disjoint, non-touching open intervals with exact
rational endpoints (or infinite sentinels).  Regularization maps any raw
union of open intervals to the interior of its closure, which merges touching
pieces; on canonical values structural equality is semantic equality, so the
whole algebra is exact with zero tolerance.  The empty union plays the role
of the contradictory name and is excluded from the individuals of the
algebra; the full line is the top element and has no complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .common import NEG_INF, POS_INF, UNDEFINED_MEET, UndefinedMeet
from .errors import DegenerateInterval, NoComplement

Endpoint = Fraction | float  # floats only ever hold the two infinities
Interval = tuple[Endpoint, Endpoint]


@dataclass(frozen=True)
class RegOpen1D:
    """Canonical finite union of open intervals."""

    intervals: tuple[Interval, ...]

    def __post_init__(self) -> None:
        prev_hi: Endpoint | None = None
        for lo, hi in self.intervals:
            if not lo < hi:
                raise ValueError(f"interval out of order: ({lo}, {hi})")
            if prev_hi is not None and not prev_hi < lo:
                raise ValueError("intervals must be separated by a gap")
            prev_hi = hi

    @classmethod
    def empty(cls) -> RegOpen1D:
        return cls(())

    @classmethod
    def full(cls) -> RegOpen1D:
        return cls(((NEG_INF, POS_INF),))

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def is_full(self) -> bool:
        return self.intervals == ((NEG_INF, POS_INF),)

    def contains(self, x: Fraction) -> bool:
        return any(lo < x < hi for lo, hi in self.intervals)

    def finite_endpoints(self) -> list[Fraction]:
        out = []
        for lo, hi in self.intervals:
            if isinstance(lo, Fraction):
                out.append(lo)
            if isinstance(hi, Fraction):
                out.append(hi)
        return out

    def __repr__(self) -> str:
        parts = ", ".join(f"({lo}, {hi})" for lo, hi in self.intervals)
        return f"RegOpen1D([{parts}])"


def regularize(raw: Iterable[Interval]) -> RegOpen1D:
    """Interior of the closure of a union of open intervals.

    Closing each interval and merging the pieces that overlap or touch yields
    disjoint closed intervals; reopening them gives the canonical form.
    """
    cleaned: list[Interval] = []
    for lo, hi in raw:
        if not lo < hi:
            raise DegenerateInterval(f"interval needs lo < hi, got ({lo}, {hi})")
        cleaned.append((lo, hi))
    cleaned.sort(key=_interval_key)
    merged: list[list[Endpoint]] = []
    for lo, hi in cleaned:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    return RegOpen1D(tuple((lo, hi) for lo, hi in merged))


def _interval_key(iv: Interval) -> tuple:
    lo, hi = iv
    return (lo, hi)


def join1d(a: RegOpen1D, b: RegOpen1D) -> RegOpen1D:
    """Least upper bound: the regularized union."""
    return regularize(a.intervals + b.intervals)


def meet1d(a: RegOpen1D, b: RegOpen1D) -> RegOpen1D | UndefinedMeet:
    """Greatest lower bound where it exists.

    The plain intersection of two canonical values is already regular open
    and canonical, so no regularization pass is needed.
    """
    out: list[Interval] = []
    for lo_a, hi_a in a.intervals:
        for lo_b, hi_b in b.intervals:
            lo = max(lo_a, lo_b)
            hi = min(hi_a, hi_b)
            if lo < hi:
                out.append((lo, hi))
    if not out:
        return UNDEFINED_MEET
    out.sort(key=_interval_key)
    return RegOpen1D(tuple(out))


def compl1d(a: RegOpen1D) -> RegOpen1D:
    """Regular complement: the open gaps, including the unbounded ones."""
    if a.is_full:
        raise NoComplement("the full line has no complement")
    if a.is_empty:
        raise NoComplement("the empty union is not an individual")
    gaps: list[Interval] = []
    first_lo = a.intervals[0][0]
    if first_lo != NEG_INF:
        gaps.append((NEG_INF, first_lo))
    for (_, hi), (lo, _) in zip(a.intervals, a.intervals[1:]):
        gaps.append((hi, lo))
    last_hi = a.intervals[-1][1]
    if last_hi != POS_INF:
        gaps.append((last_hi, POS_INF))
    return RegOpen1D(tuple(gaps))


def part_of1d(a: RegOpen1D, b: RegOpen1D) -> bool:
    """Inclusion: every interval of a sits inside one interval of b."""
    for lo, hi in a.intervals:
        if not any(blo <= lo and hi <= bhi for blo, bhi in b.intervals):
            return False
    return True


def interior1d(a: RegOpen1D) -> RegOpen1D:
    """Canonical values are open: the interior is the identity."""
    return a


def closure_m1d(a: RegOpen1D) -> RegOpen1D:
    """Internal closure: complement of the interior of the complement."""
    return compl1d(interior1d(compl1d(a)))


def boundary_m1d(a: RegOpen1D) -> RegOpen1D:
    """Meet of the internal closures of a and of its complement.

    For every admissible value this meet is undefined, which is reported as
    the empty union.
    """
    shared = meet1d(closure_m1d(a), closure_m1d(compl1d(a)))
    if isinstance(shared, UndefinedMeet):
        return RegOpen1D.empty()
    return shared

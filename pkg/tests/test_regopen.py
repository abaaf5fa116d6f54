"""Canonical interval unions: regularization, lattice operators, topology.

Derived expectations are checked against a grid oracle that samples
closed-union membership at all endpoints, midpoints between endpoints, and
outer margins, with a probe step below a quarter of the least endpoint gap.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mereotop.common import NEG_INF, POS_INF, UNDEFINED_MEET
from mereotop.errors import DegenerateInterval, NoComplement
from mereotop.regopen import (
    RegOpen1D,
    boundary_m1d,
    closure_m1d,
    compl1d,
    interior1d,
    join1d,
    meet1d,
    part_of1d,
    regularize,
)

F = Fraction


def ro(*pairs):
    return RegOpen1D(tuple((F(a) if a not in (NEG_INF, POS_INF) else a,
                            F(b) if b not in (NEG_INF, POS_INF) else b)
                           for a, b in pairs))


# -- independent grid oracle --------------------------------------------------


def closed_member(raw, x):
    return any(lo <= x <= hi for lo, hi in raw)


def oracle_int_cl(raw, x, step):
    return all(closed_member(raw, x + d) for d in (-step, F(0), step))


def oracle_grid_from_endpoints(endpoints):
    pts = sorted({e for e in endpoints if isinstance(e, Fraction)})
    if not pts:
        return [F(0)], F(1, 4)
    grid = list(pts)
    grid += [(a + b) / 2 for a, b in zip(pts, pts[1:])]
    grid += [pts[0] - 1, pts[-1] + 1]
    diffs = [b - a for a, b in zip(pts, pts[1:]) if b > a]
    step = min(diffs) / 8 if diffs else F(1, 4)
    return sorted(set(grid)), step


def oracle_grid(*values):
    return oracle_grid_from_endpoints(
        [e for v in values for e in v.finite_endpoints()]
    )


# -- regularize ---------------------------------------------------------------


def test_regularize_merges_touching():
    # int(cl((0,1) u (1,2))) = (0,2), verified on the grid oracle below.
    raw = [(F(0), F(1)), (F(1), F(2))]
    result = regularize(raw)
    assert result == ro((0, 2))
    grid, step = oracle_grid_from_endpoints(
        list(result.finite_endpoints()) + [e for iv in raw for e in iv]
    )
    for x in grid:
        assert result.contains(x) == oracle_int_cl(raw, x, step)


def test_regularize_already_regular():
    assert regularize([(F(0), F(1))]) == ro((0, 1))


def test_regularize_overlap():
    assert regularize([(F(0), F(2)), (F(1), F(3))]) == ro((0, 3))


def test_regularize_rejects_degenerate():
    with pytest.raises(DegenerateInterval):
        regularize([(F(1), F(1))])
    with pytest.raises(DegenerateInterval):
        regularize([(F(2), F(1))])


finite_rationals = st.integers(-60, 60).flatmap(
    lambda n: st.sampled_from([1, 2, 3, 4, 8]).map(lambda d: F(n, d))
)


@st.composite
def canonical_values(draw):
    k = draw(st.integers(1, 3))
    cuts = draw(
        st.lists(finite_rationals, min_size=2 * k, max_size=2 * k, unique=True)
    )
    cuts.sort()
    intervals = [(cuts[2 * i], cuts[2 * i + 1]) for i in range(k)]
    if draw(st.booleans()) and draw(st.integers(0, 5)) == 0:
        intervals[0] = (NEG_INF, intervals[0][1])
    if draw(st.booleans()) and draw(st.integers(0, 5)) == 0:
        intervals[-1] = (intervals[-1][0], POS_INF)
    return RegOpen1D(tuple(intervals))


@st.composite
def raw_interval_lists(draw):
    k = draw(st.integers(1, 4))
    out = []
    for _ in range(k):
        a = draw(finite_rationals)
        width = draw(st.integers(1, 16))
        out.append((a, a + F(width, 4)))
    return out


@settings(max_examples=120, derandomize=True)
@given(raw_interval_lists())
def test_regularize_matches_grid_oracle(raw):
    result = regularize(raw)
    grid, step = oracle_grid_from_endpoints(
        list(result.finite_endpoints()) + [e for iv in raw for e in iv]
    )
    for x in grid:
        assert result.contains(x) == oracle_int_cl(raw, x, step)


@settings(max_examples=120, derandomize=True)
@given(raw_interval_lists())
def test_regularize_idempotent(raw):
    once = regularize(raw)
    assert regularize(once.intervals) == once


# -- lattice operators ---------------------------------------------------------


def test_meet_examples():
    assert meet1d(ro((0, 2)), ro((1, 3))) == ro((1, 2))
    assert meet1d(ro((0, 1)), ro((2, 3))) is UNDEFINED_MEET


def test_compl_example():
    assert compl1d(ro((0, 1))) == ro((NEG_INF, 0), (1, POS_INF))


def test_compl_rejects_full_and_empty():
    with pytest.raises(NoComplement):
        compl1d(RegOpen1D.full())
    with pytest.raises(NoComplement):
        compl1d(RegOpen1D.empty())


def test_part_of_example():
    assert part_of1d(ro((0, 1)), ro((-1, 2)))
    assert not part_of1d(ro((-1, 2)), ro((0, 1)))


@settings(max_examples=150, derandomize=True)
@given(canonical_values(), canonical_values())
def test_join_meet_against_pointwise_oracle(a, b):
    joined = join1d(a, b)
    met = meet1d(a, b)
    grid, step = oracle_grid(a, b, joined)
    raw = list(a.intervals) + list(b.intervals)
    for x in grid:
        assert joined.contains(x) == oracle_int_cl(raw, x, step)
        expected_meet = a.contains(x) and b.contains(x)
        got = False if met is UNDEFINED_MEET else met.contains(x)
        assert got == expected_meet


@settings(max_examples=150, derandomize=True)
@given(canonical_values(), canonical_values(), canonical_values())
def test_join_is_least_upper_bound(a, b, c):
    joined = join1d(a, b)
    assert part_of1d(a, joined) and part_of1d(b, joined)
    upper = join1d(joined, c)  # any upper bound of both contains the join
    assert part_of1d(joined, upper)


@settings(max_examples=150, derandomize=True)
@given(canonical_values(), canonical_values())
def test_order_antisymmetry_and_absorption(a, b):
    if part_of1d(a, b) and part_of1d(b, a):
        assert a == b
    met = meet1d(a, b)
    if met is not UNDEFINED_MEET:
        assert join1d(a, met) == a
    inner = meet1d(a, join1d(a, b))
    assert inner is not UNDEFINED_MEET and inner == a


@settings(max_examples=150, derandomize=True)
@given(canonical_values())
def test_complement_laws(a):
    if a.is_full:
        return
    comp = compl1d(a)
    assert meet1d(a, comp) is UNDEFINED_MEET
    assert join1d(a, comp) == RegOpen1D.full()
    assert compl1d(comp) == a


@settings(max_examples=150, derandomize=True)
@given(canonical_values(), canonical_values())
def test_de_morgan(a, b):
    if a.is_full or b.is_full:
        return
    joined = join1d(a, b)
    met_of_compls = meet1d(compl1d(a), compl1d(b))
    if joined.is_full:
        assert met_of_compls is UNDEFINED_MEET
    else:
        assert compl1d(joined) == met_of_compls


# -- topology -----------------------------------------------------------------


def test_closure_example():
    # Unfolding the double complement keeps both components.
    v = ro((0, 1), (2, 3))
    assert closure_m1d(v) == v


def test_boundary_example():
    assert boundary_m1d(ro((0, 1))) == RegOpen1D.empty()


@settings(max_examples=150, derandomize=True)
@given(canonical_values())
def test_regularity_and_empty_boundary(a):
    if a.is_full:
        return
    assert interior1d(a) == a
    assert closure_m1d(a) == a
    assert interior1d(closure_m1d(a)) == a
    assert boundary_m1d(a).is_empty


def test_canonical_invariant_enforced():
    with pytest.raises(ValueError):
        RegOpen1D(((F(0), F(1)), (F(1), F(2))))  # touching
    with pytest.raises(ValueError):
        RegOpen1D(((F(1), F(0)),))

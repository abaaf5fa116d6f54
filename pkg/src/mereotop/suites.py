"""Invariant suites for each model family, runnable from the CLI.

Each suite aggregates the algebraic and topological laws of one module into
a LawReport.  The finite mereology is checked exhaustively over every model
of base size 2 to 4; the line and disk models are checked on seeded samples.
Suite runs are deterministic for a fixed (cases, seed, budget).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import regopen as ro
from .common import UNDEFINED_MEET, UndefinedMeet
from .errors import NoComplement, NotPart, UnknownSuite
from .generators import (
    degenerate_covers,
    draw_ball,
    draw_positive_rational,
    draw_rational,
    draw_region,
    draw_regopen,
    probe_points,
)
from .geometry.balls import (
    Ball,
    PointClass,
    ball_pt,
    between,
    concent,
    dist2,
    ext_tangent,
    point_of,
    transform_ball,
)
from .geometry.regions import (
    WHOLE,
    Contained,
    NotContained,
    Region,
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
    interior_g,
    interior_point,
    part_of_region,
    regions_equiv,
    sat_interior_point,
)
from .kuratowski import LawReport, LawResult, TopologySpec, check_laws
from .lo import (
    LOModel,
    eq_plural,
    eta,
    incl,
    is_individual,
    name_conj,
    name_disj,
    name_neg,
)
from .mereo import QBAModel

SUITE_NAMES = ("mereo", "regopen", "geometry", "kuratowski-all")

_DEFAULT_CASES = {"mereo": 0, "regopen": 1000, "geometry": 500, "kuratowski-all": 400}

_ATOMS = ("a", "b", "c", "d")


@dataclass
class SuiteResult:
    """Aggregate outcome of one named suite."""

    name: str
    reports: list[LawReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def describe(self) -> list[str]:
        lines: list[str] = []
        for report in self.reports:
            lines.append(f"== {report.subject} (cases={report.cases}, seed={report.seed})")
            lines.extend(report.describe())
        status = "PASS" if self.passed else "FAIL"
        lines.append(f"suite {self.name}: {status}")
        return lines

    def all_results(self) -> list[tuple[str, LawResult]]:
        return [(rep.subject, res) for rep in self.reports for res in rep.results]


class _Checker:
    """Collects named law outcomes with first-counterexample reporting."""

    def __init__(self, subject: str, cases: int, seed: int | None) -> None:
        self.report = LawReport(subject=subject, cases=cases, seed=seed)

    def law(self, name: str, pairs) -> None:
        """pairs: iterable of (ok, witness) tuples."""
        evaluated = 0
        failure = None
        for ok, witness in pairs:
            evaluated += 1
            if not ok and failure is None:
                failure = witness
        self.report.results.append(
            LawResult(name, failure is None, evaluated, 0, failure)
        )


# --------------------------------------------------------------------------
# Topology instances


def mereo_topology_spec(base_size: int = 3) -> TopologySpec:
    """The quasi-Boolean mereology as an interior-axiom instance."""
    model = QBAModel(_ATOMS[:base_size])

    def meet(p, q):
        out = model.b_prod(p, q)
        return None if isinstance(out, UndefinedMeet) else out

    return TopologySpec(
        label=f"mereology-base-{base_size}",
        univ=model.universe_individual(),
        is_open=is_individual,
        interior=model.interior_m,
        equiv=eq_plural,
        meet=meet,
        population=list(model.lo.all_names()),
    )


def broken_interior_spec(base_size: int = 3) -> TopologySpec:
    """Negative control: an interior that inflates everything to the top."""
    good = mereo_topology_spec(base_size)
    univ = good.univ
    return TopologySpec(
        label=f"broken-interior-base-{base_size}",
        univ=univ,
        is_open=good.is_open,
        interior=lambda q: univ,
        equiv=good.equiv,
        meet=good.meet,
        population=good.population,
    )


def regopen_topology_spec() -> TopologySpec:
    """The regular open line as an interior-axiom instance."""

    def meet(a, b):
        out = ro.meet1d(a, b)
        return None if isinstance(out, UndefinedMeet) else out

    return TopologySpec(
        label="regular-open-line",
        univ=ro.RegOpen1D.full(),
        is_open=lambda a: not a.is_empty,
        interior=ro.interior1d,
        equiv=lambda a, b: a == b,
        meet=meet,
        draw=draw_regopen,
    )


def geometry_fixture_regions(seed: int, count: int = 20) -> list[Region | Whole]:
    """Deterministic regions plus derived sub-regions and the whole space."""
    rng = random.Random(seed)
    fixtures: list[Region | Whole] = [WHOLE]
    for _ in range(count):
        region = draw_region(rng, max_balls=4)
        fixtures.append(region)
        if len(region.balls) > 1:
            fixtures.append(Region(region.balls[: len(region.balls) // 2 + 1]))
            fixtures.append(Region((region.balls[0],)))
    return fixtures


def geometry_topology_spec(seed: int, budget: int) -> TopologySpec:
    """The disk-region model as an interior-axiom instance.

    The meet is partial: defined for structurally comparable regions and for
    the whole space, undefined for disjoint regions, and out of domain for
    partial overlaps whose intersection is not a finite disk union.
    """

    def meet(a, b):
        if isinstance(a, Whole):
            return b
        if isinstance(b, Whole):
            return a
        sa, sb = frozenset(a.balls), frozenset(b.balls)
        if sa <= sb:
            return a
        if sb <= sa:
            return b
        return None

    return TopologySpec(
        label="disk-regions",
        univ=WHOLE,
        is_open=lambda q: True,
        interior=interior_g,
        equiv=lambda a, b: regions_equiv(a, b, budget),
        meet=meet,
        population=geometry_fixture_regions(seed),
    )


# --------------------------------------------------------------------------
# Mereology suite (exhaustive)


def _lo_checks(checker: _Checker) -> None:
    for size in (1, 2, 3):
        model = LOModel(tuple(f"o{i}" for i in range(1, size + 1)))
        names = list(model.all_names())
        checker.law(
            f"in_to_eta_universe_{size}",
            (
                ((obj in a.objects) == eta(model.iota(obj), a), (obj, a))
                for obj in model.objects
                for a in names
            ),
        )
        checker.law(
            f"eta_transitive_universe_{size}",
            (
                ((not (eta(a, b) and eta(c, a))) or eta(c, b), (a, b, c))
                for a in names
                for b in names
                for c in names
            ),
        )
        checker.law(
            f"incl_preorder_universe_{size}",
            (
                (
                    incl(a, a)
                    and ((not (incl(a, b) and incl(b, c))) or incl(a, c))
                    and (eq_plural(a, b) == (incl(a, b) and incl(b, a))),
                    (a, b, c),
                )
                for a in names
                for b in names
                for c in names
            ),
        )
        checker.law(
            f"neg_demorgan_universe_{size}",
            (
                (
                    eq_plural(name_neg(name_neg(a)), a)
                    and eq_plural(
                        name_neg(name_conj(a, b)),
                        name_disj(name_neg(a), name_neg(b)),
                    )
                    and eq_plural(
                        name_neg(name_disj(a, b)),
                        name_conj(name_neg(a), name_neg(b)),
                    ),
                    (a, b),
                )
                for a in names
                for b in names
            ),
        )


def _lattice_lub(model: QBAModel, members) -> frozenset | None:
    """Independent least-upper-bound search over the object lattice."""
    uppers = [x for x in model.objects if all(m <= x for m in members)]
    least = None
    for x in uppers:
        if all(x <= other for other in uppers):
            least = x
    return least


def _lattice_glb(model: QBAModel, x: frozenset, y: frozenset) -> frozenset | None:
    lowers = [z for z in model.objects if z <= x and z <= y]
    greatest = None
    for z in lowers:
        if all(other <= z for other in lowers):
            greatest = z
    return greatest


def _mereo_model_checks(checker: _Checker, model: QBAModel) -> None:
    tag = f"base_{len(model.base)}"
    objects = model.objects
    individuals = [model.obj_name(x) for x in objects]
    top = model.universe_individual()

    checker.law(
        f"in_to_eta_{tag}",
        (
            ((obj in a.objects) == eta(model.lo.iota(obj), a), (obj, a))
            for obj in objects
            for a in model.lo.all_names()
        ),
    )

    checker.law(
        f"pt_partial_order_{tag}",
        (
            (
                model.is_part(a, a)
                and (
                    (not (model.is_part(a, b) and model.is_part(b, a)))
                    or a == b
                )
                and (
                    (not (model.is_part(a, b) and model.is_part(b, c)))
                    or model.is_part(a, c)
                ),
                (a, b, c),
            )
            for a in individuals
            for b in individuals
            for c in individuals
        ),
    )

    if len(model.base) <= 3:
        def fusion_lub_cases():
            for a in model.lo.all_names():
                if a.is_empty:
                    continue
                lub = _lattice_lub(model, a.objects)
                yield (
                    lub is not None and model.klass(a).objects == frozenset((lub,)),
                    (a,),
                )

        checker.law(f"fusion_is_lub_{tag}", fusion_lub_cases())

        checker.law(
            f"fusion_def_equivalence_{tag}",
            (
                (
                    model.satisfies_fusion_def(cand, a)
                    == (not a.is_empty and cand == model.klass(a)),
                    (cand, a),
                )
                for a in model.lo.all_names()
                for cand in individuals
            ),
        )
    else:
        checker.law(
            f"fusion_satisfies_def_{tag}",
            (
                (model.satisfies_fusion_def(model.klass(a), a), (a,))
                for a in model.lo.all_names()
                if not a.is_empty
            ),
        )

        def uniqueness_cases():
            for a in model.lo.all_names():
                if a.is_empty:
                    continue
                fused = model.klass(a)
                for cand in individuals:
                    if cand != fused:
                        yield (not model.satisfies_fusion_def(cand, a), (cand, a))

        checker.law(f"fusion_unique_{tag}", uniqueness_cases())

    def join_meet_lattice_cases():
        for p in individuals:
            for q in individuals:
                po = next(iter(p.objects))
                qo = next(iter(q.objects))
                lub = _lattice_lub(model, (po, qo))
                glb = _lattice_glb(model, po, qo)
                joined = model.b_sum(p, q)
                met = model.b_prod(p, q)
                ok = joined.objects == frozenset((lub,))
                if glb is None:
                    ok = ok and isinstance(met, UndefinedMeet)
                else:
                    ok = ok and met.objects == frozenset((glb,))
                yield ok, (p, q)

    checker.law(f"join_meet_agree_with_lattice_{tag}", join_meet_lattice_cases())

    def join_meet_unique_cases():
        for p in individuals:
            for q in individuals:
                union_parts = name_disj(model.pt(p), model.pt(q))
                shared_parts = name_conj(model.pt(p), model.pt(q))
                join_sat = [
                    r for r in individuals if model.satisfies_fusion_def(r, union_parts)
                ]
                meet_sat = [
                    r
                    for r in individuals
                    if model.satisfies_fusion_def(r, shared_parts)
                ]
                yield (
                    len(join_sat) == 1 and len(meet_sat) <= 1,
                    (p, q),
                )

    checker.law(f"join_meet_unique_{tag}", join_meet_unique_cases())

    def algebra_cases():
        for p in individuals:
            for q in individuals:
                for r in individuals:
                    ok = model.b_sum(p, q) == model.b_sum(q, p)
                    ok = ok and model.b_sum(p, p) == p
                    ok = ok and model.b_sum(
                        model.b_sum(p, q), r
                    ) == model.b_sum(p, model.b_sum(q, r))
                    pq = model.b_prod(p, q)
                    ok = ok and pq == model.b_prod(q, p)
                    left = (
                        model.b_prod(pq, r)
                        if not isinstance(pq, UndefinedMeet)
                        else UNDEFINED_MEET
                    )
                    qr = model.b_prod(q, r)
                    right = (
                        model.b_prod(p, qr)
                        if not isinstance(qr, UndefinedMeet)
                        else UNDEFINED_MEET
                    )
                    if not isinstance(left, UndefinedMeet) and not isinstance(
                        right, UndefinedMeet
                    ):
                        ok = ok and left == right
                    yield ok, (p, q, r)

    checker.law(f"sum_prod_laws_{tag}", algebra_cases())

    checker.law(
        f"ext_iff_meet_undefined_{tag}",
        (
            (
                model.ext(p, q) == isinstance(model.b_prod(p, q), UndefinedMeet),
                (p, q),
            )
            for p in individuals
            for q in individuals
        ),
    )

    def complement_cases():
        for q in individuals:
            c = model.compl(q)
            if q == top:
                yield isinstance(c, UndefinedMeet), (q,)
                continue
            found = [
                p
                for p in individuals
                if isinstance(model.b_prod(p, q), UndefinedMeet)
                and model.b_sum(p, q) == top
            ]
            ok = (
                not isinstance(c, UndefinedMeet)
                and found == [c]
                and model.ext(q, c)
                and model.b_sum(q, c) == top
            )
            yield ok, (q,)

    checker.law(f"complement_unique_laws_{tag}", complement_cases())

    def rel_compl_cases():
        for q in individuals:
            for r in individuals:
                qo = next(iter(q.objects))
                ro_ = next(iter(r.objects))
                if not qo <= ro_:
                    try:
                        model.rel_compl(q, r)
                        yield False, (q, r)
                    except NotPart:
                        yield True, (q, r)
                    continue
                out = model.rel_compl(q, r)
                if q == r:
                    yield isinstance(out, UndefinedMeet), (q, r)
                else:
                    ok = (
                        not isinstance(out, UndefinedMeet)
                        and isinstance(model.b_prod(out, q), UndefinedMeet)
                        and model.b_sum(out, q) == r
                    )
                    yield ok, (q, r)

    checker.law(f"rel_compl_spec_{tag}", rel_compl_cases())

    checker.law(
        f"interior_identity_idempotent_{tag}",
        (
            (
                model.interior_m(q) == q
                and model.interior_m(model.interior_m(q)) == model.interior_m(q),
                (q,),
            )
            for q in individuals
        ),
    )

    def closure_boundary_cases():
        for q in individuals:
            if q == top:
                try:
                    model.closure_m(q)
                    yield False, (q,)
                except NoComplement:
                    yield True, (q,)
                continue
            ok = model.closure_m(q) == q and model.boundary_m(q).is_empty
            yield ok, (q,)

    checker.law(f"closure_identity_boundary_empty_{tag}", closure_boundary_cases())

    def extensional_cases():
        for size in (1, 2, 3):
            for combo in combinations(objects, size):
                forward = model.lo.name(combo)
                backward = model.lo.name(tuple(reversed(combo)))
                yield model.klass(forward) == model.klass(backward), (combo,)

    checker.law(f"fusion_extensional_{tag}", extensional_cases())


def run_mereo_suite(seed: int | None = None) -> LawReport:
    checker = _Checker("mereo", cases=0, seed=seed)
    _lo_checks(checker)
    for size in (2, 3, 4):
        _mereo_model_checks(checker, QBAModel(_ATOMS[:size]))
    return checker.report


# --------------------------------------------------------------------------
# Regular-open line suite (seeded)


def _grid_points(*values: ro.RegOpen1D) -> list[Fraction]:
    """Probe grid refined to all endpoints, midpoints, and outer margins."""
    endpoints = sorted(set(e for v in values for e in v.finite_endpoints()))
    if not endpoints:
        return [Fraction(0)]
    pts = list(endpoints)
    for a, b in zip(endpoints, endpoints[1:]):
        pts.append((a + b) / 2)
    pts.append(endpoints[0] - 1)
    pts.append(endpoints[-1] + 1)
    return pts


def _int_cl_member(raw: list[tuple], x: Fraction, step: Fraction) -> bool:
    """Brute-force membership of x in int(cl(union of raw open intervals)).

    cl-membership is sampled at x and at x ± step, where step is below a
    quarter of the least gap between distinct endpoints, so the piecewise
    structure cannot hide between samples.
    """

    def in_cl(y: Fraction) -> bool:
        return any(lo <= y <= hi for lo, hi in raw)

    return in_cl(x - step) and in_cl(x) and in_cl(x + step)


def _oracle_step(values: list[Fraction]) -> Fraction:
    diffs = [b - a for a, b in zip(values, values[1:]) if b > a]
    if not diffs:
        return Fraction(1, 4)
    return min(diffs) / 4


def run_regopen_suite(cases: int, seed: int) -> LawReport:
    checker = _Checker("regopen", cases=cases, seed=seed)
    rng = random.Random(seed)
    draws = [(draw_regopen(rng), draw_regopen(rng), draw_regopen(rng)) for _ in range(cases)]

    def canonical_cases():
        for a, _, _ in draws:
            ok = ro.regularize(a.intervals) == a
            split: list = []
            for lo, hi in a.intervals:
                if isinstance(lo, Fraction) and isinstance(hi, Fraction):
                    mid = (lo + hi) / 2
                    split.extend(((lo, mid), (mid, hi)))
                else:
                    split.append((lo, hi))
            ok = ok and ro.regularize(split) == a
            yield ok, (a,)

    checker.law("canonical_idempotent_merge", canonical_cases())

    def grid_oracle_cases():
        for a, b, _ in draws:
            raw = list(a.intervals) + list(b.intervals)
            joined = ro.join1d(a, b)
            grid = _grid_points(a, b, joined)
            step = _oracle_step(sorted(set(g for g in grid)))
            closed = [(lo, hi) for lo, hi in raw]
            ok = all(
                joined.contains(x) == _int_cl_member(closed, x, step) for x in grid
            )
            met = ro.meet1d(a, b)
            member_meet = (
                (lambda x: False)
                if isinstance(met, UndefinedMeet)
                else met.contains
            )
            ok = ok and all(
                member_meet(x) == (a.contains(x) and b.contains(x)) for x in grid
            )
            yield ok, (a, b)

    checker.law("join_meet_match_grid_oracle", grid_oracle_cases())

    def order_cases():
        for a, b, c in draws:
            joined = ro.join1d(a, b)
            ok = ro.part_of1d(a, a)
            ok = ok and ro.part_of1d(a, joined) and ro.part_of1d(b, joined)
            upper = ro.join1d(joined, c)
            ok = ok and ro.part_of1d(joined, upper)
            met = ro.meet1d(a, b)
            if not isinstance(met, UndefinedMeet):
                ok = ok and ro.part_of1d(met, a) and ro.part_of1d(met, b)
            if ro.part_of1d(a, b) and ro.part_of1d(b, a):
                ok = ok and a == b
            yield ok, (a, b, c)

    checker.law("part_of_partial_order_bounds", order_cases())

    def lattice_cases():
        for a, b, c in draws:
            ok = ro.join1d(a, b) == ro.join1d(b, a)
            ok = ok and ro.join1d(ro.join1d(a, b), c) == ro.join1d(a, ro.join1d(b, c))
            ok = ok and ro.join1d(a, a) == a
            met = ro.meet1d(a, b)
            ok = ok and met == ro.meet1d(b, a)
            if not isinstance(met, UndefinedMeet):
                ok = ok and ro.join1d(a, met) == a
            inner = ro.meet1d(a, ro.join1d(a, b))
            ok = ok and not isinstance(inner, UndefinedMeet) and inner == a
            yield ok, (a, b, c)

    checker.law("lattice_laws", lattice_cases())

    def complement_cases():
        for a, _, _ in draws:
            if a.is_full:
                try:
                    ro.compl1d(a)
                    yield False, (a,)
                except NoComplement:
                    yield True, (a,)
                continue
            comp = ro.compl1d(a)
            ok = isinstance(ro.meet1d(a, comp), UndefinedMeet)
            ok = ok and ro.join1d(a, comp) == ro.RegOpen1D.full()
            ok = ok and ro.compl1d(comp) == a
            yield ok, (a,)

    checker.law("complement_laws", complement_cases())

    def de_morgan_cases():
        for a, b, _ in draws:
            if a.is_full or b.is_full:
                yield True, (a, b)
                continue
            joined = ro.join1d(a, b)
            met = ro.meet1d(ro.compl1d(a), ro.compl1d(b))
            if joined.is_full:
                ok = isinstance(met, UndefinedMeet)
            else:
                ok = ro.compl1d(joined) == met
            both = ro.meet1d(a, b)
            if not isinstance(both, UndefinedMeet) and not both.is_full:
                ok = ok and ro.compl1d(both) == ro.join1d(ro.compl1d(a), ro.compl1d(b))
            yield ok, (a, b)

    checker.law("de_morgan", de_morgan_cases())

    def regular_identity_cases():
        for a, _, _ in draws:
            if a.is_full:
                yield True, (a,)
                continue
            closed = ro.closure_m1d(a)
            ok = closed == a and ro.interior1d(closed) == a
            ok = ok and ro.boundary_m1d(a).is_empty
            yield ok, (a,)

    checker.law("closure_identity_boundary_empty", regular_identity_cases())
    return checker.report


# --------------------------------------------------------------------------
# Geometry suite (seeded)


def _enclosing_ball(rng: random.Random, inner: Ball) -> Ball:
    grow = draw_positive_rational(rng)
    u = Fraction(rng.randint(-8, 8), 16)
    v = Fraction(rng.randint(-8, 8), 16)
    return Ball(inner.cx + grow * u, inner.cy + grow * v, inner.r + grow)


def run_geometry_suite(cases: int, seed: int, budget: int) -> LawReport:
    checker = _Checker("geometry", cases=cases, seed=seed)
    rng = random.Random(seed)
    balls = [draw_ball(rng) for _ in range(cases)]
    small_budget = min(budget, 6)

    def concent_cases():
        for i, b in enumerate(balls):
            other = balls[(i + 1) % len(balls)]
            sibling = Ball(b.cx, b.cy, b.r + 1)
            cousin = Ball(b.cx, b.cy, b.r + 2)
            ok = concent(b, b)
            ok = ok and concent(b, other) == concent(other, b)
            ok = ok and concent(b, sibling) and concent(sibling, cousin) and concent(b, cousin)
            yield ok, (b, other)

    checker.law("concent_equivalence", concent_cases())

    def order_cases():
        for b in balls:
            mid = _enclosing_ball(rng, b)
            outer = _enclosing_ball(rng, mid)
            ok = ball_pt(b, b)
            ok = ok and ball_pt(b, mid) and ball_pt(mid, outer) and ball_pt(b, outer)
            ok = ok and ((not (ball_pt(b, mid) and ball_pt(mid, b))) or b == mid)
            yield ok, (b, mid, outer)

    checker.law("ball_pt_partial_order", order_cases())

    def symmetry_cases():
        for i, b in enumerate(balls):
            other = balls[(i + 7) % len(balls)]
            third = balls[(i + 13) % len(balls)]
            r2 = draw_positive_rational(rng)
            tangent = Ball(b.cx + b.r + r2, b.cy, r2)
            ok = ext_tangent(b, tangent) and ext_tangent(tangent, b)
            ok = ok and ext_tangent(b, other) == ext_tangent(other, b)
            ok = ok and between(b, other, third) == between(b, third, other)
            yield ok, (b, other, third)

    checker.law("tangent_between_symmetry", symmetry_cases())

    def point_cases():
        for b in balls:
            p = Ball(b.cx, b.cy, draw_positive_rational(rng))
            q = Ball(b.cx, b.cy, draw_positive_rational(rng))
            ok = point_of(b, b)
            ok = ok and ((not (point_of(p, b) and point_of(q, b))) or concent(p, q))
            yield ok, (b, p, q)

    checker.law("point_reflexive_equiv_points", point_cases())

    def scaling_cases():
        for i, b in enumerate(balls):
            other = balls[(i + 3) % len(balls)]
            third = balls[(i + 11) % len(balls)]
            scale = draw_positive_rational(rng)
            dx = draw_rational(rng)
            dy = draw_rational(rng)

            def t(ball: Ball) -> Ball:
                return transform_ball(ball, scale, dx, dy)

            region = Region((other, third))
            t_region = Region((t(other), t(third)))
            ok = ball_pt(b, other) == ball_pt(t(b), t(other))
            ok = ok and ext_tangent(b, other) == ext_tangent(t(b), t(other))
            ok = ok and between(b, other, third) == between(t(b), t(other), t(third))
            ok = ok and concent(b, other) == concent(t(b), t(other))
            ok = ok and interior_point(b, region) == interior_point(t(b), t_region)
            ok = ok and boundary_member(b, region) == boundary_member(t(b), t_region)
            before = part_of_region(b, region, small_budget)
            after = part_of_region(t(b), t_region, small_budget)
            ok = ok and type(before) is type(after)
            if isinstance(before, NotContained) and isinstance(after, NotContained):
                wx, wy = before.witness
                ok = ok and after.witness == (wx * scale + dx, wy * scale + dy)
            yield ok, (b, other, third, scale, dx, dy)

    checker.law("scaling_invariance", scaling_cases())

    regions = [draw_region(rng, max_balls=4) for _ in range(max(cases // 5, 10))]

    def interior_boundary_cases():
        for region in regions:
            for p in probe_points(region)[:12]:
                probe = Ball(p[0], p[1], Fraction(1, 2))
                contained = sat_interior_point(probe, region, small_budget)
                on_boundary = boundary_member(probe, region)
                if isinstance(contained, Contained) and on_boundary:
                    yield False, (probe, region)
                else:
                    yield True, (probe, region)

    checker.law("interior_never_boundary", interior_boundary_cases())

    def compl_boundary_cases():
        for region in regions:
            comp = compl_g(region)
            for p in probe_points(region)[:12]:
                ok = boundary_member(Ball(p[0], p[1], 1), region) == comp.boundary_contains_center(p)
                yield ok, (p, region)

    checker.law("boundary_of_complement", compl_boundary_cases())

    def boundary_not_region_cases():
        for region in regions:
            for p in probe_points(region)[:12]:
                probe = Ball(p[0], p[1], Fraction(1, 4))
                if boundary_member(probe, region):
                    out = part_of_region(probe, region, small_budget)
                    yield not isinstance(out, Contained), (probe, region)
                else:
                    yield True, (probe, region)

    checker.law("boundary_ball_never_contained", boundary_not_region_cases())

    def closure_membership_cases():
        for region in regions:
            closure = closure_g(region)
            for p in probe_points(region):
                via_closure = closure.contains_center(p)
                via_parts = interior_point(Ball(p[0], p[1], 1), region) or boundary_member(
                    Ball(p[0], p[1], 1), region
                )
                ok = via_closure == via_parts == adherent(p, region)
                yield ok, (p, region)

    checker.law("closure_is_interior_plus_boundary", closure_membership_cases())

    def postulate_cases():
        for region in regions:
            yield check_tarski_postulates(region, small_budget).passed, (region,)

    checker.law("region_postulates", postulate_cases())

    def hausdorff_cases():
        for i in range(max(cases // 5, 10)):
            p1 = PointClass(draw_rational(rng), draw_rational(rng))
            p2 = PointClass(draw_rational(rng), draw_rational(rng))
            if p1 == p2:
                yield True, (p1, p2)
                continue
            b1, b2 = hausdorff_separation(p1, p2)
            ok = ext_region(Region((b1,)), Region((b2,)))
            for _ in range(10):
                probe = Ball(
                    (p1.cx + p2.cx) / 2 + Fraction(rng.randint(-4, 4), 8),
                    (p1.cy + p2.cy) / 2 + Fraction(rng.randint(-4, 4), 8),
                    Fraction(rng.randint(1, 4), 8),
                )
                in_first = isinstance(
                    sat_interior_point(probe, Region((b1,)), small_budget), Contained
                )
                in_second = isinstance(
                    sat_interior_point(probe, Region((b2,)), small_budget), Contained
                )
                ok = ok and not (in_first and in_second)
            yield ok, (p1, p2)

    checker.law("hausdorff_separation", hausdorff_cases())

    def convexity_cases():
        single = Region((balls[0],))
        yield convexity_counterexample(single, 60, seed) is None, (single,)
        split = Region((Ball(0, 0, 1), Ball(4, 0, 1)))
        witness = convexity_counterexample(split, 400, seed)
        if witness is None:
            yield False, (split,)
        else:
            middle, left, right = witness
            ok = between(middle, left, right)
            ok = ok and isinstance(
                sat_interior_point(left, split, small_budget), Contained
            )
            ok = ok and isinstance(
                sat_interior_point(right, split, small_budget), Contained
            )
            ok = ok and not interior_point(middle, split)
            yield ok, (split, witness)

    checker.law("convexity_search", convexity_cases())

    covers = degenerate_covers(40)
    unknown_count = 0
    total = 0

    def monotone_cases():
        nonlocal unknown_count, total
        for label, b, cover in covers:
            outcomes = [part_of_region(b, cover, bud) for bud in (2, 5, 9)]
            total += len(outcomes)
            unknown_count += sum(isinstance(o, Unknown) for o in outcomes)
            ok = True
            for earlier, later in zip(outcomes, outcomes[1:]):
                if isinstance(earlier, Contained):
                    ok = ok and isinstance(later, Contained)
                if isinstance(earlier, NotContained):
                    ok = ok and isinstance(later, NotContained)
            for out in outcomes:
                if isinstance(out, NotContained):
                    wx, wy = out.witness
                    inside = dist2((wx, wy), b.center) <= b.r * b.r
                    outside_all = all(
                        dist2((wx, wy), cb.center) > cb.r * cb.r for cb in cover.balls
                    )
                    ok = ok and inside and outside_all
            yield ok, (label, b, cover)

    checker.law("containment_budget_monotone", monotone_cases())
    checker.report.metadata["unknown_rate"] = f"{unknown_count}/{total}"
    return checker.report


# --------------------------------------------------------------------------
# Combined topology-instance suite


def run_kuratowski_all(cases: int, seed: int, budget: int) -> list[LawReport]:
    reports = [
        check_laws(mereo_topology_spec(3), cases=1, seed=seed),
        check_laws(regopen_topology_spec(), cases=cases, seed=seed),
        check_laws(geometry_topology_spec(seed, budget), cases=1, seed=seed),
    ]
    control = check_laws(broken_interior_spec(3), cases=1, seed=seed)
    caught = (
        not control.passed
        and not control.result("open_intensive").passed
        and control.result("open_intensive").counterexample is not None
    )
    negative = LawReport(subject="negative-control", cases=1, seed=seed)
    negative.results.append(
        LawResult("broken_interior_detected", caught, 1, 0, None if caught else ())
    )
    reports.append(negative)
    return reports


def run_suite(
    name: str, cases: int | None = None, seed: int = 0, budget: int = 12
) -> SuiteResult:
    """Run one named suite; deterministic for fixed arguments."""
    if name not in SUITE_NAMES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    if cases is None:
        cases = _DEFAULT_CASES[name]
    result = SuiteResult(name=name)
    if name == "mereo":
        result.reports.append(run_mereo_suite(seed))
    elif name == "regopen":
        result.reports.append(run_regopen_suite(cases, seed))
    elif name == "geometry":
        result.reports.append(run_geometry_suite(cases, seed, budget))
    else:
        result.reports.extend(run_kuratowski_all(cases, seed, budget))
    return result

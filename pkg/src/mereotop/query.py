"""Query parsing and evaluation over a loaded scene.

One query per line, one form per engine predicate:

    eta <id> <id>              name copula over scene names
    pt? <id> <id>              region parthood (three-valued)
    between? <id> <id> <id>    strict betweenness of centers
    boundary? <id> <id>        boundary membership
    interior-point? <id> <id>  interior point test
    sat-interior? <id> <id>    saturated interior point (three-valued)
    concent? <id> <id>         concentricity
    ext? <id> <id>             no common part
    convex? <id>               convexity counterexample search
    hausdorff <id> <id>        separating balls for two points
    closure? <id> <id>         closure membership
    check <suite>              run a law suite

``pt?`` takes ``--budget N``; ``convex?`` takes ``--samples N``; ``check``
takes ``--cases N --seed S --budget D``.  Ball identifiers denote singleton
names, region identifiers plural names; a point identifier can stand in
wherever only a center is needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import BudgetInvalid, ConcentricPoints, UnknownIdentifier, UnknownSuite
from .geometry.balls import Ball, between, concent
from .geometry.regions import (
    Contained,
    NotContained,
    Region,
    Unknown,
    boundary_member,
    closure_g,
    convexity_counterexample,
    ext_region,
    hausdorff_separation,
    interior_point,
    region_part_of,
    sat_interior_point,
)
from .lo import LOModel, eta
from .scene import Diagnostic, DiagnosticError, Scene
from .suites import SUITE_NAMES, run_suite

_FORMS = {
    "eta": 2,
    "pt?": 2,
    "between?": 3,
    "boundary?": 2,
    "interior-point?": 2,
    "sat-interior?": 2,
    "concent?": 2,
    "ext?": 2,
    "convex?": 1,
    "hausdorff": 2,
    "closure?": 2,
    "check": 1,
}

_FLAGS = {
    "pt?": ("--budget",),
    "sat-interior?": ("--budget",),
    "convex?": ("--samples",),
    "check": ("--cases", "--seed", "--budget"),
}


@dataclass(frozen=True)
class Query:
    """Parsed query: form, positional (token, column) pairs, integer flags."""

    form: str
    args: tuple[tuple[str, int], ...]
    options: dict[str, int] = field(default_factory=dict)
    source: str = ""


@dataclass(frozen=True)
class EvalOutcome:
    kind: str  # true | false | unknown | value
    text: str

    @property
    def exit_code(self) -> int:
        return {"true": 0, "false": 1, "unknown": 2, "value": 0}[self.kind]


class UnknownIdentifierDiagnostic(DiagnosticError, UnknownIdentifier):
    """Positioned diagnostic that is also catchable as UnknownIdentifier."""


def _fail(message: str, column: int, source: str) -> DiagnosticError:
    return DiagnosticError(Diagnostic(message, 1, column, source))


def _unknown_id(message: str, column: int, source: str) -> UnknownIdentifierDiagnostic:
    return UnknownIdentifierDiagnostic(Diagnostic(message, 1, column, source))


def parse_query(text: str) -> Query:
    """Parse one query line; raises DiagnosticError on malformed input."""
    toks = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]
    if not toks:
        raise _fail("empty query", 1, text)
    head, head_col = toks[0]
    if head not in _FORMS:
        raise _fail(f"unknown query form {head!r}", head_col, text)
    allowed_flags = _FLAGS.get(head, ())
    args: list[tuple[str, int]] = []
    options: dict[str, int] = {}
    i = 1
    while i < len(toks):
        tok, col = toks[i]
        if tok.startswith("--"):
            if tok not in allowed_flags:
                raise _fail(f"unknown option {tok!r}", col, text)
            if i + 1 >= len(toks):
                raise _fail(f"option {tok!r} needs an integer value", col, text)
            value, value_col = toks[i + 1]
            try:
                options[tok[2:]] = int(value)
            except ValueError:
                raise _fail(f"option {tok!r} needs an integer value", value_col, text)
            i += 2
        else:
            args.append((tok, col))
            i += 1
    if len(args) != _FORMS[head]:
        raise _fail(
            f"{head} expects {_FORMS[head]} identifier(s), got {len(args)}",
            head_col,
            text,
        )
    return Query(head, tuple(args), options, text)


class _Resolver:
    def __init__(self, scene: Scene, source: str) -> None:
        self.scene = scene
        self.source = source

    def ball(self, tok: str, col: int) -> Ball:
        """A ball value; a point stands in as a unit-radius probe."""
        if tok in self.scene.balls:
            return self.scene.balls[tok]
        if tok in self.scene.points:
            p = self.scene.points[tok]
            return Ball(p.cx, p.cy, 1)
        raise _unknown_id(f"unknown ball or point {tok!r}", col, self.source)

    def region(self, tok: str, col: int) -> Region:
        if tok in self.scene.regions:
            return self.scene.region_value(tok)
        if tok in self.scene.balls:
            return Region((self.scene.balls[tok],))
        raise _unknown_id(f"unknown region or ball {tok!r}", col, self.source)

    def point(self, tok: str, col: int):
        if tok in self.scene.points:
            return self.scene.points[tok]
        if tok in self.scene.balls:
            return self.scene.balls[tok].center_point()
        raise _unknown_id(f"unknown point or ball {tok!r}", col, self.source)

    def name(self, model: LOModel, tok: str, col: int):
        if tok in self.scene.balls:
            return model.iota(tok)
        if tok in self.scene.regions:
            return model.name(self.scene.regions[tok])
        raise _unknown_id(f"unknown name {tok!r}", col, self.source)


def _bool_outcome(value: bool) -> EvalOutcome:
    return EvalOutcome("true" if value else "false", "true" if value else "false")


def _containment_outcome(out) -> EvalOutcome:
    if isinstance(out, Contained):
        return EvalOutcome("true", "true")
    if isinstance(out, NotContained):
        wx, wy = out.witness
        return EvalOutcome("false", f"false witness=({wx}, {wy})")
    assert isinstance(out, Unknown)
    return EvalOutcome("unknown", f"unknown budget={out.depth}")


def eval_query(scene: Scene, query: Query | str, budget: int = 12) -> EvalOutcome:
    """Evaluate one query; deterministic for fixed (scene, query, budget)."""
    if isinstance(query, str):
        query = parse_query(query)
    if budget < 1:
        raise BudgetInvalid(f"budget must be >= 1, got {budget}")
    r = _Resolver(scene, query.source)
    form = query.form
    args = query.args
    local_budget = query.options.get("budget", budget)
    if local_budget < 1:
        raise BudgetInvalid(f"budget must be >= 1, got {local_budget}")

    if form == "eta":
        model = LOModel(tuple(scene.balls))
        a = r.name(model, *args[0])
        b = r.name(model, *args[1])
        return _bool_outcome(eta(a, b))
    if form == "pt?":
        out = region_part_of(r.region(*args[0]), r.region(*args[1]), local_budget)
        return _containment_outcome(out)
    if form == "between?":
        return _bool_outcome(
            between(r.ball(*args[0]), r.ball(*args[1]), r.ball(*args[2]))
        )
    if form == "boundary?":
        return _bool_outcome(boundary_member(r.ball(*args[0]), r.region(*args[1])))
    if form == "interior-point?":
        return _bool_outcome(interior_point(r.ball(*args[0]), r.region(*args[1])))
    if form == "sat-interior?":
        out = sat_interior_point(r.ball(*args[0]), r.region(*args[1]), local_budget)
        return _containment_outcome(out)
    if form == "concent?":
        return _bool_outcome(concent(r.ball(*args[0]), r.ball(*args[1])))
    if form == "ext?":
        return _bool_outcome(ext_region(r.region(*args[0]), r.region(*args[1])))
    if form == "convex?":
        samples = query.options.get("samples", 200)
        witness = convexity_counterexample(r.region(*args[0]), samples, seed=0)
        if witness is None:
            return EvalOutcome("true", "true")
        middle, left, right = witness
        return EvalOutcome(
            "false", f"false witness middle={middle!r} ends={left!r},{right!r}"
        )
    if form == "hausdorff":
        try:
            b1, b2 = hausdorff_separation(r.point(*args[0]), r.point(*args[1]))
        except ConcentricPoints as exc:
            raise _fail(str(exc), args[0][1], query.source)
        return EvalOutcome("value", f"{b1!r} {b2!r}")
    if form == "closure?":
        probe = r.ball(*args[0])
        region = r.region(*args[1])
        return _bool_outcome(closure_g(region).contains_center(probe.center))
    if form == "check":
        suite_name, col = args[0]
        if suite_name not in SUITE_NAMES:
            raise _fail(f"unknown suite {suite_name!r}", col, query.source)
        try:
            result = run_suite(
                suite_name,
                cases=query.options.get("cases"),
                seed=query.options.get("seed", 0),
                budget=local_budget,
            )
        except UnknownSuite as exc:
            raise _fail(str(exc), col, query.source)
        text = "\n".join(result.describe())
        return EvalOutcome("true" if result.passed else "false", text)
    raise _fail(f"unknown query form {form!r}", 1, query.source)

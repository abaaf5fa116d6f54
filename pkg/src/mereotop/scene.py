"""Scene files: named balls, regions over those balls, and named points.

Line-oriented plain text, one declaration per line:

    # comment
    ball <id> <cx> <cy> <r>
    region <id> = { <ballid> ... }
    point <id> <cx> <cy>

Coordinates and radii are integers or p/q rationals.  Identifiers share one
namespace; duplicates and dangling references are rejected with a positioned
diagnostic.  A scene must declare at least one ball.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry.balls import Ball, PointClass
from .geometry.regions import Region


@dataclass(frozen=True)
class Diagnostic:
    """A positioned parse or resolution failure."""

    message: str
    line: int
    column: int
    excerpt: str

    def render(self) -> str:
        pointer = " " * (self.column - 1) + "^"
        return (
            f"error: {self.message}\n"
            f"  line {self.line}, column {self.column}\n"
            f"  {self.excerpt}\n"
            f"  {pointer}"
        )


class DiagnosticError(Exception):
    def __init__(self, diagnostic: Diagnostic) -> None:
        super().__init__(diagnostic.render())
        self.diagnostic = diagnostic


@dataclass
class Scene:
    """Parsed scene contents, in declaration order."""

    balls: dict[str, Ball] = field(default_factory=dict)
    regions: dict[str, tuple[str, ...]] = field(default_factory=dict)
    points: dict[str, PointClass] = field(default_factory=dict)

    def region_value(self, name: str) -> Region:
        return Region(tuple(self.balls[b] for b in self.regions[name]))

    def has_id(self, name: str) -> bool:
        return name in self.balls or name in self.regions or name in self.points


_TOKEN = re.compile(r"\S+")
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _fail(message: str, lineno: int, column: int, line: str) -> DiagnosticError:
    return DiagnosticError(Diagnostic(message, lineno, column, line.rstrip("\n")))


def _parse_rational(token: str, lineno: int, column: int, line: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise _fail(f"expected a rational number, got {token!r}", lineno, column, line)
    if "/" in token and int(token.split("/")[1]) == 0:
        raise _fail("zero denominator", lineno, column, line)
    return Fraction(token)


def parse_scene(text: str) -> Scene:
    """Parse scene text; raises DiagnosticError with a position on failure."""
    scene = Scene()
    last_line = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = _tokens(raw)
        head, head_col = toks[0]
        if head == "ball":
            _parse_ball(scene, toks, lineno, raw)
        elif head == "region":
            _parse_region(scene, toks, lineno, raw)
        elif head == "point":
            _parse_point(scene, toks, lineno, raw)
        else:
            raise _fail(f"unknown declaration {head!r}", lineno, head_col, raw)
    if not scene.balls:
        raise _fail("a scene must declare at least one ball", last_line, 1, "")
    return scene


def _declare(scene: Scene, name: str, lineno: int, column: int, raw: str) -> None:
    if scene.has_id(name):
        raise _fail(f"duplicate identifier {name!r}", lineno, column, raw)


def _parse_ball(scene: Scene, toks, lineno: int, raw: str) -> None:
    if len(toks) != 5:
        raise _fail("expected: ball <id> <cx> <cy> <r>", lineno, toks[0][1], raw)
    (_, _), (name, name_col), (cx, cx_col), (cy, cy_col), (r, r_col) = toks
    _declare(scene, name, lineno, name_col, raw)
    cx_v = _parse_rational(cx, lineno, cx_col, raw)
    cy_v = _parse_rational(cy, lineno, cy_col, raw)
    r_v = _parse_rational(r, lineno, r_col, raw)
    if r_v <= 0:
        raise _fail("radius must be positive", lineno, r_col, raw)
    scene.balls[name] = Ball(cx_v, cy_v, r_v)


def _parse_region(scene: Scene, toks, lineno: int, raw: str) -> None:
    if len(toks) < 6 or toks[2][0] != "=" or toks[3][0] != "{" or toks[-1][0] != "}":
        raise _fail(
            "expected: region <id> = { <ballid> ... }", lineno, toks[0][1], raw
        )
    name, name_col = toks[1]
    _declare(scene, name, lineno, name_col, raw)
    members: list[str] = []
    for tok, col in toks[4:-1]:
        if tok not in scene.balls:
            raise _fail(f"unknown ball {tok!r}", lineno, col, raw)
        members.append(tok)
    if not members:
        raise _fail("a region needs at least one ball", lineno, name_col, raw)
    scene.regions[name] = tuple(members)


def _parse_point(scene: Scene, toks, lineno: int, raw: str) -> None:
    if len(toks) != 4:
        raise _fail("expected: point <id> <cx> <cy>", lineno, toks[0][1], raw)
    (_, _), (name, name_col), (cx, cx_col), (cy, cy_col) = toks
    _declare(scene, name, lineno, name_col, raw)
    scene.points[name] = PointClass(
        _parse_rational(cx, lineno, cx_col, raw),
        _parse_rational(cy, lineno, cy_col, raw),
    )


def format_scene(scene: Scene) -> str:
    """Canonical text for a scene; parse(format(s)) == s."""
    lines = []
    for name, ball in scene.balls.items():
        lines.append(f"ball {name} {ball.cx} {ball.cy} {ball.r}")
    for name, members in scene.regions.items():
        lines.append(f"region {name} = {{ {' '.join(members)} }}")
    for name, point in scene.points.items():
        lines.append(f"point {name} {point.cx} {point.cy}")
    return "\n".join(lines) + "\n"

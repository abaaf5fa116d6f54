"""Model-generic checker for the four interior-form topology axioms.

A topology instance supplies a carrier, an openness predicate, an interior
operator, an equivalence, a partial binary meet, and a distinguished top
element.  ``check_laws`` then samples the carrier (exhaustively when a finite
population is given, otherwise by seeded generation) and evaluates:

  open_space       interior(univ) == univ
  open_intensive   open Q  ->  interior(Q) == Q
  open_idempotent  open Q  ->  interior(interior(Q)) == interior(Q)
  open_inter       open A, open B, meet(A, B) defined  ->
                   meet(interior A, interior B) == interior(meet(A, B))

The intersection axiom is checked in its quantified per-pair form so that a
partial meet can be skipped (and counted) wherever it is undefined.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Sequence

from .errors import GeneratorExhausted

LAW_NAMES = ("open_space", "open_intensive", "open_idempotent", "open_inter")


@dataclass(frozen=True)
class TopologySpec:
    """One instantiation of the interior axioms over some carrier."""

    label: str
    univ: Any
    is_open: Callable[[Any], bool]
    interior: Callable[[Any], Any]
    equiv: Callable[[Any, Any], bool]
    meet: Callable[[Any, Any], Any | None]  # None signals an undefined meet
    population: Sequence[Any] | None = None  # exhaustive sampling when given
    draw: Callable[[random.Random], Any] | None = None  # otherwise seeded


@dataclass
class LawResult:
    """Outcome of one law over one sample."""

    law: str
    passed: bool
    evaluated: int
    skipped: int = 0
    counterexample: tuple | None = None

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.law} evaluated={self.evaluated} skipped={self.skipped}"
        if self.counterexample is not None:
            line += f" counterexample={self.counterexample!r}"
        return line


@dataclass
class LawReport:
    """Per-law results for one checked subject, reproducible from the seed."""

    subject: str
    cases: int
    seed: int | None
    results: list[LawResult] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def describe(self) -> list[str]:
        lines = [r.describe() for r in self.results]
        for key in sorted(self.metadata):
            lines.append(f"# {key}={self.metadata[key]}")
        return lines


def evaluate_law(spec: TopologySpec, law: str, values: tuple) -> bool:
    """Re-evaluate one law on explicit values; used to replay counterexamples."""
    if law == "open_space":
        return spec.equiv(spec.interior(spec.univ), spec.univ)
    if law == "open_intensive":
        (q,) = values
        return spec.equiv(spec.interior(q), q)
    if law == "open_idempotent":
        (q,) = values
        return spec.equiv(spec.interior(spec.interior(q)), spec.interior(q))
    if law == "open_inter":
        a, b = values
        r = spec.meet(a, b)
        if r is None:
            return True
        lhs = spec.meet(spec.interior(a), spec.interior(b))
        return lhs is not None and spec.equiv(lhs, spec.interior(r))
    raise ValueError(f"unknown law: {law}")


def _singles_and_pairs(
    spec: TopologySpec, cases: int, seed: int
) -> tuple[list, list]:
    if spec.population is not None:
        population = list(spec.population)
        if not population:
            raise GeneratorExhausted(f"{spec.label}: empty population")
        return population, list(product(population, repeat=2))
    if spec.draw is None:
        raise GeneratorExhausted(f"{spec.label}: no sample source")
    rng = random.Random(seed)
    singles = [spec.draw(rng) for _ in range(cases)]
    pairs = [(spec.draw(rng), spec.draw(rng)) for _ in range(cases)]
    return singles, pairs


def check_laws(spec: TopologySpec, cases: int, seed: int) -> LawReport:
    """Evaluate the four interior axioms over a sample of the carrier.

    Deterministic for a fixed (spec, cases, seed).  A failing law records the
    first counterexample; replaying it through ``evaluate_law`` reproduces
    the failure.
    """
    if cases < 1:
        raise ValueError("cases must be >= 1")
    singles, pairs = _singles_and_pairs(spec, cases, seed)
    report = LawReport(subject=spec.label, cases=cases, seed=seed)

    ok = spec.equiv(spec.interior(spec.univ), spec.univ)
    report.results.append(
        LawResult("open_space", ok, 1, 0, None if ok else (spec.univ,))
    )

    for law in ("open_intensive", "open_idempotent"):
        evaluated = skipped = 0
        failure = None
        for q in singles:
            if not spec.is_open(q):
                skipped += 1
                continue
            evaluated += 1
            if failure is None and not evaluate_law(spec, law, (q,)):
                failure = (q,)
        report.results.append(LawResult(law, failure is None, evaluated, skipped, failure))

    evaluated = skipped = 0
    failure = None
    for a, b in pairs:
        if not (spec.is_open(a) and spec.is_open(b)):
            skipped += 1
            continue
        if spec.meet(a, b) is None:
            skipped += 1
            continue
        evaluated += 1
        if failure is None and not evaluate_law(spec, "open_inter", (a, b)):
            failure = (a, b)
    report.results.append(
        LawResult("open_inter", failure is None, evaluated, skipped, failure)
    )
    return report


def check_prod_partiality(spec: TopologySpec, cases: int, seed: int) -> LawReport:
    """Check the intersection axiom alone, counting undefined meets as skips.

    Skipped plus evaluated always sums to the number of sampled pairs, so the
    caller can audit how much of the sample the partial meet discharged.
    """
    if cases < 1:
        raise ValueError("cases must be >= 1")
    _, pairs = _singles_and_pairs(spec, cases, seed)
    report = LawReport(subject=spec.label, cases=cases, seed=seed)
    evaluated = skipped = 0
    failure = None
    for a, b in pairs:
        defined = (
            spec.is_open(a) and spec.is_open(b) and spec.meet(a, b) is not None
        )
        if not defined:
            skipped += 1
            continue
        evaluated += 1
        if failure is None and not evaluate_law(spec, "open_inter", (a, b)):
            failure = (a, b)
    report.results.append(
        LawResult("open_inter", failure is None, evaluated, skipped, failure)
    )
    report.metadata["total_pairs"] = str(evaluated + skipped)
    return report

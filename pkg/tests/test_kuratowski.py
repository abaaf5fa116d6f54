"""The interior-axiom harness: instances, negative controls, bookkeeping."""

import pytest

from mereotop.errors import GeneratorExhausted
from mereotop.kuratowski import (
    TopologySpec,
    check_laws,
    check_prod_partiality,
    evaluate_law,
)
from mereotop.suites import (
    broken_interior_spec,
    geometry_topology_spec,
    mereo_topology_spec,
    regopen_topology_spec,
)


def test_mereo_instance_all_laws_pass_exhaustively():
    report = check_laws(mereo_topology_spec(3), cases=1, seed=0)
    assert report.passed
    assert [r.law for r in report.results] == [
        "open_space",
        "open_intensive",
        "open_idempotent",
        "open_inter",
    ]
    # Seven individuals are the open elements of the 128-name carrier.
    assert report.result("open_intensive").evaluated == 7
    assert report.result("open_intensive").skipped == 121


def test_regopen_instance_seeded():
    report = check_laws(regopen_topology_spec(), cases=1000, seed=42)
    assert report.passed
    assert report.result("open_intensive").evaluated == 1000


def test_geometry_instance_on_fixtures():
    report = check_laws(geometry_topology_spec(seed=5, budget=8), cases=1, seed=5)
    assert report.passed
    assert report.result("open_inter").evaluated > 0
    assert report.result("open_inter").skipped > 0


def test_negative_control_broken_interior_caught():
    report = check_laws(broken_interior_spec(3), cases=1, seed=0)
    intensive = report.result("open_intensive")
    assert not intensive.passed
    assert intensive.counterexample is not None
    # The counterexample replays to the same failure standalone.
    assert not evaluate_law(
        broken_interior_spec(3), "open_intensive", intensive.counterexample
    )


def test_reports_deterministic():
    a = check_laws(regopen_topology_spec(), cases=200, seed=9)
    b = check_laws(regopen_topology_spec(), cases=200, seed=9)
    assert [(r.law, r.passed, r.evaluated, r.skipped) for r in a.results] == [
        (r.law, r.passed, r.evaluated, r.skipped) for r in b.results
    ]
    assert [r.counterexample for r in a.results] == [r.counterexample for r in b.results]


def test_prod_partiality_bookkeeping():
    report = check_prod_partiality(regopen_topology_spec(), cases=300, seed=3)
    result = report.result("open_inter")
    assert result.passed
    assert result.skipped > 0  # disjoint pairs occur and are counted
    assert result.evaluated > 0  # overlapping pairs are evaluated
    assert result.evaluated + result.skipped == int(report.metadata["total_pairs"])


def test_empty_population_raises():
    spec = TopologySpec(
        label="empty",
        univ=0,
        is_open=lambda q: True,
        interior=lambda q: q,
        equiv=lambda a, b: a == b,
        meet=lambda a, b: None,
        population=[],
    )
    with pytest.raises(GeneratorExhausted):
        check_laws(spec, cases=1, seed=0)


def test_cases_must_be_positive():
    with pytest.raises(ValueError):
        check_laws(mereo_topology_spec(2), cases=0, seed=0)

"""Suite runner: determinism, naming, exit codes, report files."""

import pytest

from mereotop.errors import UnknownSuite
from mereotop.report import write_suite_report
from mereotop.suites import SUITE_NAMES, run_suite


def test_suite_names_stable():
    assert SUITE_NAMES == ("mereo", "regopen", "geometry", "kuratowski-all")


def test_unknown_suite_rejected():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_regopen_suite_deterministic():
    a = run_suite("regopen", cases=120, seed=42)
    b = run_suite("regopen", cases=120, seed=42)
    assert a.describe() == b.describe()
    assert a.passed and a.exit_code == 0


def test_geometry_suite_small_run():
    result = run_suite("geometry", cases=60, seed=11, budget=8)
    assert result.passed
    report = result.reports[0]
    assert "unknown_rate" in report.metadata
    unknown, total = report.metadata["unknown_rate"].split("/")
    assert 0 < int(unknown) < int(total)


def test_kuratowski_all_covers_three_instances_and_control():
    result = run_suite("kuratowski-all", cases=80, seed=2, budget=8)
    assert result.passed
    subjects = [rep.subject for rep in result.reports]
    assert subjects == [
        "mereology-base-3",
        "regular-open-line",
        "disk-regions",
        "negative-control",
    ]


def test_suite_report_files(tmp_path):
    result = run_suite("regopen", cases=50, seed=1)
    tsv, png = write_suite_report(result, tmp_path)
    body = tsv.read_text().splitlines()
    assert len(body) == 1 + sum(len(rep.results) for rep in result.reports)
    assert png.stat().st_size > 0

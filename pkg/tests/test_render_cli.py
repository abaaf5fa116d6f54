"""SVG rendering determinism and the command line contract."""

import subprocess
import sys
from pathlib import Path

import pytest

from mereotop.cli import main
from mereotop.render import RenderOptions, render_svg
from mereotop.scene import parse_scene

SCENES_DIR = Path(__file__).parent / "data" / "scenes"

ONE_BALL = "ball solo 0 0 1\n"
TWO_REGIONS = """\
ball a -1 0 1
ball b 2 0 1
region LEFT = { a }
region RIGHT = { b }
"""


def test_one_circle_per_ball():
    svg = render_svg(parse_scene(ONE_BALL))
    assert svg.count("<circle") == 1
    assert svg.startswith("<svg ")
    assert svg.rstrip().endswith("</svg>")


def test_two_regions_two_fill_classes():
    svg = render_svg(parse_scene(TWO_REGIONS))
    fills = {
        part.split('"')[0]
        for part in svg.split('fill="')[1:]
        if not part.startswith("#000000")
    }
    assert len(fills) == 2


def test_render_deterministic_bytes():
    scene = parse_scene(TWO_REGIONS)
    first = render_svg(scene).encode()
    second = render_svg(scene).encode()
    assert first == second


def test_unregioned_ball_gets_default_fill():
    svg = render_svg(parse_scene(ONE_BALL))
    assert '#dddddd' in svg


def test_points_rendered_as_markers():
    svg = render_svg(parse_scene(ONE_BALL + "point p 2 2\n"))
    assert svg.count("<circle") == 2


def test_width_option():
    svg = render_svg(parse_scene(ONE_BALL), RenderOptions(width=100))
    assert 'width="100"' in svg


# -- CLI -----------------------------------------------------------------------


@pytest.fixture
def demo_file(tmp_path):
    path = tmp_path / "demo.scene"
    path.write_text(
        "ball b1 0 0 1\nball b2 2 0 1\nregion PAIR = { b1 b2 }\npoint t 1 0\n"
    )
    return str(path)


@pytest.fixture
def tangency_file(tmp_path):
    path = tmp_path / "tangency.scene"
    path.write_text(
        "ball b 0 0 1\nball up 0 2 2\nball down 0 -2 2\nregion COVER = { up down }\n"
    )
    return str(path)


def test_cli_parse_round_trip(demo_file, capsys):
    assert main(["parse", demo_file]) == 0
    out = capsys.readouterr().out
    assert "ball b1 0 0 1" in out
    assert "region PAIR = { b1 b2 }" in out


def test_cli_parse_diagnostic_exit(tmp_path, capsys):
    bad = tmp_path / "bad.scene"
    bad.write_text("ball b1 0 0 0\n")
    assert main(["parse", str(bad)]) == 3
    assert "radius" in capsys.readouterr().err


def test_cli_eval_exit_codes(demo_file, tangency_file, capsys):
    assert main(["eval", demo_file, "-q", "concent? b1 b1"]) == 0
    assert main(["eval", demo_file, "-q", "concent? b1 b2"]) == 1
    assert main(["eval", tangency_file, "-q", "pt? b COVER --budget 2"]) == 2
    assert main(["eval", demo_file, "-q", "nonsense"]) == 3
    assert main(["eval", demo_file, "-q", "concent? missing b1"]) == 3


def test_cli_eval_value(demo_file, capsys):
    assert main(["eval", demo_file, "-q", "hausdorff b1 b2"]) == 0
    assert "B(0, 0, 1/2)" in capsys.readouterr().out


def test_cli_missing_file(capsys):
    assert main(["parse", "/nonexistent/x.scene"]) == 3


def test_cli_render_byte_stable(demo_file, tmp_path, capsys):
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    assert main(["render", demo_file, "-o", str(out1)]) == 0
    assert main(["render", demo_file, "-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_cli_check_small_suite(capsys):
    assert main(["check", "kuratowski-all", "--cases", "60", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "suite kuratowski-all: PASS" in out


def test_cli_check_report_files(tmp_path, capsys):
    code = main(
        [
            "check",
            "kuratowski-all",
            "--cases",
            "40",
            "--seed",
            "3",
            "--report-dir",
            str(tmp_path),
        ]
    )
    assert code == 0
    tsv = tmp_path / "kuratowski-all.tsv"
    png = tmp_path / "kuratowski-all.png"
    assert tsv.exists() and png.exists()
    header, *rows = tsv.read_text().splitlines()
    assert header.split("\t") == [
        "subject",
        "law",
        "status",
        "evaluated",
        "skipped",
        "counterexample",
    ]
    assert all(row.split("\t")[2] == "pass" for row in rows)
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_cli_repl_loop(demo_file):
    proc = subprocess.run(
        [sys.executable, "-m", "mereotop", "repl", demo_file],
        input="concent? b1 b1\nbad query\npt? b1 PAIR\n:quit\n",
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "true"
    assert "unknown query form" in proc.stdout
    assert "true" in lines[-1]


def test_cli_module_entry_point_matches(demo_file, tmp_path):
    # Byte stability holds across separate processes too.
    outs = []
    for name in ("p1.svg", "p2.svg"):
        target = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "mereotop", "render", demo_file, "-o", str(target)],
            capture_output=True,
            timeout=120,
        )
        assert proc.returncode == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]

"""Command line interface.

Subcommands: parse, eval, check, render, repl.  Exit codes follow a stable
contract for scripting: 0 true/pass, 1 false/fail, 2 unknown, 3 diagnostic.
All configuration goes through flags; no environment variables are read.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import MereotopError
from .query import eval_query, parse_query
from .render import RenderOptions, render_svg
from .scene import DiagnosticError, format_scene, parse_scene
from .suites import SUITE_NAMES, run_suite

EXIT_DIAGNOSTIC = 3


def _load_scene(path: str):
    text = Path(path).read_text(encoding="utf-8")
    return parse_scene(text)


def _cmd_parse(args: argparse.Namespace) -> int:
    scene = _load_scene(args.file)
    sys.stdout.write(format_scene(scene))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    scene = _load_scene(args.file)
    outcome = eval_query(scene, parse_query(args.query), budget=args.budget)
    print(outcome.text)
    return outcome.exit_code


def _cmd_check(args: argparse.Namespace) -> int:
    result = run_suite(args.suite, cases=args.cases, seed=args.seed, budget=args.budget)
    for line in result.describe():
        print(line)
    if args.report_dir:
        from .report import write_suite_report

        for path in write_suite_report(result, args.report_dir):
            print(f"wrote {path}")
    return result.exit_code


def _cmd_render(args: argparse.Namespace) -> int:
    scene = _load_scene(args.file)
    svg = render_svg(scene, RenderOptions(width=args.width))
    Path(args.output).write_bytes(svg.encode("utf-8"))
    print(f"wrote {args.output}")
    return 0


def _cmd_repl(args: argparse.Namespace) -> int:
    scene = _load_scene(args.file)
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            sys.stdout.write("mt> ")
            sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            break
        try:
            outcome = eval_query(scene, parse_query(line), budget=args.budget)
            print(outcome.text)
        except DiagnosticError as exc:
            print(exc.diagnostic.render())
        except MereotopError as exc:
            print(f"error: {exc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mt", description="Mereotopology engine: scenes, queries, law suites."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a scene file and print its canonical form")
    p.add_argument("file")
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("eval", help="evaluate one query against a scene")
    p.add_argument("file")
    p.add_argument("-q", "--query", required=True)
    p.add_argument("--budget", type=int, default=12)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("check", help="run a law suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--cases", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=12)
    p.add_argument("--report-dir", default=None)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("render", help="render a scene to SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--width", type=int, default=480)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("repl", help="interactive query loop over a scene")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=12)
    p.set_defaults(func=_cmd_repl)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DiagnosticError as exc:
        print(exc.diagnostic.render(), file=sys.stderr)
        return EXIT_DIAGNOSTIC
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTIC
    except MereotopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTIC


if __name__ == "__main__":
    sys.exit(main())

"""Suite report files: a delimited law table plus a summary figure."""

from __future__ import annotations

from pathlib import Path

from .suites import SuiteResult


def write_suite_report(result: SuiteResult, outdir: str | Path) -> list[Path]:
    """Write <suite>.tsv and <suite>.png under outdir; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    rows = []
    for subject, res in result.all_results():
        rows.append(
            (
                subject,
                res.law,
                "pass" if res.passed else "fail",
                res.evaluated,
                res.skipped,
                "" if res.counterexample is None else repr(res.counterexample),
            )
        )

    tsv_path = outdir / f"{result.name}.tsv"
    with tsv_path.open("w", encoding="utf-8") as fh:
        fh.write("subject\tlaw\tstatus\tevaluated\tskipped\tcounterexample\n")
        for row in rows:
            fh.write("\t".join(str(cell) for cell in row) + "\n")

    png_path = outdir / f"{result.name}.png"
    _write_figure(result, rows, png_path)
    return [tsv_path, png_path]


def _write_figure(result: SuiteResult, rows, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = [f"{subject}:{law}" for subject, law, *_ in rows]
    counts = [evaluated for *_, evaluated, _skipped, _ce in rows]
    colors = ["#2a9d4e" if status == "pass" else "#c23b3b" for _, _, status, *_ in rows]

    height = max(2.0, 0.28 * len(rows) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    positions = range(len(rows))
    ax.barh(positions, counts, color=colors)
    ax.set_yticks(list(positions))
    ax.set_yticklabels(labels, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("cases evaluated")
    status = "PASS" if result.passed else "FAIL"
    ax.set_title(f"suite {result.name}: {status}")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)

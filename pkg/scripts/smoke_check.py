from __future__ import annotations

import argparse
import json
from pathlib import Path

import polars as pl


def _print_profile(csv_path: Path, *, rows: int) -> None:
    df = pl.read_csv(csv_path, infer_schema_length=0)
    value = pl.col("value").cast(pl.Float64, strict=False)
    summary = df.select(
        pl.len().alias("rows"),
        value.is_infinite().sum().alias("infinite"),
        value.filter(value.is_finite()).max().alias("max_finite"),
    )
    print(f"\n-- {csv_path} --")
    with pl.Config(tbl_rows=rows, tbl_cols=20, tbl_width_chars=200):
        print(summary)
        print(df.head(rows))


def _print_report(report_path: Path) -> int:
    report = json.loads(report_path.read_text("utf-8"))
    s = report["summary"]
    print(
        f"\n-- {report_path.name} -- passed={s['passed']} failed={s['failed']} "
        f"expected_failures={s['expected_failures']} warnings={s['warnings']}"
    )
    failing = [
        {k: c[k] for k in ("code", "space", "severity", "message")}
        for c in report["checks"]
        if c["status"] == "fail"
    ]
    if failing:
        with pl.Config(tbl_rows=100, tbl_width_chars=2000, fmt_str_lengths=200):
            print(pl.DataFrame(failing))
    return int(s["failed"])


def main() -> int:
    parser = argparse.ArgumentParser(
        description="Summarize the profile CSVs and suite reports under an output directory."
    )
    parser.add_argument("root", nargs="?", default="out", help="Output directory to scan")
    parser.add_argument("--rows", type=int, default=10, help="Rows to show per profile")
    args = parser.parse_args()

    root = Path(args.root)
    if not root.exists():
        raise SystemExit(f"Output directory not found: {root}")

    csvs = sorted(root.glob("**/*.csv"))
    reports = sorted(root.glob("**/*.report.json"))
    print(f"Scanning {root}: {len(csvs)} profiles, {len(reports)} suite reports")

    for csv_path in csvs:
        _print_profile(csv_path, rows=args.rows)

    failed = sum(_print_report(p) for p in reports)
    return 1 if failed else 0


if __name__ == "__main__":
    try:
        raise SystemExit(main())
    except BrokenPipeError:
        raise SystemExit(0)

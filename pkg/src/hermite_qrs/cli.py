"""Batch command-line front end.

Subcommands: ``list`` (dataset inventory), ``analyze`` (full JSON payload for
one peak), ``batch`` (summary CSV over a whole dataset).  Output is
machine-readable JSON/CSV; plotting belongs to the explorer UI.

Exit codes: 0 success, 1 usage error, 2 data/validation error, 3 partial
batch failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .analysis import AnalysisConfig, analyze_peak, summarize_peak
from .errors import HermiteQrsError
from .records import load_dataset

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_PARTIAL = 3

BATCH_COLUMNS = [
    "record_id",
    "peak_index",
    "label",
    "delta_star",
    "tau_star",
    "baseline_l1",
    "optimized_l1",
    "prd_top2",
    "prd_top5",
]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_config_args(parser):
    parser.add_argument("--window", type=int, default=31, help="odd segment length (default 31)")
    parser.add_argument("--delta0", type=float, default=1.0, help="grid start (default 1.0)")
    parser.add_argument("--delta-max", type=float, default=3.0, help="grid end (default 3.0)")
    parser.add_argument("--delta-step", type=float, default=0.1, help="grid step (default 0.1)")
    parser.add_argument("--tau-min", type=int, default=-10, help="smallest shift (default -10)")
    parser.add_argument("--tau-max", type=int, default=10, help="largest shift (default 10)")
    parser.add_argument("--pad", choices=["error", "zero"], default="error",
                        help="out-of-range window handling (default error)")
    parser.add_argument("--demean", action="store_true", help="subtract the segment mean")
    parser.add_argument("--full-grid", action="store_true",
                        help="include every evaluated (tau, delta) cell in the report")


def _config_from_args(args) -> AnalysisConfig:
    config = AnalysisConfig(
        window=args.window,
        delta0=args.delta0,
        delta_max=args.delta_max,
        delta_step=args.delta_step,
        tau_min=args.tau_min,
        tau_max=args.tau_max,
        pad_policy="zero_pad" if args.pad == "zero" else "error",
        demean=args.demean,
        full_grid=args.full_grid,
    )
    if config.window % 2 == 0 or config.window < 3:
        raise HermiteQrsError(f"--window must be odd and >= 3, got {config.window}")
    config.search_spec()  # validates the grid bounds
    return config


def cmd_list(args) -> int:
    dataset = load_dataset(args.dataset)
    for warning in dataset.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    total = 0
    for label in ("healthy", "diseased"):
        group = dataset.by_label(label)
        print(f"{label} ({len(group)}):")
        for rec in group:
            print(f"  {rec.id}  samples={rec.samples.size}  peaks={rec.n_peaks}  fs={rec.fs_hz:g}Hz")
        total += len(group)
    print(f"{total} records")
    return EXIT_OK


def cmd_analyze(args) -> int:
    config = _config_from_args(args)
    dataset = load_dataset(args.dataset)
    record = dataset.by_id(args.record_id)
    if record is None:
        raise HermiteQrsError(f"unknown record '{args.record_id}' in {args.dataset}")
    payload = analyze_peak(record, args.peak, config)
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / f"{record.id}_peak{args.peak}.json"
    out_path.write_text(json.dumps(payload, indent=2) + "\n")
    print(out_path)
    return EXIT_OK


def cmd_batch(args) -> int:
    config = _config_from_args(args)
    dataset = load_dataset(args.dataset)
    for warning in dataset.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    rows = []
    failures = len(dataset.warnings)
    targets = sorted(dataset.records, key=lambda r: r.id)
    for record in targets:
        for peak_index in range(record.n_peaks):
            try:
                rows.append(summarize_peak(record, peak_index, config))
            except HermiteQrsError as exc:
                failures += 1
                print(f"error: {record.id} peak {peak_index}: {exc}", file=sys.stderr)
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / "batch_summary.csv"
    with open(out_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=BATCH_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _format_cell(row[k]) for k in BATCH_COLUMNS})
    print(f"{out_path}  rows={len(rows)}  failures={failures}")
    return EXIT_PARTIAL if failures else EXIT_OK


def _format_cell(value):
    if isinstance(value, float):
        return repr(value)
    return "" if value is None else value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hermite-qrs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list dataset records grouped by class")
    p_list.add_argument("dataset", help="dataset directory (healthy/ + diseased/)")
    p_list.set_defaults(func=cmd_list)

    p_analyze = sub.add_parser("analyze", help="write the full analysis JSON for one peak")
    p_analyze.add_argument("dataset")
    p_analyze.add_argument("record_id")
    p_analyze.add_argument("peak", type=int, help="0-based peak index")
    p_analyze.add_argument("--output", default=".", help="output directory (default .)")
    _add_config_args(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_batch = sub.add_parser("batch", help="write a summary CSV over every record/peak")
    p_batch.add_argument("dataset")
    p_batch.add_argument("--output", default=".", help="output directory (default .)")
    _add_config_args(p_batch)
    p_batch.set_defaults(func=cmd_batch)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HermiteQrsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Render deltanet comparison CSVs as figures.

This script only plots numbers produced by `deltanet compare`; it never
recomputes them. Each figure kind has a fixed CSV contract (exact column
set); anything else is rejected with a column diff.
"""

import argparse
import csv
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

# per-kind contract: exact header, the x column, and which columns get curves
KINDS = {
    "figure4": {
        "columns": ["second_update", "mycin", "delta1", "abs_diff"],
        "x": "second_update",
        "curves": ["mycin", "delta1"],
        "title": "Parallel combination: legacy vs symmetric map (first update 0.5)",
        "xlabel": "second update",
        "ylabel": "combined update",
    },
    "figure7": {
        "columns": ["u", "mycin", "delta1_a05", "delta1_a25", "delta1_a90"],
        "x": "u",
        "curves": ["mycin", "delta1_a05", "delta1_a25", "delta1_a90"],
        "title": "Sequential combination of strength 0.9 through uncertain evidence",
        "xlabel": "update on the intermediate hypothesis",
        "ylabel": "propagated update",
    },
}


def read_csv(path, kind):
    """Load and validate the CSV for the given kind.

    Returns (x values, {column: values}). Raises ValueError with a column
    diff on contract mismatch and on header-only files.
    """
    contract = KINDS[kind]
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file")
        if header != contract["columns"]:
            missing = [c for c in contract["columns"] if c not in header]
            extra = [c for c in header if c not in contract["columns"]]
            raise ValueError(
                f"{path}: columns do not match the {kind} contract; "
                f"missing {missing}, unexpected {extra}"
            )
        rows = [[float(v) for v in row] for row in reader]
    if not rows:
        raise ValueError(f"{path}: no data rows")
    by_name = {name: [row[i] for row in rows] for i, name in enumerate(header)}
    return by_name[contract["x"]], by_name


def build_figure(csv_path, kind):
    """Plot one curve per contracted value column; returns the figure."""
    contract = KINDS[kind]
    x, columns = read_csv(csv_path, kind)
    fig, ax = plt.subplots(figsize=(7, 5))
    for name in contract["curves"]:
        ax.plot(x, columns[name], label=name)
    ax.set_title(contract["title"])
    ax.set_xlabel(contract["xlabel"])
    ax.set_ylabel(contract["ylabel"])
    ax.legend()
    ax.grid(True, alpha=0.3)
    return fig


def render(csv_path, kind, out_path):
    """Build the figure for the CSV and write it to the image path."""
    fig = build_figure(csv_path, kind)
    fig.savefig(out_path)
    plt.close(fig)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, help="input CSV from `deltanet compare`")
    parser.add_argument("--kind", required=True, choices=sorted(KINDS))
    parser.add_argument("--out", required=True, help="output image path")
    args = parser.parse_args(argv)
    try:
        render(args.csv, args.kind, args.out)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

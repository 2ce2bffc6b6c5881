#!/usr/bin/env python3
"""Plot covsim sweep CSVs.

Usage: plot_figures.py sweep.csv [more.csv ...]

Each CSV is drawn to <name>.png next to it. The first column is the x axis;
every other column becomes one line. Provenance lines starting with '#' are
skipped.
"""

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402


def plot(path: Path) -> Path:
    table = pd.read_csv(path, comment="#")
    x = table.columns[0]
    fig, ax = plt.subplots(figsize=(6, 4))
    for column in table.columns[1:]:
        ax.plot(table[x], table[column], marker="o", markersize=3, label=column)
    ax.set_xlabel(x)
    if x == "channels":
        ax.set_yscale("log")
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    out = path.with_suffix(".png")
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def main(argv: list[str]) -> int:
    if len(argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 1
    for name in argv[1:]:
        print(plot(Path(name)))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))

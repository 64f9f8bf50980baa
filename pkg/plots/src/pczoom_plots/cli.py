"""Command line figure renderer.

Usage:
  pczoom-plot regret <aggregate.csv> -o <image> [--png] [--title TEXT]
  pczoom-plot fairness <fairness.csv> -o <image> [--png] [--title TEXT]

SVG by default; PNG when --png is passed or the output suffix is .png.
Exit codes: 0 success, 1 schema or I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .figures import plot_fairness, plot_regret
from .io import SchemaError


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="pczoom-plot",
        description="Render experiment CSVs into regret and fairness figures.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (("regret", "cumulative regret per policy with SE bands"),
                       ("fairness", "six Pareto-band bins per policy")):
        p = sub.add_parser(name, help=text)
        p.add_argument("csv", help="input CSV produced by the experiment harness")
        p.add_argument("-o", "--output", required=True, help="output image path")
        p.add_argument("--png", action="store_true", help="render PNG instead of SVG")
        p.add_argument("--title", default=None, help="override the figure title")
    args = parser.parse_args(argv)
    render = plot_regret if args.command == "regret" else plot_fairness
    try:
        out = render(args.csv, args.output, title=args.title, force_png=args.png)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""plotkit command line: heatmap and bars subcommands.

Prints the renderer's JSON self-report to stdout.  Exit codes: 0 ok,
1 contract/domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .io import ContractError
from .render import render_bars, render_heatmap


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plotkit",
        description="Render experiment CSVs into figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("heatmap", help="defender x attacker heatmap from matrix.csv")
    p.add_argument("csv")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--title", default=None)

    p = sub.add_parser("bars", help="sorted defense bars from best_response.csv")
    p.add_argument("csv")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--title", default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "heatmap":
            report = render_heatmap(args.csv, args.output, args.title)
        else:
            report = render_bars(args.csv, args.output, args.title)
    except (ContractError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(report, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())

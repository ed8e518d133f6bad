# Shared pieces of the subcommand parsers
import json
from argparse import ArgumentParser
from fractions import Fraction

from harness.runconfig import parse_rational

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def add_input_argument(parser: ArgumentParser) -> None:
    parser.add_argument(
        "input",
        help="named graph (e.g. petersen, k3,3+k3,3), a file with an edge list or graph6 lines, or a graph6 string",
    )


def add_json_flag(parser: ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="print machine-readable JSON instead of a table")


def rational(text: str) -> Fraction:
    """argparse type for exact rationals such as 1/2 or 3."""
    return parse_rational(text)


def print_json(data) -> None:
    print(json.dumps(data, indent=2))


def bits(value: float | None) -> str:
    return "-" if value is None else f"{value:.6f}"

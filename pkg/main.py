import argparse
import os
import sys
import traceback

from dotenv import load_dotenv

# Load .env before logging_utils reads INDSET_LOG_DIR / INDSET_LOG_LEVEL
load_dotenv()

from logging_utils import main_logger  # noqa: E402
from commands import audit_entropy, bounds, count, layers, sweep, verify  # noqa: E402
from commands.common import EXIT_USAGE  # noqa: E402
from indset.errors import CapacityError, DomainError, IndsetError, ParseError  # noqa: E402

CLI_VERSION = "1.0.0"
CLI_TITLE = "indset-bounds"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=CLI_TITLE,
        description="Exact independent-set counting and verification of extremal bounds on small graphs",
    )
    parser.add_argument("--version", action="version", version=f"{CLI_TITLE} {CLI_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (count, bounds, verify, sweep, audit_entropy, layers):
        command.register(subparsers)
    return parser


def global_exception_handler(exc: Exception) -> int:
    match exc:
        case ParseError() | DomainError() | CapacityError():
            main_logger.warning(f"{type(exc).__name__}: {exc}")
            print(f"error: {exc}", file=sys.stderr)
        case IndsetError():
            main_logger.error(f"{type(exc).__name__}: {exc}")
            print(f"error: {exc}", file=sys.stderr)
        case _:
            main_logger.opt(exception=True).error(f"Unhandled exception: {exc}")
            print(f"internal error: {exc}", file=sys.stderr)
            if os.getenv("ENVIRONMENT", "development").casefold() == "development":
                traceback.print_exception(exc, file=sys.stderr)
    return EXIT_USAGE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    main_logger.debug(f"Running {args.command}")
    try:
        return args.func(args)
    except Exception as exc:
        return global_exception_handler(exc)


if __name__ == "__main__":
    sys.exit(main())
